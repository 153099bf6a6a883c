// Copyright 2026 The tgi3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "tgi3d/scene.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tgi3d/errors.hpp"
#include "tgi3d/parallel.hpp"
#include "tgi3d/rng.hpp"

namespace tgi {

namespace {

constexpr std::uint32_t kPhantomPeaks[4] = {200, 400, 600, 800};

void check_scene_timing(std::uint32_t base_time, std::uint32_t max_height,
                        std::uint32_t shutter_len) {
    if (base_time == 0) throw invalid_input_error("base_time must be a positive tick count");
    if (static_cast<std::uint64_t>(base_time) + max_height > shutter_len)
        throw timing_violation_error(
            "shutter too short: base_time " + std::to_string(base_time) + " + max height " +
            std::to_string(max_height) + " exceeds shutter " + std::to_string(shutter_len));
}

struct quadrant {
    std::size_t x0, y0, w, h;
    double cx() const { return static_cast<double>(x0) + static_cast<double>(w - 1) / 2.0; }
    double cy() const { return static_cast<double>(y0) + static_cast<double>(h - 1) / 2.0; }
};

void paint_cone(scene& scn, const quadrant& q, std::uint32_t peak) {
    const double side = static_cast<double>(std::min(q.w, q.h));
    const double radius = 0.36 * side;
    const double cap = radius / 6.0;  // flat apex cap; slope is linear below it
    for (std::size_t y = q.y0; y < q.y0 + q.h; ++y) {
        for (std::size_t x = q.x0; x < q.x0 + q.w; ++x) {
            const double r = std::hypot(static_cast<double>(x) - q.cx(),
                                        static_cast<double>(y) - q.cy());
            if (r > radius) continue;
            const double frac = r <= cap ? 1.0 : (radius - r) / (radius - cap);
            scn.height_map(x, y) = static_cast<std::uint32_t>(std::lround(peak * frac));
            scn.reflectivity(x, y) = 1.0;
        }
    }
}

void paint_l_shape(scene& scn, const quadrant& q, std::uint32_t height) {
    const std::size_t side = std::min(q.w, q.h);
    const std::size_t box = std::max<std::size_t>(3, static_cast<std::size_t>(0.66 * side));
    const std::size_t arm = std::max<std::size_t>(1, static_cast<std::size_t>(0.4 * box));
    const std::size_t x0 = q.x0 + (q.w - box) / 2;
    const std::size_t y0 = q.y0 + (q.h - box) / 2;
    for (std::size_t y = y0; y < y0 + box; ++y) {
        for (std::size_t x = x0; x < x0 + box; ++x) {
            const bool vertical_arm = x - x0 < arm;
            const bool bottom_arm = y - y0 >= box - arm;
            if (!vertical_arm && !bottom_arm) continue;
            scn.height_map(x, y) = height;
            scn.reflectivity(x, y) = 1.0;
        }
    }
}

void paint_cuboid(scene& scn, const quadrant& q, std::uint32_t height) {
    const std::size_t side = std::min(q.w, q.h);
    const std::size_t box = std::max<std::size_t>(2, static_cast<std::size_t>(0.63 * side));
    const std::size_t x0 = q.x0 + (q.w - box) / 2;
    const std::size_t y0 = q.y0 + (q.h - box) / 2;
    for (std::size_t y = y0; y < y0 + box; ++y) {
        for (std::size_t x = x0; x < x0 + box; ++x) {
            scn.height_map(x, y) = height;
            scn.reflectivity(x, y) = 1.0;
        }
    }
}

void paint_cylinder(scene& scn, const quadrant& q, std::uint32_t height) {
    const double side = static_cast<double>(std::min(q.w, q.h));
    const double radius = 0.36 * side;
    for (std::size_t y = q.y0; y < q.y0 + q.h; ++y) {
        for (std::size_t x = q.x0; x < q.x0 + q.w; ++x) {
            const double r = std::hypot(static_cast<double>(x) - q.cx(),
                                        static_cast<double>(y) - q.cy());
            if (r > radius) continue;
            scn.height_map(x, y) = height;
            scn.reflectivity(x, y) = 1.0;
        }
    }
}

// Writes one simulated frame. Shared by simulate_capture and the
// single-shot image so the two agree bit for bit under equal seeds.
void fill_frame(const scene& scn, const integral_table& table, const integration_time_map& tmap,
                const noise_spec& noise, std::uint64_t frame, double* out) {
    const std::uint64_t pulse_len = table.pulse_len;
    const double* row = table.integrals.data() + frame * pulse_len;
    const bool noisy = noise.sigma > 0.0;
    std::size_t idx = 0;
    for (std::size_t y = 0; y < scn.height; ++y) {
        for (std::size_t x = 0; x < scn.width; ++x, ++idx) {
            const std::uint32_t t = tmap.ticks[idx];
            double value = 0.0;
            if (t != integration_time_map::not_applicable)
                value = scn.reflectivity[idx] * row[t - 1];
            if (noisy) {
                rng256 rng(stream_key(noise.seed, frame, x, y));
                value += noise.sigma * rng.gaussian();
            }
            out[idx] = value;
        }
    }
}

void check_capture_inputs(const scene& scn, const integral_table& table,
                          const noise_spec& noise) {
    if (scn.width == 0 || scn.height == 0)
        throw invalid_dimension_error("scene has zero size");
    if (!scn.height_map.same_shape(scn.reflectivity) || scn.height_map.width() != scn.width ||
        scn.height_map.height() != scn.height)
        throw invalid_dimension_error("scene maps do not match the stated width/height");
    const std::uint32_t max_h = *std::max_element(scn.height_map.begin(), scn.height_map.end());
    check_scene_timing(scn.base_time, max_h, scn.shutter_len);
    if (scn.shutter_len > table.pulse_len)
        throw timing_violation_error("shutter of " + std::to_string(scn.shutter_len) +
                                     " ticks exceeds the pulse window P=" +
                                     std::to_string(table.pulse_len));
    if (!(noise.sigma >= 0.0) || !std::isfinite(noise.sigma))
        throw invalid_input_error("noise sigma must be finite and nonnegative");
}

}  // namespace

noise_spec noise_spec::noiseless(std::uint64_t seed) {
    noise_spec spec;
    spec.dsnr_db = std::numeric_limits<double>::infinity();
    spec.sigma = 0.0;
    spec.seed = seed;
    spec.convention = dsnr_convention::variance;
    return spec;
}

scene make_phantom_scene(std::size_t width, std::size_t height, std::uint32_t base_time,
                         std::uint32_t shutter_len) {
    if (width < 16 || height < 16)
        throw invalid_dimension_error("phantom needs at least 16x16 pixels");
    check_scene_timing(base_time, kPhantomPeaks[3], shutter_len);

    scene scn;
    scn.width = width;
    scn.height = height;
    scn.height_map = grid<std::uint32_t>(width, height, 0);
    scn.reflectivity = grid<double>(width, height, 0.0);
    scn.base_time = base_time;
    scn.shutter_len = shutter_len;
    scn.id = "phantom-" + std::to_string(width) + "x" + std::to_string(height) + "-tmin" +
             std::to_string(base_time) + "-sh" + std::to_string(shutter_len);

    const std::size_t qw = width / 2;
    const std::size_t qh = height / 2;
    paint_cone(scn, {0, 0, qw, qh}, kPhantomPeaks[0]);
    paint_l_shape(scn, {qw, 0, width - qw, qh}, kPhantomPeaks[1]);
    paint_cuboid(scn, {0, qh, qw, height - qh}, kPhantomPeaks[2]);
    paint_cylinder(scn, {qw, qh, width - qw, height - qh}, kPhantomPeaks[3]);
    return scn;
}

scene make_bar_scene_1d(std::size_t n, std::uint32_t max_height, std::uint32_t base_time,
                        std::uint32_t shutter_len, std::uint32_t steps) {
    if (n == 0) throw invalid_dimension_error("bar scene needs at least one pixel");
    check_scene_timing(base_time, max_height, shutter_len);

    scene scn;
    scn.width = n;
    scn.height = 1;
    scn.height_map = grid<std::uint32_t>(n, 1, 0);
    scn.reflectivity = grid<double>(n, 1, 1.0);
    scn.base_time = base_time;
    scn.shutter_len = shutter_len;
    scn.id = "bar1d-" + std::to_string(n) + "-h" + std::to_string(max_height) + "-tmin" +
             std::to_string(base_time) + "-sh" + std::to_string(shutter_len) +
             (steps > 0 ? "-s" + std::to_string(steps) : "");

    for (std::size_t j = 0; j < n; ++j) {
        double frac = n > 1 ? static_cast<double>(j) / static_cast<double>(n - 1) : 0.0;
        if (steps == 1) {
            frac = 0.0;
        } else if (steps > 1) {
            const auto level = std::min<std::uint64_t>(steps - 1, j * steps / n);
            frac = static_cast<double>(level) / static_cast<double>(steps - 1);
        }
        scn.height_map(j, 0) = static_cast<std::uint32_t>(std::lround(frac * max_height));
    }
    return scn;
}

integration_time_map integration_times(const scene& scn) {
    integration_time_map tmap;
    tmap.ticks = grid<std::uint32_t>(scn.width, scn.height, integration_time_map::not_applicable);
    for (std::size_t i = 0; i < tmap.ticks.size(); ++i) {
        if (scn.reflectivity[i] == 0.0) continue;
        tmap.ticks[i] = scn.base_time + scn.height_map[i];
    }
    return tmap;
}

double max_mean_energy(const scene& scn, const integral_table& table) {
    std::uint32_t t_max = 0;
    double max_refl = 0.0;
    for (std::size_t i = 0; i < scn.height_map.size(); ++i) {
        if (scn.reflectivity[i] == 0.0) continue;
        t_max = std::max(t_max, scn.base_time + scn.height_map[i]);
        max_refl = std::max(max_refl, scn.reflectivity[i]);
    }
    if (t_max == 0) throw invalid_input_error("scene has no object pixels");
    if (t_max > table.pulse_len)
        throw timing_violation_error("scene integration time exceeds the pulse window");
    return table.column_means[t_max - 1] * max_refl;
}

double dsnr_to_sigma(double dsnr_db, double max_mean_energy, dsnr_convention convention) {
    if (!(max_mean_energy > 0.0) || !std::isfinite(max_mean_energy))
        throw invalid_input_error("max_mean_energy must be positive and finite");
    if (std::isnan(dsnr_db)) throw invalid_input_error("dsnr_db must not be NaN");
    const double ratio = std::pow(10.0, dsnr_db / 10.0);
    if (convention == dsnr_convention::variance) return std::sqrt(max_mean_energy / ratio);
    return max_mean_energy / ratio;
}

noise_spec make_noise_spec(double dsnr_db, const scene& scn, const integral_table& table,
                           std::uint64_t seed, dsnr_convention convention) {
    noise_spec spec;
    spec.dsnr_db = dsnr_db;
    spec.sigma = dsnr_to_sigma(dsnr_db, max_mean_energy(scn, table), convention);
    spec.seed = seed;
    spec.convention = convention;
    return spec;
}

measurement_cube simulate_capture(const scene& scn, const integral_table& table,
                                  const noise_spec& noise, unsigned workers) {
    check_capture_inputs(scn, table, noise);
    const std::uint64_t num_frames = table.num_pulses;
    const std::size_t frame_px = scn.width * scn.height;
    const integration_time_map tmap = integration_times(scn);

    measurement_cube cube;
    cube.num_frames = num_frames;
    cube.width = scn.width;
    cube.height = scn.height;
    cube.frames.resize(num_frames * frame_px);
    cube.provenance.scene_id = scn.id;
    cube.provenance.reference_seed = table.seed;
    cube.provenance.noise = noise;

    double* out = cube.frames.data();
    parallel_for(num_frames, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
            fill_frame(scn, table, tmap, noise, i, out + i * frame_px);
    });
    return cube;
}

grid<double> simulate_single_shot_2d(const scene& scn, const integral_table& table,
                                     const noise_spec& noise) {
    check_capture_inputs(scn, table, noise);
    const integration_time_map tmap = integration_times(scn);
    grid<double> image(scn.width, scn.height, 0.0);
    fill_frame(scn, table, tmap, noise, 0, image.data());
    return image;
}

}  // namespace tgi
