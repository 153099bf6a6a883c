// Copyright 2026 The tgi3d Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TGI3D_SCENE_HPP
#define TGI3D_SCENE_HPP

#include <cstdint>
#include <string>

#include "tgi3d/grid.hpp"
#include "tgi3d/signal.hpp"

namespace tgi {

/// Synthetic 3D surface: per-pixel relative height (in time ticks) and
/// reflectivity, plus the shutter timing that maps height to a per-pixel
/// energy integration window. Background pixels carry reflectivity 0.
struct scene {
    std::size_t width = 0;
    std::size_t height = 0;
    grid<std::uint32_t> height_map;   // relative surface height, ticks
    grid<double> reflectivity;        // [0, 1]
    std::uint32_t base_time = 1;      // T_min: integration time of the lowest point
    std::uint32_t shutter_len = 1;    // ticks
    double tick_seconds = 1.0;
    std::string id;
};

/// Per-pixel integration time in ticks. Pixels with no object carry
/// `not_applicable` and take no part in simulation or scoring.
struct integration_time_map {
    static constexpr std::uint32_t not_applicable = 0;
    grid<std::uint32_t> ticks;
};

enum class dsnr_convention { variance, std_dev };

/// Additive white Gaussian noise level, derived from a detection SNR in
/// decibels. `sigma` is a pure function of (dsnr_db, convention, the
/// scene's maximum mean integrated energy). `dsnr_db` is +infinity for a
/// noise-free spec.
struct noise_spec {
    double dsnr_db = 0.0;
    double sigma = 0.0;
    std::uint64_t seed = 0;
    dsnr_convention convention = dsnr_convention::variance;

    static noise_spec noiseless(std::uint64_t seed = 0);
};

/// K received focal-plane frames: frame i holds reflectivity(x,y) *
/// integral_i(T(x,y)) plus one Gaussian draw per (frame, pixel).
struct measurement_cube {
    std::uint64_t num_frames = 0;  // K
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<double> frames;    // frame-major, then row-major

    struct provenance_info {
        std::string scene_id;
        std::uint64_t reference_seed = 0;
        noise_spec noise;
    } provenance;

    double at(std::uint64_t frame, std::size_t x, std::size_t y) const {
        return frames[frame * width * height + y * width + x];
    }
};

/// Four-quadrant phantom: a cone (linearly sloped, small flat apex cap),
/// an L-shaped prism, a cuboid and a cylinder with peak heights
/// 200/400/600/800 ticks, reflectivity 1 on the shapes and 0 elsewhere.
scene make_phantom_scene(std::size_t width, std::size_t height, std::uint32_t base_time,
                         std::uint32_t shutter_len);

/// 1 x N scene whose height profile ramps over [0, max_height]; with
/// steps > 0 the ramp is quantized to exactly `steps` distinct levels.
scene make_bar_scene_1d(std::size_t n, std::uint32_t max_height, std::uint32_t base_time,
                        std::uint32_t shutter_len, std::uint32_t steps = 0);

/// T(x,y) = base_time + height(x,y); not_applicable where reflectivity is 0.
integration_time_map integration_times(const scene& scn);

/// Mean over pulses of the integral at the scene's longest integration
/// time, scaled by the maximum reflectivity. This is the reference energy
/// the DSNR is defined against.
double max_mean_energy(const scene& scn, const integral_table& table);

/// Converts a DSNR in dB to a noise sigma. Variance convention:
/// sigma^2 = E / 10^(db/10); std convention: sigma = E / 10^(db/10).
double dsnr_to_sigma(double dsnr_db, double max_mean_energy,
                     dsnr_convention convention = dsnr_convention::variance);

/// Builds a noise_spec for a scene/table pair at the given DSNR.
noise_spec make_noise_spec(double dsnr_db, const scene& scn, const integral_table& table,
                           std::uint64_t seed,
                           dsnr_convention convention = dsnr_convention::variance);

/// Forward model Y = AX + n. The Gaussian draw for (frame i, pixel x,y)
/// comes from a stream keyed by (noise.seed, i, x, y), so the cube is
/// bit-identical for any worker count. Noise lands on every pixel,
/// background included.
measurement_cube simulate_capture(const scene& scn, const integral_table& table,
                                  const noise_spec& noise, unsigned workers = 0);

/// The single-shot 2D projection: exactly frame 1 of simulate_capture
/// under the same seeds. Used to locate object support.
grid<double> simulate_single_shot_2d(const scene& scn, const integral_table& table,
                                     const noise_spec& noise);

}  // namespace tgi

#endif
