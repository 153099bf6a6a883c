// Copyright 2026 The tgi3d Authors
// SPDX-License-Identifier: Apache-2.0

#include "tgi3d/signal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tgi3d/errors.hpp"
#include "tgi3d/parallel.hpp"
#include "tgi3d/rng.hpp"

namespace tgi {

namespace {

// Fixed row-block size for the column-statistics reduction. Partial sums
// are combined in block order, never in thread-completion order, so the
// statistics are bit-identical for any worker count.
constexpr std::uint64_t kStatBlock = 4096;

void check_dims(std::uint64_t num_pulses, std::uint64_t pulse_len) {
    if (num_pulses == 0 || pulse_len == 0)
        throw invalid_dimension_error("reference set dimensions must be positive (K=" +
                                      std::to_string(num_pulses) +
                                      ", P=" + std::to_string(pulse_len) + ")");
    if (pulse_len > std::numeric_limits<std::uint64_t>::max() / num_pulses ||
        num_pulses * pulse_len > (std::uint64_t{1} << 36))
        throw invalid_dimension_error("reference set is too large: K*P exceeds 2^36 samples");
}

}  // namespace

reference_set generate_reference(std::uint64_t num_pulses, std::uint64_t pulse_len,
                                 std::uint64_t seed, double tick_seconds, unsigned workers) {
    check_dims(num_pulses, pulse_len);
    if (!(tick_seconds > 0.0) || !std::isfinite(tick_seconds))
        throw invalid_input_error("tick_seconds must be positive and finite");

    reference_set ref;
    ref.num_pulses = num_pulses;
    ref.pulse_len = pulse_len;
    ref.seed = seed;
    ref.tick_seconds = tick_seconds;
    ref.samples.resize(num_pulses * pulse_len);

    double* samples = ref.samples.data();
    parallel_for(num_pulses, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            rng256 rng(stream_key(seed, i));
            double* row = samples + i * pulse_len;
            for (std::uint64_t t = 0; t < pulse_len; ++t) row[t] = rng.uniform01();
        }
    });
    return ref;
}

integral_table build_integral_table(const reference_set& ref, unsigned workers) {
    check_dims(ref.num_pulses, ref.pulse_len);
    if (ref.samples.size() != ref.num_pulses * ref.pulse_len)
        throw invalid_dimension_error("reference sample buffer does not match K*P");
    if (!(ref.tick_seconds > 0.0)) throw invalid_input_error("tick_seconds must be positive");

    const std::uint64_t num_pulses = ref.num_pulses;
    const std::uint64_t pulse_len = ref.pulse_len;
    const double tick = ref.tick_seconds;

    integral_table table;
    table.num_pulses = num_pulses;
    table.pulse_len = pulse_len;
    table.tick_seconds = tick;
    table.integrals.resize(num_pulses * pulse_len);

    // Neumaier-compensated running sums. The integrand is nonnegative, so
    // rows are clamped nondecreasing; the clamp moves a value by at most
    // one rounding-error term.
    const double* samples = ref.samples.data();
    double* integrals = table.integrals.data();
    parallel_for(num_pulses, workers, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const double* in = samples + i * pulse_len;
            double* out = integrals + i * pulse_len;
            double sum = 0.0, comp = 0.0, prev = 0.0;
            for (std::uint64_t t = 0; t < pulse_len; ++t) {
                const double x = in[t];
                if (!(x >= 0.0) || !std::isfinite(x))
                    throw invalid_input_error("reference samples must be finite and nonnegative");
                const double next = sum + x;
                if (std::abs(sum) >= std::abs(x))
                    comp += (sum - next) + x;
                else
                    comp += (x - next) + sum;
                sum = next;
                prev = std::max(prev, (sum + comp) * tick);
                out[t] = prev;
            }
        }
    });

    // Column means, reduced over fixed row blocks.
    const std::uint64_t nblocks = (num_pulses + kStatBlock - 1) / kStatBlock;
    std::vector<double> block_sums(nblocks * pulse_len, 0.0);
    parallel_for(nblocks, workers, [&](std::size_t bbegin, std::size_t bend) {
        for (std::size_t b = bbegin; b < bend; ++b) {
            double* acc = block_sums.data() + b * pulse_len;
            const std::uint64_t row_end = std::min(num_pulses, (b + 1) * kStatBlock);
            for (std::uint64_t i = b * kStatBlock; i < row_end; ++i) {
                const double* row = integrals + i * pulse_len;
                for (std::uint64_t t = 0; t < pulse_len; ++t) acc[t] += row[t];
            }
        }
    });
    table.column_means.assign(pulse_len, 0.0);
    for (std::uint64_t b = 0; b < nblocks; ++b) {
        const double* acc = block_sums.data() + b * pulse_len;
        for (std::uint64_t t = 0; t < pulse_len; ++t) table.column_means[t] += acc[t];
    }
    for (double& m : table.column_means) m /= static_cast<double>(num_pulses);

    // Centered L2 norms, same reduction scheme.
    std::fill(block_sums.begin(), block_sums.end(), 0.0);
    const double* means = table.column_means.data();
    parallel_for(nblocks, workers, [&](std::size_t bbegin, std::size_t bend) {
        for (std::size_t b = bbegin; b < bend; ++b) {
            double* acc = block_sums.data() + b * pulse_len;
            const std::uint64_t row_end = std::min(num_pulses, (b + 1) * kStatBlock);
            for (std::uint64_t i = b * kStatBlock; i < row_end; ++i) {
                const double* row = integrals + i * pulse_len;
                for (std::uint64_t t = 0; t < pulse_len; ++t) {
                    const double d = row[t] - means[t];
                    acc[t] += d * d;
                }
            }
        }
    });
    table.column_center_norms.assign(pulse_len, 0.0);
    for (std::uint64_t b = 0; b < nblocks; ++b) {
        const double* acc = block_sums.data() + b * pulse_len;
        for (std::uint64_t t = 0; t < pulse_len; ++t) table.column_center_norms[t] += acc[t];
    }
    for (double& n : table.column_center_norms) n = std::sqrt(n);

    return table;
}

}  // namespace tgi
