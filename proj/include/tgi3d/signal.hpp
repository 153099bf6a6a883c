// Copyright 2026 The tgi3d Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TGI3D_SIGNAL_HPP
#define TGI3D_SIGNAL_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace tgi {

/// K randomly modulated illumination pulses of P time ticks each.
///
/// Samples are fully determined by (num_pulses, pulse_len, seed): pulse i
/// draws from a dedicated stream keyed by (seed, i), so regeneration is
/// bit-identical no matter how construction was scheduled.
struct reference_set {
    std::uint64_t num_pulses = 0;   // K
    std::uint64_t pulse_len = 0;    // P, ticks per pulse
    std::uint64_t seed = 0;
    double tick_seconds = 1.0;
    std::vector<double> samples;    // K x P, pulse-major

    double sample(std::uint64_t pulse, std::uint64_t tick) const {
        return samples[pulse * pulse_len + tick];
    }
    std::span<const double> pulse(std::uint64_t i) const {
        return {samples.data() + i * pulse_len, static_cast<std::size_t>(pulse_len)};
    }
};

/// Running time-integrals of every reference pulse, plus the per-column
/// statistics that appear in the correlation denominators.
///
/// integrals[i*P + (t'-1)] is the integral of pulse i over its first t'
/// ticks, t' in {1..P}. Rows are nondecreasing. column_means[t'-1] and
/// column_center_norms[t'-1] are the mean and the centered L2 norm of
/// column t' taken over the K pulses.
struct integral_table {
    std::uint64_t num_pulses = 0;   // K
    std::uint64_t pulse_len = 0;    // P
    double tick_seconds = 1.0;
    std::vector<double> integrals;            // K x P, pulse-major
    std::vector<double> column_means;         // P
    std::vector<double> column_center_norms;  // P

    double integral(std::uint64_t pulse, std::uint64_t t_prime) const {
        return integrals[pulse * pulse_len + (t_prime - 1)];
    }
    std::span<const double> row(std::uint64_t i) const {
        return {integrals.data() + i * pulse_len, static_cast<std::size_t>(pulse_len)};
    }
};

/// Draws K pulses of P i.i.d. uniform [0,1) samples. Throws
/// invalid_dimension_error for K = 0 or P = 0 and invalid_input_error for
/// a nonpositive tick.
reference_set generate_reference(std::uint64_t num_pulses, std::uint64_t pulse_len,
                                 std::uint64_t seed, double tick_seconds = 1.0,
                                 unsigned workers = 0);

/// Prefix-integrates every pulse and precomputes the column statistics.
/// Compensated accumulation keeps the full-window integral within 1e-12
/// relative of an exact sum up to P ~ 1e5.
integral_table build_integral_table(const reference_set& ref, unsigned workers = 0);

}  // namespace tgi

#endif
