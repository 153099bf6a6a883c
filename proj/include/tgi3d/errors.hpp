// Copyright 2026 The tgi3d Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef TGI3D_ERRORS_HPP
#define TGI3D_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tgi {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Zero or absurd array dimensions (K = 0, P = 0, W*H overflow, ...).
struct invalid_dimension_error : error {
    using error::error;
};

/// A scalar argument outside its admissible range.
struct invalid_input_error : error {
    using error::error;
};

/// Scene timing does not fit the shutter or the pulse window.
struct timing_violation_error : error {
    using error::error;
};

/// Fewer than two measurements; correlation coefficients are undefined.
struct insufficient_samples_error : error {
    using error::error;
};

/// Every correlation entry of a pixel was undefined; no argmax exists.
struct no_estimate_error : error {
    using error::error;
};

/// A metric was requested over an empty pixel selection.
struct undefined_metric_error : error {
    using error::error;
};

/// Malformed, truncated or mislabeled file content.
struct format_error : error {
    using error::error;
};

/// Bad command line or config file input.
struct usage_error : error {
    using error::error;
};

}  // namespace tgi

#endif
