#pragma once

#include <stdexcept>
#include <string>

namespace vdf {

/// Invalid design spec, malformed file, or bad user input.
struct spec_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Requested (center, bandwidth) cannot be reached with |alpha| < 1
/// and an integer decimation factor.
struct tuning_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A response curve does not have measurable bandpass shape.
struct not_bandpass_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace vdf
