#pragma once

#include <stdexcept>

namespace rdw {

// Bad config file or flag value. The CLI maps this to exit code 1.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Filesystem trouble (unreadable input, unwritable output). Exit code 2.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Degenerate or undefined analysis request (non-identifiable dataset,
// unreliable bootstrap, thresholds outside the achievable range). Exit code 3.
struct AnalysisError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace rdw
