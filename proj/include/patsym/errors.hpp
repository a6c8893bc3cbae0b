#pragma once

#include <stdexcept>

namespace patsym {

// Thrown when a request exceeds the built-in exhaustive-search guards.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by explain_pair when the two patterns do not actually share a
// signature on the tested range.
struct NotEquivalentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace patsym
