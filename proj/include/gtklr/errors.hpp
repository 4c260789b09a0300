#pragma once

#include <stdexcept>
#include <string>

namespace gtklr {

// Bad user input: letters out of range, malformed patterns, words that are
// not red-good where one is required, mismatched contents.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Computation refused or aborted because it exceeds a configured budget
// (strand limit, rewrite-class cap, sampling retry cap).
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal invariant failed.  These conditions are guaranteed by the
// underlying theory, so hitting one signals a bug rather than bad input.
struct structural_error : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace gtklr
