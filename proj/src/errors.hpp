#pragma once

#include <stdexcept>
#include <string>

namespace torelli {

/// Invalid domain parameters (genus/k out of the theorem range, bad basis
/// data, mismatched dimensions). Messages quote the violated bound.
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed CLI input: unknown proposition id, bad flag combination.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Exact integer arithmetic left the 64-bit range. All lattice arithmetic
/// faults loudly instead of wrapping.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Cross-check between two independent computation routes disagreed.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace torelli
