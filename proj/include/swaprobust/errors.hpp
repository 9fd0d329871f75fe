#pragma once

#include <stdexcept>
#include <string>

namespace swaprobust {

// Precondition violated by a caller-supplied argument.
struct InvalidArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed or inconsistent labeling file.
struct FormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact oracle refused because the instance exceeds the configured cap.
struct CapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Search ran out of its node budget.
struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A construction produced something that violates its own invariant. Always a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace swaprobust
