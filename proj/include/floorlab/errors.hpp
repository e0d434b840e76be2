#pragma once

#include <stdexcept>

namespace floorlab {

/// Invalid mathematical input (x <= 0, k < 2, empty interval, ...).
struct domain_error : std::domain_error {
    using std::domain_error::domain_error;
};

/// Malformed textual input (rational literals, claim names).
struct parse_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Request is well-formed but outside what exact arithmetic can enumerate.
struct unsupported_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A sweep would exceed the configured candidate budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A "cannot happen" invariant failed (e.g. an inexact closed-form division).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace floorlab
