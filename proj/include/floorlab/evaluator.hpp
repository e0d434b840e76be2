#pragma once

#include "floorlab/rational.hpp"

namespace floorlab {

/// Evaluation request for the nested floor function
///   f_{n,m}(x) = floor(x^m * floor(x^m * floor(... ))),  n floors deep,
/// defined through the recurrence f_j(x) = floor(x^m * f_{j-1}(x)), f_0 = 1.
struct EvalQuery {
    Rational x;     // point, must be > 0
    unsigned n = 1; // nesting depth, >= 1
    unsigned m = 1; // exponent, >= 1
};

/// One-sided limits of f_{n,m} at a point, with the jump between them.
struct SidedLimits {
    BigInt left;
    BigInt right;
    bool is_jump = false; // left != right
    BigInt jump;          // right - left (>= 0 for x >= 1)
};

/// Exact value of f_{n,m}(x): t_1 = floor(x^m), t_{j+1} = floor(x^m * t_j).
/// O(n) big-integer operations. Throws domain_error for x <= 0, n = 0, m = 0.
BigInt eval_fn(const Rational& x, unsigned n, unsigned m = 1);
BigInt eval_fn(const EvalQuery& q);

/// Exact left limit of f_{n,m} at d, via L_0 = 1 and
/// L_j = ceil(d^m * L_{j-1}) - 1 while L > 0 (L stays 0 once it reaches 0,
/// which only happens for d <= 1 where the function vanishes to the left).
/// The ceil-1 step covers both the case where d^m * L is an integer and the
/// case where it is not, so no breakpoint test is needed.
BigInt left_limit(const Rational& d, unsigned n, unsigned m = 1);

/// Exact right limit of f_{n,m} at d: R_0 = 1, R_j = floor(d^m * R_{j-1}).
/// Equals eval_fn(d, n, m); the function is right-continuous.
BigInt right_limit(const Rational& d, unsigned n, unsigned m = 1);

/// Both limits of f_{n,m} at d in one call.
SidedLimits sided_limits(const Rational& d, unsigned n, unsigned m = 1);

} // namespace floorlab
