#pragma once

#include <vector>

#include "floorlab/evaluator.hpp"
#include "floorlab/rational.hpp"

namespace floorlab {

/// Maximal half-open interval [lo, hi) on which f_n is constant.
struct StepInterval {
    Rational lo; // inclusive
    Rational hi; // exclusive
    BigInt value;
};

/// A jump of f_n: both one-sided limits exist and differ by `jump`.
struct Discontinuity {
    Rational at;
    BigInt left;
    BigInt right;
    BigInt jump; // right - left, >= 1 on x >= 1
};

/// Ordered maximal constancy intervals tiling [a, b) exactly:
/// first lo = a, last hi = b, consecutive hi = next lo, and values strictly
/// increase across consecutive intervals.
struct Partition {
    unsigned n = 1;
    Rational a;
    Rational b;
    std::vector<StepInterval> intervals;
    /// Number of equal-value merges performed while refining. The nesting
    /// property of the breakpoint sets predicts 0; the verifier asserts it.
    int defensive_merges = 0;
};

/// Exact partition of [a, b) into the constancy intervals of f_n, 1 <= a < b.
///
/// Level 1 cuts at the integers; from level j to j+1, each interval (l, u, v)
/// is cut at t/v for every integer t with v*l < t < v*u (there f_{j+1} equals
/// floor(v*x), whose pieces carry the value t). Breakpoints are generated, not
/// searched, so the enumeration is complete by induction on depth.
///
/// m != 1 is refused with unsupported_error: the breakpoints of floor(x^m ...)
/// are irrational m-th roots, which exact rational sweeps cannot represent.
Partition partition(unsigned n, const Rational& a, const Rational& b, unsigned m = 1);

/// All jumps of f_n in [a, b): one entry per interior partition boundary plus
/// the boundary point a itself when f_n genuinely jumps there. Left/right
/// values agree with the limit recurrences at every point.
std::vector<Discontinuity> discontinuities(unsigned n, const Rational& a,
                                           const Rational& b, unsigned m = 1);

/// |P(a, b, f_n)|: the number of entries discontinuities() would return.
BigInt count_discontinuities(unsigned n, const Rational& a, const Rational& b,
                             unsigned m = 1);

} // namespace floorlab
