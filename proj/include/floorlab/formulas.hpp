#pragma once

#include <vector>

#include "floorlab/rational.hpp"

namespace floorlab {

/// Which closed form produced a prediction. When the same point is predicted
/// by several sources, the more specific one wins (integer > theorem4 >
/// conjecture7).
enum class PredictionSource { integer, theorem4, conjecture7, theorem6 };

const char* to_string(PredictionSource source);

/// A point together with the one-sided limits a closed form predicts for it.
/// Predictions are inputs to verification, never ground truth.
struct PredictedPoint {
    Rational at;
    BigInt predicted_left;
    BigInt predicted_right;
    PredictionSource source = PredictionSource::conjecture7;
};

/// Left limit of f_{n,m} at an integer k >= 2 in closed form:
///   ((k^m - 2) * k^(m*n) + 1) / (k^m - 1)
/// The division is exact; an inexact one throws internal_error (it cannot
/// happen: the numerator is divisible by k^m - 1 for every k, n, m).
BigInt theorem1_left_limit(const BigInt& k, unsigned n, unsigned m = 1);

/// Width of the left neighborhood (k - delta_n, k) on which f_n (m = 1) is
/// constant and equal to theorem1_left_limit(k, n, 1):
///   delta_n = (k - 1) / ((k - 2) * k^(n-1) + 1)
Rational theorem1_delta(const BigInt& k, unsigned n);

/// Jump of f_n at an integer k >= 2: (k^n - 1) / (k - 1), exact division.
/// Not defined at k = 1 (the closed form is singular there; the computed
/// jump at x = 1 is 1).
BigInt jump_at_integer(const BigInt& k, unsigned n);

/// The k jumps of f_2 in [k, k+1): the points k + r/k for r = 0..k-1 with
/// limits (k^2 + r - 1, k^2 + r) for r >= 1. The r = 0 entry is the integer
/// point with limits (theorem1_left_limit(k, 2, 1), k^2); for k = 1 the left
/// value is 0 (the function vanishes on (0, 1)).
std::vector<PredictedPoint> f2_points(const BigInt& k);

/// |P(1, h, f_2)| = h * (h - 1) / 2 for h >= 2.
BigInt f2_count(const BigInt& h);

/// The conjectured jump set of f_3 in [k, k+1) with predicted one-sided
/// limits, sorted ascending and deduplicated:
///   - inner family k + ((k+1)i + p)/(k^2 + i), i, p in 0..k-1, with limits
///     (k^3 + 2ik + i + p - 1, k^3 + 2ik + i + p);
///   - the f_2 points k + r/k, whose f_3 jump is conjectured to be k + 1;
///     their predicted right limit floor((k^2+r)^2 / k) is the proven
///     push-through of the f_2 value, so the conjectural content sits
///     entirely in predicted_left = predicted_right - (k + 1);
///   - the integer point with limits (theorem1_left_limit(k, 3, 1), k^3),
///     i.e. jump k^2 + k + 1.
std::vector<PredictedPoint> conjecture7_points(const BigInt& k);

/// The point k + 1/k^(n-1), a jump of f_n that is not a jump of f_{n-1};
/// its f_n limits are (k^n, k^n + 1). Requires k >= 2, n >= 2.
Rational theorem6_witness(const BigInt& k, unsigned n);

} // namespace floorlab
