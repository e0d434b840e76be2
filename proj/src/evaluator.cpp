#include "floorlab/evaluator.hpp"

namespace floorlab {

namespace {

void check_query(const Rational& x, unsigned n, unsigned m) {
    if (n == 0)
        throw domain_error("nesting depth n must be >= 1");
    if (m == 0)
        throw domain_error("exponent m must be >= 1");
    if (x.sign() <= 0)
        throw domain_error("f_n is only defined for x > 0, got " + x.str());
}

} // namespace

BigInt eval_fn(const Rational& x, unsigned n, unsigned m) {
    using boost::multiprecision::pow;
    check_query(x, n, m);
    const BigInt pm = pow(x.num(), m);
    const BigInt qm = pow(x.den(), m);
    BigInt t = floor_div(pm, qm);
    for (unsigned j = 1; j < n; ++j)
        t = floor_div(pm * t, qm);
    return t;
}

BigInt eval_fn(const EvalQuery& q) { return eval_fn(q.x, q.n, q.m); }

BigInt left_limit(const Rational& d, unsigned n, unsigned m) {
    using boost::multiprecision::pow;
    check_query(d, n, m);
    const BigInt pm = pow(d.num(), m);
    const BigInt qm = pow(d.den(), m);
    BigInt level = 1;
    for (unsigned j = 0; j < n; ++j) {
        if (level == 0)
            continue; // f vanishes on a left neighborhood; the limit stays 0
        level = ceil_div(pm * level, qm) - 1;
    }
    return level;
}

BigInt right_limit(const Rational& d, unsigned n, unsigned m) {
    using boost::multiprecision::pow;
    check_query(d, n, m);
    const BigInt pm = pow(d.num(), m);
    const BigInt qm = pow(d.den(), m);
    BigInt level = 1;
    for (unsigned j = 0; j < n; ++j)
        level = floor_div(pm * level, qm);
    return level;
}

SidedLimits sided_limits(const Rational& d, unsigned n, unsigned m) {
    SidedLimits out;
    out.left = left_limit(d, n, m);
    out.right = right_limit(d, n, m);
    out.jump = out.right - out.left;
    out.is_jump = out.jump != 0;
    return out;
}

} // namespace floorlab
