#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "floorlab/errors.hpp"

namespace floorlab {

/// Unbounded signed integer. Holds every f_n value, jump size and closed-form
/// numerator exactly; no fixed-width fast path is part of the contract.
using BigInt = boost::multiprecision::cpp_int;

/// Quotient rounded toward -inf. The divisor must be nonzero.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divide_qr(a, b, q, r);
    if (r != 0 && (r < 0) != (b < 0)) --q;
    return q;
}

/// Quotient rounded toward +inf. The divisor must be nonzero.
inline BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    divide_qr(a, b, q, r);
    if (r != 0 && (r < 0) == (b < 0)) ++q;
    return q;
}

/// Exact rational number in canonical form: den >= 1 and gcd(|num|, den) = 1.
/// Canonical storage makes equality structural, so rationals can key maps and
/// deduplicate breakpoint sets without cross-multiplying. Values are immutable
/// after construction and every operation is pure.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}

    /// Throws domain_error when d = 0; otherwise stores the reduced form.
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
        if (den_ == 0)
            throw domain_error("rational with zero denominator");
        normalize();
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_.sign(); }

    /// Greatest integer <= *this (toward -inf, also for negatives).
    BigInt floor() const { return floor_div(num_, den_); }
    /// Least integer >= *this.
    BigInt ceil() const { return ceil_div(num_, den_); }

    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend Rational operator+(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator-(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend Rational operator*(const Rational& x, const Rational& y) {
        return Rational(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend Rational operator/(const Rational& x, const Rational& y) {
        if (y.num_ == 0)
            throw domain_error("division of rational by zero");
        return Rational(x.num_ * y.den_, x.den_ * y.num_);
    }

    friend bool operator==(const Rational& x, const Rational& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }
    friend bool operator<(const Rational& x, const Rational& y) {
        return x.num_ * y.den_ < y.num_ * x.den_;
    }
    friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
    friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
    friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

    /// Canonical text form "p/q", or "p" when the value is an integer.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

    /// Parses "p", "p/q" or signed variants; throws parse_error otherwise
    /// (including "p/0", which denotes no rational).
    static Rational parse(std::string_view text);

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        BigInt g = gcd(abs(num_), den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    BigInt num_;
    BigInt den_; // always >= 1
};

/// Reduced fraction n/d with positive denominator; throws on d = 0.
inline Rational make_rational(BigInt n, BigInt d) {
    return Rational(std::move(n), std::move(d));
}

/// Mathematical floor of a rational.
inline BigInt floor_rat(const Rational& x) { return x.floor(); }

/// x^e for a machine-range non-negative exponent; exact.
inline Rational pow_int(const Rational& x, unsigned e) {
    using boost::multiprecision::pow;
    if (e == 0)
        return Rational(1);
    return Rational(pow(x.num(), e), pow(x.den(), e));
}

} // namespace floorlab
