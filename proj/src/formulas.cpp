#include "floorlab/formulas.hpp"

#include <map>

namespace floorlab {

namespace {

using boost::multiprecision::pow;

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
    BigInt q, r;
    divide_qr(num, den, q, r);
    if (r != 0)
        throw internal_error(std::string("inexact division in ") + what + ": " +
                             num.str() + " / " + den.str());
    return q;
}

void require_k_at_least(const BigInt& k, long long min, const char* what) {
    if (k < min)
        throw domain_error(std::string(what) + " requires k >= " +
                           std::to_string(min) + ", got " + k.str());
}

int source_rank(PredictionSource s) {
    switch (s) {
    case PredictionSource::integer: return 0;
    case PredictionSource::theorem4: return 1;
    case PredictionSource::theorem6: return 2;
    case PredictionSource::conjecture7: return 3;
    }
    return 3;
}

} // namespace

const char* to_string(PredictionSource source) {
    switch (source) {
    case PredictionSource::integer: return "integer";
    case PredictionSource::theorem4: return "theorem4";
    case PredictionSource::conjecture7: return "conjecture7";
    case PredictionSource::theorem6: return "theorem6";
    }
    return "?";
}

BigInt theorem1_left_limit(const BigInt& k, unsigned n, unsigned m) {
    require_k_at_least(k, 2, "theorem1_left_limit");
    if (n == 0 || m == 0)
        throw domain_error("theorem1_left_limit requires n >= 1 and m >= 1");
    const BigInt km = pow(k, m);
    return exact_div((km - 2) * pow(k, m * n) + 1, km - 1, "theorem1_left_limit");
}

Rational theorem1_delta(const BigInt& k, unsigned n) {
    require_k_at_least(k, 2, "theorem1_delta");
    if (n == 0)
        throw domain_error("theorem1_delta requires n >= 1");
    return Rational(k - 1, (k - 2) * pow(k, n - 1) + 1);
}

BigInt jump_at_integer(const BigInt& k, unsigned n) {
    require_k_at_least(k, 2, "jump_at_integer");
    if (n == 0)
        throw domain_error("jump_at_integer requires n >= 1");
    return exact_div(pow(k, n) - 1, k - 1, "jump_at_integer");
}

std::vector<PredictedPoint> f2_points(const BigInt& k) {
    require_k_at_least(k, 1, "f2_points");
    const BigInt k2 = k * k;

    std::vector<PredictedPoint> out;
    PredictedPoint at_k;
    at_k.at = Rational(k);
    at_k.predicted_left = (k >= 2) ? theorem1_left_limit(k, 2, 1) : BigInt(0);
    at_k.predicted_right = k2;
    at_k.source = PredictionSource::integer;
    out.push_back(std::move(at_k));

    for (BigInt r = 1; r < k; ++r)
        out.push_back({Rational(k2 + r, k), k2 + r - 1, k2 + r,
                       PredictionSource::theorem4});
    return out;
}

BigInt f2_count(const BigInt& h) {
    require_k_at_least(h, 2, "f2_count");
    return exact_div(h * (h - 1), 2, "f2_count");
}

std::vector<PredictedPoint> conjecture7_points(const BigInt& k) {
    require_k_at_least(k, 1, "conjecture7_points");
    const BigInt k2 = k * k;
    const BigInt k3 = k2 * k;

    std::map<Rational, PredictedPoint> merged;
    auto insert = [&merged](PredictedPoint p) {
        auto [it, fresh] = merged.try_emplace(p.at, p);
        if (!fresh && source_rank(p.source) < source_rank(it->second.source))
            it->second = std::move(p);
    };

    // Inner family; (i, p) = (0, 0) is the integer itself and is emitted
    // separately with its closed-form limits.
    for (BigInt i = 0; i < k; ++i) {
        for (BigInt p = 0; p < k; ++p) {
            if (i == 0 && p == 0)
                continue;
            const BigInt base = k3 + 2 * i * k + i + p;
            insert({Rational(k) + Rational((k + 1) * i + p, k2 + i), base - 1,
                    base, PredictionSource::conjecture7});
        }
    }

    // f_2 breakpoints, conjectured f_3 jump k + 1.
    for (BigInt r = 1; r < k; ++r) {
        const BigInt right = k3 + 2 * k * r + floor_div(r * r, k);
        insert({Rational(k2 + r, k), right - (k + 1), right,
                PredictionSource::theorem4});
    }

    PredictedPoint at_k;
    at_k.at = Rational(k);
    at_k.predicted_left = (k >= 2) ? theorem1_left_limit(k, 3, 1) : BigInt(0);
    at_k.predicted_right = k3;
    at_k.source = PredictionSource::integer;
    insert(std::move(at_k));

    std::vector<PredictedPoint> out;
    out.reserve(merged.size());
    for (auto& [at, p] : merged)
        out.push_back(std::move(p));
    return out;
}

Rational theorem6_witness(const BigInt& k, unsigned n) {
    require_k_at_least(k, 2, "theorem6_witness");
    if (n < 2)
        throw domain_error("theorem6_witness requires n >= 2");
    const BigInt den = pow(k, n - 1);
    return Rational(k * den + 1, den);
}

} // namespace floorlab
