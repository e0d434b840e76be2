#include "floorlab/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <future>
#include <map>
#include <set>

#include "floorlab/evaluator.hpp"
#include "floorlab/formulas.hpp"

namespace floorlab {

namespace {

using boost::multiprecision::pow;

constexpr std::uint64_t default_oracle_budget = 5'000'000;

std::uint64_t resolve_budget(std::optional<std::uint64_t> explicit_budget) {
    if (explicit_budget)
        return *explicit_budget;
    if (const char* env = std::getenv("FLOORLAB_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0)
            return v;
    }
    return default_oracle_budget;
}

// ---------------------------------------------------------------------------
// Claim checks. Each is a pure function of its ranges and reports every
// disagreement it finds; iteration order is fixed so reports are byte-stable.
// ---------------------------------------------------------------------------

std::string limits_str(const BigInt& left, const BigInt& right) {
    return "left=" + left.str() + " right=" + right.str();
}

void add_cex(ClaimResult& res, std::string inputs, std::string expected,
             std::string actual) {
    res.counterexamples.push_back(
        {std::move(inputs), std::move(expected), std::move(actual)});
}

ClaimResult check_t1(unsigned kmax, unsigned nmax) {
    ClaimResult res{ClaimId::T1,
                    "k=2.." + std::to_string(kmax) + " n=1.." +
                        std::to_string(nmax) + " m=1",
                    ClaimStatus::pass,
                    {}};
    for (unsigned k = 2; k <= kmax; ++k) {
        for (unsigned n = 1; n <= nmax; ++n) {
            const BigInt expected = theorem1_left_limit(BigInt(k), n, 1);
            const BigInt actual = left_limit(Rational(k), n, 1);
            if (expected != actual)
                add_cex(res, "k=" + std::to_string(k) + " n=" + std::to_string(n),
                        expected.str(), actual.str());
        }
    }
    if (!res.counterexamples.empty())
        res.status = ClaimStatus::fail;
    return res;
}

ClaimResult check_t1_delta(unsigned kmax, unsigned nmax) {
    ClaimResult res{ClaimId::T1_delta,
                    "k=2.." + std::to_string(kmax) + " n=1.." +
                        std::to_string(nmax) + " samples=7",
                    ClaimStatus::pass,
                    {}};
    for (unsigned k = 2; k <= kmax; ++k) {
        for (unsigned n = 1; n <= nmax; ++n) {
            const Rational delta = theorem1_delta(BigInt(k), n);
            const BigInt expected = theorem1_left_limit(BigInt(k), n, 1);
            for (unsigned j = 1; j <= 7; ++j) {
                const Rational x = Rational(k) - delta * Rational(j, 8);
                const BigInt actual = eval_fn(x, n, 1);
                if (actual != expected)
                    add_cex(res,
                            "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                " x=" + x.str(),
                            expected.str(), actual.str());
            }
        }
    }
    if (!res.counterexamples.empty())
        res.status = ClaimStatus::fail;
    return res;
}

ClaimResult check_lemma(unsigned kmax, unsigned nmax, unsigned mmax) {
    ClaimResult res{ClaimId::Lemma,
                    "k=2.." + std::to_string(kmax) + " n=1.." +
                        std::to_string(nmax) + " m=1.." + std::to_string(mmax),
                    ClaimStatus::pass,
                    {}};
    for (unsigned k = 2; k <= kmax; ++k) {
        const BigInt kb(k);
        for (unsigned n = 1; n <= nmax; ++n) {
            const BigInt jump_rem = (pow(kb, n) - 1) % (kb - 1);
            if (jump_rem != 0)
                add_cex(res, "k=" + std::to_string(k) + " n=" + std::to_string(n),
                        "(k^n - 1) mod (k - 1) = 0", "remainder " + jump_rem.str());
            for (unsigned m = 1; m <= mmax; ++m) {
                const BigInt km = pow(kb, m);
                const BigInt rem = ((km - 2) * pow(kb, m * n) + 1) % (km - 1);
                if (rem != 0)
                    add_cex(res,
                            "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                " m=" + std::to_string(m),
                            "((k^m - 2)k^(mn) + 1) mod (k^m - 1) = 0",
                            "remainder " + rem.str());
            }
        }
    }
    if (!res.counterexamples.empty())
        res.status = ClaimStatus::fail;
    return res;
}

// Shared by T4 and C7: compare a predicted point list against the computed
// jumps of f_depth on [k, k+1), reporting absences in both directions and
// any one-sided limit that disagrees.
void compare_predictions(ClaimResult& res, const std::string& k_tag,
                         const std::vector<PredictedPoint>& predicted,
                         const std::vector<Discontinuity>& computed) {
    std::map<Rational, const PredictedPoint*> pred;
    for (const PredictedPoint& p : predicted)
        pred.emplace(p.at, &p);
    std::map<Rational, const Discontinuity*> comp;
    for (const Discontinuity& d : computed)
        comp.emplace(d.at, &d);

    for (const auto& [at, p] : pred) {
        auto it = comp.find(at);
        if (it == comp.end()) {
            add_cex(res, k_tag + " at=" + at.str(),
                    limits_str(p->predicted_left, p->predicted_right), "absent");
        } else if (p->predicted_left != it->second->left ||
                   p->predicted_right != it->second->right) {
            add_cex(res, k_tag + " at=" + at.str(),
                    limits_str(p->predicted_left, p->predicted_right),
                    limits_str(it->second->left, it->second->right));
        }
    }
    for (const auto& [at, d] : comp) {
        if (!pred.count(at))
            add_cex(res, k_tag + " at=" + at.str(), "absent",
                    limits_str(d->left, d->right));
    }
}

ClaimResult check_t4(unsigned kmax) {
    ClaimResult res{ClaimId::T4, "k=1.." + std::to_string(kmax),
                    ClaimStatus::pass, {}};
    for (unsigned k = 1; k <= kmax; ++k) {
        compare_predictions(res, "k=" + std::to_string(k), f2_points(BigInt(k)),
                            discontinuities(2, Rational(k), Rational(k + 1)));
    }
    if (!res.counterexamples.empty())
        res.status = ClaimStatus::fail;
    return res;
}

ClaimResult check_f2count(unsigned hmax) {
    ClaimResult res{ClaimId::C_f2count, "h=2.." + std::to_string(hmax),
                    ClaimStatus::pass, {}};
    for (unsigned h = 2; h <= hmax; ++h) {
        const BigInt expected = f2_count(BigInt(h));
        const BigInt actual = count_discontinuities(2, Rational(1), Rational(h));
        if (expected != actual)
            add_cex(res, "h=" + std::to_string(h), expected.str(), actual.str());
    }
    if (!res.counterexamples.empty())
        res.status = ClaimStatus::fail;
    return res;
}

ClaimResult check_t5(const Rational& a, const Rational& b, unsigned nmax) {
    ClaimResult res{ClaimId::T5,
                    "n=1.." + std::to_string(nmax) + " on [" + a.str() + "," +
                        b.str() + ")",
                    ClaimStatus::pass,
                    {}};
    std::set<Rational> prev;
    for (unsigned n = 1; n <= nmax; ++n) {
        std::set<Rational> cur;
        for (const Discontinuity& d : discontinuities(n, a, b))
            cur.insert(d.at);
        if (n >= 2) {
            for (const Rational& p : prev) {
                if (!cur.count(p))
                    add_cex(res, "n=" + std::to_string(n) + " at=" + p.str(),
                            "jump point of depth " + std::to_string(n - 1) +
                                " persists at depth " + std::to_string(n),
                            "absent");
            }
            if (cur.size() <= prev.size())
                add_cex(res, "n=" + std::to_string(n),
                        "strictly more jump points than depth " +
                            std::to_string(n - 1),
                        std::to_string(cur.size()) + " vs " +
                            std::to_string(prev.size()));
        }
        prev = std::move(cur);
    }
    if (!res.counterexamples.empty())
        res.status = ClaimStatus::fail;
    return res;
}

ClaimResult check_t6(unsigned kmax, unsigned nmax) {
    ClaimResult res{ClaimId::T6,
                    "k=2.." + std::to_string(kmax) + " n=2.." +
                        std::to_string(nmax),
                    ClaimStatus::pass,
                    {}};
    for (unsigned k = 2; k <= kmax; ++k) {
        const Rational lo(k), hi(k + 1);
        std::vector<std::set<Rational>> points(nmax + 1);
        for (unsigned n = 1; n <= nmax; ++n)
            for (const Discontinuity& d : discontinuities(n, lo, hi))
                points[n].insert(d.at);

        for (unsigned n = 2; n <= nmax; ++n) {
            const std::string tag = "k=" + std::to_string(k) +
                                    " n=" + std::to_string(n);
            const Rational w = theorem6_witness(BigInt(k), n);
            if (!points[n].count(w))
                add_cex(res, tag + " at=" + w.str(),
                        "witness is a jump of depth " + std::to_string(n),
                        "absent");
            if (points[n - 1].count(w))
                add_cex(res, tag + " at=" + w.str(),
                        "witness is not a jump of depth " + std::to_string(n - 1),
                        "present");
            const SidedLimits sl = sided_limits(w, n, 1);
            PredictedPoint expect;
            expect.at = w;
            expect.predicted_left = pow(BigInt(k), n);
            expect.predicted_right = expect.predicted_left + 1;
            expect.source = PredictionSource::theorem6;
            if (sl.left != expect.predicted_left ||
                sl.right != expect.predicted_right)
                add_cex(res, tag + " at=" + w.str(),
                        limits_str(expect.predicted_left, expect.predicted_right),
                        limits_str(sl.left, sl.right));
            if (points[n].size() <= points[n - 1].size())
                add_cex(res, tag,
                        "jump count strictly grows with depth",
                        std::to_string(points[n].size()) + " vs " +
                            std::to_string(points[n - 1].size()));
        }
    }
    if (!res.counterexamples.empty())
        res.status = ClaimStatus::fail;
    return res;
}

ClaimResult check_c7(unsigned kmax) {
    ClaimResult res{ClaimId::C7, "k=1.." + std::to_string(kmax),
                    ClaimStatus::pass, {}};
    for (unsigned k = 1; k <= kmax; ++k) {
        compare_predictions(res, "k=" + std::to_string(k),
                            conjecture7_points(BigInt(k)),
                            discontinuities(3, Rational(k), Rational(k + 1)));
    }
    // A conjecture disagreeing with computation is a finding, not a failure.
    if (!res.counterexamples.empty())
        res.status = ClaimStatus::mismatch;
    return res;
}

ClaimResult check_jumpint(unsigned kmax, unsigned nmax) {
    ClaimResult res{ClaimId::JumpInt,
                    "k=2.." + std::to_string(kmax) + " n=1.." +
                        std::to_string(nmax),
                    ClaimStatus::pass,
                    {}};
    for (unsigned k = 2; k <= kmax; ++k) {
        for (unsigned n = 1; n <= nmax; ++n) {
            const std::string tag = "k=" + std::to_string(k) +
                                    " n=" + std::to_string(n);
            const auto jumps = discontinuities(n, Rational(k), Rational(k + 1));
            if (jumps.empty() || jumps.front().at != Rational(k)) {
                add_cex(res, tag, "first jump in [k, k+1) is at k itself",
                        jumps.empty() ? "no jumps" : jumps.front().at.str());
                continue;
            }
            const BigInt expected = jump_at_integer(BigInt(k), n);
            if (jumps.front().jump != expected)
                add_cex(res, tag, "jump " + expected.str(),
                        "jump " + jumps.front().jump.str());
        }
    }
    if (!res.counterexamples.empty())
        res.status = ClaimStatus::fail;
    return res;
}

ClaimResult check_mgen(unsigned kmax, unsigned nmax, unsigned mmax) {
    ClaimResult res{ClaimId::M_gen,
                    "k=2.." + std::to_string(kmax) + " n=1.." +
                        std::to_string(nmax) + " m=2.." + std::to_string(mmax),
                    ClaimStatus::pass,
                    {}};
    for (unsigned k = 2; k <= kmax; ++k) {
        for (unsigned n = 1; n <= nmax; ++n) {
            for (unsigned m = 2; m <= mmax; ++m) {
                const BigInt expected = theorem1_left_limit(BigInt(k), n, m);
                const BigInt actual = left_limit(Rational(k), n, m);
                if (expected != actual)
                    add_cex(res,
                            "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                                " m=" + std::to_string(m),
                            expected.str(), actual.str());
            }
        }
    }
    if (!res.counterexamples.empty())
        res.status = ClaimStatus::fail;
    return res;
}

ClaimResult dispatch_claim(ClaimId id, const SuiteConfig& c) {
    const auto k = [&c](unsigned dflt) { return c.kmax.value_or(dflt); };
    const auto n = [&c](unsigned dflt) { return c.nmax.value_or(dflt); };
    const auto m = [&c](unsigned dflt) { return c.mmax.value_or(dflt); };
    switch (id) {
    case ClaimId::T1: return check_t1(k(12), n(10));
    case ClaimId::T1_delta: return check_t1_delta(k(8), n(6));
    case ClaimId::Lemma: return check_lemma(k(50), n(20), m(3));
    case ClaimId::T4: return check_t4(k(30));
    case ClaimId::C_f2count: return check_f2count(c.hmax.value_or(50));
    case ClaimId::T5:
        return check_t5(c.interval_a.value_or(Rational(1)),
                        c.interval_b.value_or(Rational(6)), n(5));
    case ClaimId::T6: return check_t6(k(6), n(5));
    case ClaimId::C7: return check_c7(k(12));
    case ClaimId::JumpInt: return check_jumpint(k(10), n(6));
    case ClaimId::M_gen: return check_mgen(k(12), n(10), m(3));
    }
    throw internal_error("unknown claim id");
}

} // namespace

std::string_view to_string(ClaimId id) {
    switch (id) {
    case ClaimId::T1: return "T1";
    case ClaimId::T1_delta: return "T1_delta";
    case ClaimId::Lemma: return "Lemma";
    case ClaimId::T4: return "T4";
    case ClaimId::C_f2count: return "C_f2count";
    case ClaimId::T5: return "T5";
    case ClaimId::T6: return "T6";
    case ClaimId::C7: return "C7";
    case ClaimId::JumpInt: return "JumpInt";
    case ClaimId::M_gen: return "M_gen";
    }
    return "?";
}

std::optional<ClaimId> claim_from_string(std::string_view name) {
    for (ClaimId id : all_claims)
        if (to_string(id) == name)
            return id;
    return std::nullopt;
}

std::string_view to_string(ClaimStatus status) {
    switch (status) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::mismatch: return "mismatch";
    }
    return "?";
}

std::vector<Discontinuity> oracle_discontinuities(
    unsigned n, const Rational& a, const Rational& b,
    std::optional<std::uint64_t> budget_opt) {
    if (n == 0)
        throw domain_error("nesting depth n must be >= 1");
    if (a < Rational(1))
        throw domain_error("oracle requires 1 <= a, got a = " + a.str());
    if (!(a < b))
        throw domain_error("empty interval: a = " + a.str() + ", b = " + b.str());

    const std::uint64_t budget = resolve_budget(budget_opt);
    const BigInt max_den = pow(b.ceil(), n - 1);
    if (max_den > budget)
        throw budget_error("oracle denominator bound " + max_den.str() +
                           " exceeds budget " + std::to_string(budget));

    const auto first_num = [&a](const BigInt& q) { // least p with p/q >= a
        return ceil_div(a.num() * q, a.den());
    };
    const auto end_num = [&b](const BigInt& q) { // least p with p/q >= b
        return ceil_div(b.num() * q, b.den());
    };

    BigInt raw_count = 0;
    for (BigInt q = 1; q <= max_den; ++q) {
        raw_count += end_num(q) - first_num(q);
        if (raw_count > budget)
            throw budget_error("oracle candidate count exceeds budget " +
                               std::to_string(budget) + " (denominators up to " +
                               max_den.str() + ")");
    }

    // Farey-style enumeration: reduced p/q in [a, b), q <= max_den.
    std::vector<Rational> candidates;
    candidates.reserve(static_cast<std::size_t>(raw_count));
    for (BigInt q = 1; q <= max_den; ++q) {
        const BigInt end = end_num(q);
        for (BigInt p = first_num(q); p < end; ++p)
            if (gcd(p, q) == 1)
                candidates.emplace_back(p, q);
    }
    std::sort(candidates.begin(), candidates.end());

    // Closest representable point below a: no breakpoint can sit between it
    // and the first candidate, so the gap midpoints sample constant stretches.
    Rational below_a(a.num() - 1, a.den());
    for (BigInt q = 1; q <= max_den; ++q) {
        Rational cand(first_num(q) - 1, q);
        if (below_a < cand)
            below_a = std::move(cand);
    }

    const Rational half(1, 2);
    std::vector<BigInt> gap_values;
    gap_values.reserve(candidates.size() + 1);
    const Rational* prev = &below_a;
    for (const Rational& c : candidates) {
        gap_values.push_back(eval_fn((*prev + c) * half, n, 1));
        prev = &c;
    }
    gap_values.push_back(eval_fn((*prev + b) * half, n, 1));

    std::vector<Discontinuity> out;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (gap_values[i] != gap_values[i + 1])
            out.push_back({candidates[i], gap_values[i], gap_values[i + 1],
                           gap_values[i + 1] - gap_values[i]});
    }
    return out;
}

ClaimResult check_claim(ClaimId id, const SuiteConfig& config) {
    return dispatch_claim(id, config);
}

VerificationReport run_suite(const SuiteConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();

    // Requested claims in fixed enum order, deduplicated.
    std::vector<ClaimId> order;
    for (ClaimId id : all_claims) {
        const bool wanted = std::find(config.claims.begin(), config.claims.end(),
                                      id) != config.claims.end();
        if (wanted)
            order.push_back(id);
    }

    struct Outcome {
        ClaimResult result;
        bool aborted = false;
    };
    const auto run_one = [&config](ClaimId id) -> Outcome {
        try {
            return {check_claim(id, config), false};
        } catch (const budget_error& e) {
            return {ClaimResult{id,
                                "-",
                                ClaimStatus::fail,
                                {{"-", "claim completes within budget", e.what()}}},
                    true};
        }
    };

    std::vector<Outcome> outcomes(order.size());
    if (config.threads > 1 && order.size() > 1) {
        // Waves of at most `threads` concurrent claims; merge order is fixed.
        std::size_t next = 0;
        while (next < order.size()) {
            const std::size_t wave =
                std::min<std::size_t>(config.threads, order.size() - next);
            std::vector<std::future<Outcome>> futures;
            futures.reserve(wave);
            for (std::size_t i = 0; i < wave; ++i)
                futures.push_back(std::async(std::launch::async, run_one,
                                             order[next + i]));
            for (std::size_t i = 0; i < wave; ++i)
                outcomes[next + i] = futures[i].get();
            next += wave;
        }
    } else {
        for (std::size_t i = 0; i < order.size(); ++i)
            outcomes[i] = run_one(order[i]);
    }

    VerificationReport report;
    for (Outcome& o : outcomes) {
        if (o.aborted)
            report.complete = false;
        switch (o.result.status) {
        case ClaimStatus::pass: ++report.passed; break;
        case ClaimStatus::fail: ++report.failed; break;
        case ClaimStatus::mismatch: ++report.mismatched; break;
        }
        report.claims.push_back(std::move(o.result));
    }
    report.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - t0)
                         .count();
    return report;
}

} // namespace floorlab
