#include "doctest.h"

#include <cstdlib>
#include <random>

#include "floorlab/verifier.hpp"

#include "test_util.hpp"

using namespace floorlab;

namespace {

bool same_jumps(const std::vector<Discontinuity>& a,
                const std::vector<Discontinuity>& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].at != b[i].at || a[i].left != b[i].left ||
            a[i].right != b[i].right)
            return false;
    }
    return true;
}

} // namespace

TEST_CASE("oracle agrees with the partitioner on worked intervals") {
    CHECK(same_jumps(oracle_discontinuities(2, Rational(4), Rational(5)),
                     discontinuities(2, Rational(4), Rational(5))));

    const auto f3 = oracle_discontinuities(3, Rational(2), Rational(3));
    REQUIRE(f3.size() == 5);
    CHECK(f3[0].at == Rational(2));
    CHECK(f3[1].at == Rational(9, 4));
    CHECK(f3[2].at == Rational(5, 2));
    CHECK(f3[3].at == Rational(13, 5));
    CHECK(f3[4].at == Rational(14, 5));

    const auto f1 = oracle_discontinuities(1, Rational(1), Rational(3));
    REQUIRE(f1.size() == 2);
    CHECK(f1[0].at == Rational(1));
    CHECK(f1[0].left == 0);
    CHECK(f1[0].right == 1);
    CHECK(f1[1].at == Rational(2));
}

TEST_CASE("oracle handles non-integer and fractional-endpoint windows") {
    std::mt19937_64 rng(555);
    for (int iter = 0; iter < 15; ++iter) {
        Rational a = testutil::random_rational(rng, 1, 4, 7);
        Rational b = testutil::random_rational(rng, 1, 4, 7);
        if (b < a)
            std::swap(a, b);
        if (a == b)
            b = b + Rational(1, 2);
        const unsigned n = 1 + static_cast<unsigned>(iter % 3);
        CAPTURE(a.str());
        CAPTURE(b.str());
        CHECK(same_jumps(oracle_discontinuities(n, a, b),
                         discontinuities(n, a, b)));
    }
}

TEST_CASE("limit recurrences agree with the oracle at every point it finds") {
    for (unsigned n = 1; n <= 3; ++n) {
        for (const Discontinuity& d :
             oracle_discontinuities(n, Rational(1), Rational(4))) {
            const SidedLimits sl = sided_limits(d.at, n);
            CHECK(sl.left == d.left);
            CHECK(sl.right == d.right);
            CHECK(sl.jump == d.jump);
        }
    }
}

TEST_CASE("the default-range suite passes everything except the conjecture") {
    const VerificationReport report = run_suite(SuiteConfig{});
    REQUIRE(report.claims.size() == all_claims.size());
    for (const ClaimResult& r : report.claims) {
        CAPTURE(to_string(r.claim));
        if (r.claim == ClaimId::C7)
            CHECK(r.status == ClaimStatus::mismatch);
        else
            CHECK(r.status == ClaimStatus::pass);
    }
    CHECK(report.passed == 9);
    CHECK(report.failed == 0);
    CHECK(report.mismatched == 1);
    CHECK(report.complete);
}

TEST_CASE("oracle respects its candidate budget") {
    CHECK_THROWS_AS(oracle_discontinuities(4, Rational(1), Rational(5), 10),
                    budget_error);
    CHECK_THROWS_AS(oracle_discontinuities(9, Rational(1), Rational(6), 100000),
                    budget_error);

    // The environment variable caps the budget when no explicit cap is given.
    setenv("FLOORLAB_BUDGET", "10", 1);
    CHECK_THROWS_AS(oracle_discontinuities(4, Rational(1), Rational(5)),
                    budget_error);
    unsetenv("FLOORLAB_BUDGET");
    CHECK_NOTHROW(oracle_discontinuities(2, Rational(1), Rational(3)));
}

TEST_CASE("oracle rejects out-of-domain intervals") {
    CHECK_THROWS_AS(oracle_discontinuities(2, Rational(1, 2), Rational(2)),
                    domain_error);
    CHECK_THROWS_AS(oracle_discontinuities(2, Rational(2), Rational(2)),
                    domain_error);
    CHECK_THROWS_AS(oracle_discontinuities(0, Rational(1), Rational(2)),
                    domain_error);
}

TEST_CASE("claim names round-trip") {
    for (ClaimId id : all_claims)
        CHECK(claim_from_string(to_string(id)) == id);
    CHECK_FALSE(claim_from_string("T9").has_value());
    CHECK_FALSE(claim_from_string("").has_value());
}

TEST_CASE("proved claims pass over modest ranges") {
    SuiteConfig config;
    config.kmax = 6;
    config.nmax = 4;
    config.mmax = 2;
    config.hmax = 12;
    for (ClaimId id : {ClaimId::T1, ClaimId::T1_delta, ClaimId::Lemma,
                       ClaimId::T4, ClaimId::C_f2count, ClaimId::T5, ClaimId::T6,
                       ClaimId::JumpInt, ClaimId::M_gen}) {
        const ClaimResult res = check_claim(id, config);
        CAPTURE(to_string(id));
        CHECK(res.status == ClaimStatus::pass);
        CHECK(res.counterexamples.empty());
    }
}

TEST_CASE("the conjectured f_3 set passes through k=4 and mismatches at k=5") {
    SuiteConfig through_four;
    through_four.kmax = 4;
    const ClaimResult ok = check_claim(ClaimId::C7, through_four);
    CHECK(ok.status == ClaimStatus::pass);
    CHECK(ok.counterexamples.empty());

    SuiteConfig through_five;
    through_five.kmax = 5;
    const ClaimResult res = check_claim(ClaimId::C7, through_five);
    REQUIRE(res.status == ClaimStatus::mismatch);
    REQUIRE(!res.counterexamples.empty());

    // The computed set contains 146/27, which the conjectured union misses,
    // and the conjectured jump at 27/5 is one too large.
    bool reports_unpredicted_point = false;
    bool reports_wrong_left = false;
    for (const Counterexample& c : res.counterexamples) {
        if (c.inputs == "k=5 at=146/27" && c.expected == "absent")
            reports_unpredicted_point = true;
        if (c.inputs == "k=5 at=27/5" && c.expected == "left=139 right=145" &&
            c.actual == "left=140 right=145")
            reports_wrong_left = true;
    }
    CHECK(reports_unpredicted_point);
    CHECK(reports_wrong_left);
}

TEST_CASE("run_suite covers each requested claim exactly once, in fixed order") {
    SuiteConfig config;
    config.claims = {ClaimId::T4, ClaimId::T1, ClaimId::T4}; // unordered + dup
    config.kmax = 4;
    config.nmax = 3;
    const VerificationReport report = run_suite(config);
    REQUIRE(report.claims.size() == 2);
    CHECK(report.claims[0].claim == ClaimId::T1);
    CHECK(report.claims[1].claim == ClaimId::T4);
    CHECK(report.passed == 2);
    CHECK(report.failed == 0);
    CHECK(report.mismatched == 0);
    CHECK(report.complete);
    CHECK(report.all_pass());
}

TEST_CASE("status is pass exactly when there are no counterexamples") {
    SuiteConfig config;
    config.kmax = 5;
    config.nmax = 3;
    config.hmax = 10;
    const VerificationReport report = run_suite(config);
    for (const ClaimResult& r : report.claims)
        CHECK((r.status == ClaimStatus::pass) == r.counterexamples.empty());
    // C7 reaches k=5 here, so the suite as a whole reports the mismatch.
    CHECK(report.mismatched == 1);
    CHECK_FALSE(report.all_pass());
}

TEST_CASE("serial and parallel runs produce identical reports") {
    SuiteConfig serial;
    serial.kmax = 5;
    serial.nmax = 3;
    serial.hmax = 8;
    SuiteConfig parallel = serial;
    parallel.threads = 4;

    const VerificationReport a = run_suite(serial);
    const VerificationReport b = run_suite(parallel);
    REQUIRE(a.claims.size() == b.claims.size());
    for (std::size_t i = 0; i < a.claims.size(); ++i) {
        CHECK(a.claims[i].claim == b.claims[i].claim);
        CHECK(a.claims[i].range == b.claims[i].range);
        CHECK(a.claims[i].status == b.claims[i].status);
        REQUIRE(a.claims[i].counterexamples.size() ==
                b.claims[i].counterexamples.size());
        for (std::size_t j = 0; j < a.claims[i].counterexamples.size(); ++j) {
            CHECK(a.claims[i].counterexamples[j].inputs ==
                  b.claims[i].counterexamples[j].inputs);
            CHECK(a.claims[i].counterexamples[j].expected ==
                  b.claims[i].counterexamples[j].expected);
            CHECK(a.claims[i].counterexamples[j].actual ==
                  b.claims[i].counterexamples[j].actual);
        }
    }
}
