#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "floorlab/partitioner.hpp"
#include "floorlab/rational.hpp"

namespace floorlab {

/// The checkable claims. Closed-form claims (T1, T4, ...) must hold; a
/// counterexample means an implementation bug. C7 is a conjecture: a
/// counterexample is a finding, reported as status "mismatch".
enum class ClaimId { T1, T1_delta, Lemma, T4, C_f2count, T5, T6, C7, JumpInt, M_gen };

inline constexpr std::array<ClaimId, 10> all_claims = {
    ClaimId::T1, ClaimId::T1_delta, ClaimId::Lemma,   ClaimId::T4,
    ClaimId::C_f2count, ClaimId::T5, ClaimId::T6,     ClaimId::C7,
    ClaimId::JumpInt,   ClaimId::M_gen,
};

std::string_view to_string(ClaimId id);
std::optional<ClaimId> claim_from_string(std::string_view name);

enum class ClaimStatus { pass, fail, mismatch };

std::string_view to_string(ClaimStatus status);

/// One disagreement, with enough payload to reproduce it.
struct Counterexample {
    std::string inputs;   // e.g. "k=5 at=27/5"
    std::string expected;
    std::string actual;
};

struct ClaimResult {
    ClaimId claim = ClaimId::T1;
    std::string range; // human-readable range descriptor
    ClaimStatus status = ClaimStatus::pass;
    std::vector<Counterexample> counterexamples; // empty iff status == pass
};

/// Ranges for the suite. Unset knobs fall back to each claim's default
/// range; a set knob tightens or widens every claim that uses it.
struct SuiteConfig {
    std::vector<ClaimId> claims{all_claims.begin(), all_claims.end()};
    std::optional<unsigned> kmax;
    std::optional<unsigned> nmax;
    std::optional<unsigned> mmax;
    std::optional<unsigned> hmax;
    std::optional<Rational> interval_a;
    std::optional<Rational> interval_b;
    unsigned threads = 1;
};

struct VerificationReport {
    std::vector<ClaimResult> claims; // one entry per requested claim, in order
    int passed = 0;
    int failed = 0;
    int mismatched = 0;
    bool complete = true; // false when a claim aborted on a budget error
    double wall_ms = 0.0; // metadata only, never serialized into the payload

    bool all_pass() const { return failed == 0 && mismatched == 0 && complete; }
};

/// Independent brute-force enumeration of the jumps of f_n (m = 1) in [a, b).
///
/// Every breakpoint of f_n is t/v for some attained value v of f_{n-1}, and
/// v < ceil(b)^(n-1) + 1 on the interval, so the candidates are all reduced
/// rationals in [a, b) with denominator at most D = ceil(b)^(n-1) (a Farey
/// enumeration). The function is evaluated at the midpoint of every gap
/// between consecutive candidates (never at a candidate itself), and a jump
/// is reported wherever the two flanking gap values differ. Deliberately
/// structure-different from the partitioner: it never calls it, nor the limit
/// recurrences.
///
/// The candidate count is capped by `budget` if given, else by the
/// FLOORLAB_BUDGET environment variable, else by a built-in default;
/// exceeding it throws budget_error. Intended for desk scale (n <= 4, b <= 6).
std::vector<Discontinuity> oracle_discontinuities(
    unsigned n, const Rational& a, const Rational& b,
    std::optional<std::uint64_t> budget = std::nullopt);

/// Runs a single claim over the configured ranges.
ClaimResult check_claim(ClaimId id, const SuiteConfig& config = {});

/// Runs every requested claim and aggregates totals. With threads > 1 the
/// claims run concurrently; results are merged in claim order, so serial and
/// parallel runs produce identical reports.
VerificationReport run_suite(const SuiteConfig& config = {});

} // namespace floorlab
