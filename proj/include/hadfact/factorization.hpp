#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hadfact/delta.hpp"
#include "hadfact/polynomial.hpp"

namespace hadfact {

enum class SearchStatus { Found, CertifiedImpossible, BudgetExhausted };

// A witness g for the factorization f = (f diamond g) hadamard g, with the
// leading-minor chains of both parts as the stability evidence.
struct CertifiedWitness {
    PositivePolynomial factor;    // g
    PositivePolynomial quotient;  // f diamond g
    std::vector<Rational> factor_minors;
    std::vector<Rational> quotient_minors;
};

struct SearchStats {
    std::uint64_t budget = 0;
    std::uint64_t seed = 0;
    std::uint64_t evaluations = 0;           // exact stability tests consumed
    std::uint64_t prefilter_rejections = 0;  // delta-monotonicity prefilter
    std::uint64_t proposals = 0;             // candidates generated
};

struct FactorizationOutcome {
    SearchStatus status;
    std::optional<CertifiedWitness> witness;        // present iff Found
    std::optional<ObstructionRecord> certificate;   // present iff CertifiedImpossible
    SearchStats stats;
};

// Exact check that f = g1 (hadamard) g2 with both factors stable.
struct VerificationBundle {
    bool ok;
    bool product_matches;
    bool g1_stable;
    bool g2_stable;
    std::vector<Rational> g1_minors;
    std::vector<Rational> g2_minors;
};
VerificationBundle verify_factorization(const PositivePolynomial& f,
                                        const PositivePolynomial& g1,
                                        const PositivePolynomial& g2);

// Seeded search for a stable g with f diamond g stable. Short-circuits to
// CertifiedImpossible when the omega certificate fires. Candidates come
// from the stable sampler plus log-coefficient refinement of the most
// promising one so far; the delta-monotonicity prefilter (delta_i(g) must
// exceed delta_i(f)) runs before any exact test. One budget unit is one
// exact stability test; floats are used only to rank proposals. For
// degrees 1..3 every stable polynomial factors and a constructive witness
// is returned directly (see docs/theory.md); unstable input of those
// degrees is rejected with NotStable. Deterministic in (budget, seed) for
// any worker count.
FactorizationOutcome search_factorization(const PositivePolynomial& f, std::uint64_t budget,
                                          std::uint64_t seed, int workers = 1);

// One row per improvement of the best-so-far omega, in evaluation order.
struct TracePoint {
    std::uint64_t evaluation;  // global evaluation index
    Rational omega_lower;
    Rational omega_upper;
    Rational delta1;
    Rational delta2;
};

// Multi-restart hill climb maximizing omega over exactly certified stable
// polynomials of the given degree. Restart 0 starts from (s+1)^n, the
// rest from seeded stable samples; every proposal is certified before
// scoring and omega comparisons are exact. Ties across restarts break to
// the lower restart index, then the lexicographically smaller coefficient
// vector, so the result is worker-count independent.
struct HuntReport {
    int degree = 0;
    std::uint64_t budget = 0;
    int restarts = 0;
    std::uint64_t seed = 0;
    std::uint64_t evaluations = 0;
    std::uint64_t stable_candidates = 0;
    std::optional<PositivePolynomial> best;
    DeltaPair best_deltas;
    ObstructionRecord best_obstruction;
    bool certificate_fired = false;
    int best_restart = -1;
    std::vector<TracePoint> trace;
};
HuntReport hunt_counterexample(int degree, std::uint64_t budget, int restarts,
                               std::uint64_t seed, int workers = 1);

// Quotient chain g0, g1, ...: each step searches for a stable g_{i+1}
// with g_i diamond g_{i+1} stable. Along any such chain both delta
// sequences strictly increase and every per-step ratio sum
//   r_i = delta1(g_i)/delta1(g_{i+1}) + delta2(g_i)/delta2(g_{i+1})
// stays below 1; both facts are consequences of the stability
// certificates and are re-checked as hard assertions. The chain length k
// obeys 2^k * delta1(g0) * delta2(g0) < 1 (each step more than doubles at
// least one delta; see docs/theory.md).
enum class ChainTermination { MaxSteps, SearchExhausted, CertifiedImpossible };

struct ChainRecord {
    std::vector<PositivePolynomial> chain;  // g0 .. gk
    std::vector<DeltaPair> chain_deltas;
    std::vector<Rational> ratio_sums;  // one per step
    ChainTermination reason;
    int max_steps = 0;
    std::uint64_t step_budget = 0;
    std::uint64_t seed = 0;
    std::uint64_t evaluations = 0;  // summed over step searches

    int length() const { return static_cast<int>(chain.size()) - 1; }
};
ChainRecord build_chain(const PositivePolynomial& g0, int max_steps, std::uint64_t step_budget,
                        std::uint64_t seed, int workers = 1);

}  // namespace hadfact
