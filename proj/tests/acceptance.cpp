// Acceptance suite: one line per criterion, nonzero exit if any fails.
// Every tolerance is pinned here; exact checks use rational arithmetic
// with zero tolerance, runtime limits are wall-clock seconds.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "hadfact/delta.hpp"
#include "hadfact/factorization.hpp"
#include "hadfact/hurwitz.hpp"
#include "hadfact/parallel.hpp"
#include "hadfact/poly_io.hpp"
#include "hadfact/random_stable.hpp"
#include "hadfact/reports.hpp"
#include "hadfact/root_oracle.hpp"

using namespace hadfact;

namespace {

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    std::string detail;
    double seconds;
};

std::vector<CriterionResult> g_results;

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void record(int id, const std::string& name, bool passed, const std::string& detail,
            double seconds) {
    g_results.push_back({id, name, passed, detail, seconds});
    std::printf("[%d/9] %s  %s (%.2f s)%s%s\n", id, passed ? "PASS" : "FAIL", name.c_str(), seconds,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
}

PositivePolynomial poly(std::vector<long> ints) {
    std::vector<Rational> c;
    c.reserve(ints.size());
    for (long v : ints) c.emplace_back(v);
    return PositivePolynomial(std::move(c));
}

PositivePolynomial random_positive(int degree, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<Rational> c;
    for (int k = 0; k <= degree; ++k) {
        Rational r(static_cast<long>(gen() % 999 + 1), static_cast<long>(gen() % 99 + 1));
        r.canonicalize();
        c.push_back(r);
    }
    return PositivePolynomial(std::move(c));
}

const PositivePolynomial kBinomial4 = poly({1, 4, 6, 4, 1});
constexpr std::uint64_t kSuiteSeed = 20240817;

// ---- criterion 1 -----------------------------------------------------

void criterion1() {
    Timer t;
    bool ok = true;
    std::string detail;

    StabilityReport a = stability_report(kBinomial4);
    ok &= a.stable && a.minors == std::vector<Rational>{Rational(4), Rational(20), Rational(64),
                                                        Rational(64)};
    StabilityReport b = stability_report(poly({1, 16, 36, 16, 1}));
    ok &= b.stable && b.minors == std::vector<Rational>{Rational(16), Rational(560), Rational(8704),
                                                        Rational(8704)};
    ok &= !is_stable_exact(all_ones(4));
    const double secs = t.seconds();
    if (secs >= 1.0) {
        ok = false;
        detail = "runtime limit 1 s exceeded";
    }
    record(1, "exact stability certificates, zero tolerance", ok, detail, secs);
}

// ---- criterion 2 -----------------------------------------------------

Json dual_oracle_report(int workers) {
    constexpr int kSamples = 1000;
    std::vector<char> verdict(kSamples, '?');
    parallel_for(kSamples, workers, [&](std::size_t i) {
        const int degree = 3 + static_cast<int>(i % 6);
        PositivePolynomial f = (i % 2 == 0)
                                   ? random_stable(degree, rng::mix(kSuiteSeed, 0xD0A1ull, i))
                                   : random_unstable(degree, rng::mix(kSuiteSeed, 0xD0A2ull, i));
        RootSet roots = polynomial_roots(f);
        if (roots.min_axis_distance < 1e-6) {
            verdict[i] = 'x';  // root too close to the axis; excluded by the gate
            return;
        }
        const bool exact = is_stable_exact(f);
        const bool fl = roots.max_real_part < -1e-9;
        verdict[i] = exact == fl ? 'a' : 'D';
    });

    int qualified = 0, agreements = 0, disagreements = 0;
    for (char v : verdict) {
        if (v == 'x') continue;
        ++qualified;
        if (v == 'a') ++agreements;
        if (v == 'D') ++disagreements;
    }
    Json j = report_envelope("acceptance-dual-oracle");
    j["seed"] = kSuiteSeed;
    j["samples"] = kSamples;
    j["qualified"] = qualified;
    j["agreements"] = agreements;
    j["disagreements"] = disagreements;
    j["verdicts"] = std::string(verdict.begin(), verdict.end());
    return j;
}

Json g_criterion2_report;

void criterion2() {
    Timer t;
    g_criterion2_report = dual_oracle_report(4);
    const int qualified = g_criterion2_report["qualified"].get<int>();
    const int agreements = g_criterion2_report["agreements"].get<int>();
    bool ok = qualified >= 900 && agreements == qualified;
    std::string detail = std::to_string(agreements) + "/" + std::to_string(qualified) +
                         " qualified samples agree";
    const double secs = t.seconds();
    if (secs >= 60.0) {
        ok = false;
        detail += "; runtime limit 60 s exceeded";
    }
    record(2, "dual-oracle agreement on 1000 seeded polynomials", ok, detail, secs);
}

// ---- criterion 3 -----------------------------------------------------

Json strict_inequality_report(int workers) {
    constexpr int kPerDegree = 1000;
    const int degrees[] = {4, 5, 6, 7, 8};
    std::vector<char> all_ok(5 * kPerDegree, 0);
    parallel_for(all_ok.size(), workers, [&](std::size_t i) {
        const int degree = degrees[i / kPerDegree];
        PositivePolynomial f = random_stable(degree, rng::mix(kSuiteSeed, 0x1E1ull, i));
        IneqReport rep = lemma1_check(f);
        all_ok[i] = (rep.d1_lt_1 && rep.d2_lt_1 && rep.sum_lt_1) ? 1 : 0;
    });
    std::uint64_t violations = 0;
    for (char v : all_ok)
        if (!v) ++violations;
    Json j = report_envelope("acceptance-strict-inequalities");
    j["seed"] = kSuiteSeed;
    j["per_degree"] = kPerDegree;
    j["degrees"] = std::vector<int>(std::begin(degrees), std::end(degrees));
    j["violations"] = violations;
    return j;
}

Json g_criterion3_report;

void criterion3() {
    Timer t;
    g_criterion3_report = strict_inequality_report(4);
    const std::uint64_t violations = g_criterion3_report["violations"].get<std::uint64_t>();
    record(3, "delta inequalities on 1000 stable polynomials per degree 4..8", violations == 0,
           std::to_string(violations) + " violations", t.seconds());
}

// ---- criterion 4 -----------------------------------------------------

void criterion4() {
    Timer t;
    constexpr int kPairs = 1000;
    std::vector<char> ok(kPairs, 0);
    parallel_for(kPairs, 4, [&](std::size_t i) {
        const int degree = 4 + static_cast<int>(i % 5);
        QuotientDeltaIdentity rep =
            quotient_delta_identity(random_positive(degree, rng::mix(kSuiteSeed, 0x1DE0ull, i)),
                                    random_positive(degree, rng::mix(kSuiteSeed, 0x1DE1ull, i)));
        ok[i] = (rep.equal1 && rep.equal2) ? 1 : 0;
    });
    std::uint64_t violations = 0;
    for (char v : ok)
        if (!v) ++violations;
    record(4, "quotient delta identity, exact, on 1000 positive pairs", violations == 0,
           std::to_string(violations) + " violations", t.seconds());
}

// ---- criterion 5 -----------------------------------------------------

void criterion5() {
    Timer t;
    constexpr int kPolys = 100;
    std::vector<std::uint64_t> violations(kPolys, 0);
    bool all_full = true;
    for (int i = 0; i < kPolys; ++i) {
        const int degree = 4 + i % 5;  // up to 8
        PositivePolynomial f = random_stable(degree, rng::mix(kSuiteSeed, 0xA0D17ull, i));
        AuditReport rep = kemperman_audit(f, 3, 1u << 20, rng::mix(kSuiteSeed, 0xA0D18ull, i), 4);
        violations[i] = rep.violations;
        all_full &= !rep.sampled;
    }
    std::uint64_t total = 0;
    for (auto v : violations) total += v;
    bool ok = total == 0 && all_full;
    std::string detail = std::to_string(total) + " violations over full enumerations";
    const double secs = t.seconds();
    if (secs >= 300.0) {
        ok = false;
        detail += "; runtime limit 300 s exceeded";
    }
    record(5, "minor-positivity audit (size <= 3) on 100 stable polynomials", ok, detail, secs);
}

// ---- criterion 6 -----------------------------------------------------

void criterion6() {
    Timer t;
    const int degrees[] = {4, 5, 6, 7, 10};
    std::uint64_t violations = 0;
    for (int d : degrees) {
        for (int i = 0; i < 100; ++i) {
            PositivePolynomial f =
                random_positive(d, rng::mix(kSuiteSeed, 0x10CA7Eull, i * 100 + d));
            SubmatrixLocation loc = locate_margin_submatrix(d);
            MinorReport rep = submatrix(HurwitzMatrix(f), loc.rows, loc.cols);
            if (rep.determinant != necessary_margins(f).m3) ++violations;
        }
    }
    record(6, "located 3x3 minor equals the third margin, degrees 4,5,6,7,10",
           violations == 0, std::to_string(violations) + " violations", t.seconds());
}

// ---- criterion 7 -----------------------------------------------------

constexpr int kChainSeeds = 20;
constexpr std::uint64_t kChainStepBudget = 2000;  // default step budget
constexpr int kChainMaxSteps = 16;

Json chain_suite_report(int workers) {
    Json arr = Json::array();
    for (int s = 0; s < kChainSeeds; ++s) {
        ChainRecord rec = build_chain(kBinomial4, kChainMaxSteps, kChainStepBudget,
                                      rng::mix(kSuiteSeed, 0xC4A15ull, s), workers);
        arr.push_back(chain_report_json(rec, 12));
    }
    Json j = report_envelope("acceptance-chains");
    j["seed"] = kSuiteSeed;
    j["chains"] = std::move(arr);
    return j;
}

Json g_criterion7_report;

void criterion7() {
    Timer t;
    bool ok = true;
    int max_len = 0;
    std::uint64_t steps_total = 0;
    for (int s = 0; s < kChainSeeds; ++s) {
        ChainRecord rec = build_chain(kBinomial4, kChainMaxSteps, kChainStepBudget,
                                      rng::mix(kSuiteSeed, 0xC4A15ull, s), 4);
        max_len = std::max(max_len, rec.length());
        steps_total += static_cast<std::uint64_t>(rec.length());
        ok &= rec.length() <= 5;
        // exact form of the bound log2(6) + log2(6): 2^k / 36 < 1
        Rational pow2(1);
        for (int i = 0; i < rec.length(); ++i) pow2 *= 2;
        ok &= pow2 * rec.chain_deltas.front().delta1 * rec.chain_deltas.front().delta2 < 1;
        for (const Rational& r : rec.ratio_sums) ok &= r < 1;
        for (std::size_t i = 1; i < rec.chain_deltas.size(); ++i) {
            ok &= rec.chain_deltas[i - 1].delta1 < rec.chain_deltas[i].delta1;
            ok &= rec.chain_deltas[i - 1].delta2 < rec.chain_deltas[i].delta2;
        }
    }
    g_criterion7_report = chain_suite_report(4);
    std::string detail = "max length " + std::to_string(max_len) + ", " +
                         std::to_string(steps_total) + " accepted steps over 20 seeds";
    const double secs = t.seconds();
    if (secs >= 600.0) {
        ok = false;
        detail += "; runtime limit 600 s exceeded";
    }
    record(7, "quotient chains from (s+1)^4: length <= 5, ratio sums < 1", ok, detail, secs);
}

// ---- criterion 8 -----------------------------------------------------

constexpr std::uint64_t kFactorizeBudget = 10000;  // default budget

Json g_criterion8_report;

void criterion8() {
    Timer t;
    const PositivePolynomial target = poly({1, 64, 216, 64, 1});
    FactorizationOutcome found = search_factorization(target, kFactorizeBudget, kSuiteSeed, 4);
    bool ok = found.status == SearchStatus::Found && found.witness.has_value();
    if (ok) {
        VerificationBundle v =
            verify_factorization(target, found.witness->quotient, found.witness->factor);
        ok &= v.ok;
    }

    // Certificate soundness: omega >= 1 short-circuits and never yields Found.
    const PositivePolynomial boundary = poly({1, 2, 4, 2, 1});
    ok &= is_stable_exact(boundary);
    ok &= obstruction_value(boundary).certified_unfactorable;
    for (std::uint64_t budget : {std::uint64_t(0), std::uint64_t(100), kFactorizeBudget}) {
        FactorizationOutcome out = search_factorization(boundary, budget, kSuiteSeed + budget, 4);
        ok &= out.status == SearchStatus::CertifiedImpossible;
        ok &= out.stats.evaluations == 0;
    }
    const PositivePolynomial scaled = poly({5, 10, 20, 10, 5});  // same deltas
    ok &= search_factorization(scaled, 100, kSuiteSeed, 4).status ==
          SearchStatus::CertifiedImpossible;

    g_criterion8_report = factorize_report_json(target, kFactorizeBudget, kSuiteSeed, 4, 12);
    record(8, "factorization round trip and certificate soundness", ok, "", t.seconds());
}

// ---- criterion 9 -----------------------------------------------------

void criterion9() {
    Timer t;
    bool ok = true;
    std::string detail;

    const std::string c2_w1 = dump_report(dual_oracle_report(1));
    ok &= c2_w1 == dump_report(g_criterion2_report);
    if (!ok) detail += "dual-oracle report differs; ";

    const std::string c3_w1 = dump_report(strict_inequality_report(1));
    bool c3_same = c3_w1 == dump_report(g_criterion3_report);
    ok &= c3_same;
    if (!c3_same) detail += "inequality report differs; ";

    const std::string c7_w1 = dump_report(chain_suite_report(1));
    bool c7_same = c7_w1 == dump_report(g_criterion7_report);
    ok &= c7_same;
    if (!c7_same) detail += "chain report differs; ";

    const std::string c8_w1 = dump_report(
        factorize_report_json(poly({1, 64, 216, 64, 1}), kFactorizeBudget, kSuiteSeed, 1, 12));
    bool c8_same = c8_w1 == dump_report(g_criterion8_report);
    ok &= c8_same;
    if (!c8_same) detail += "factorize report differs; ";

    record(9, "byte-identical reports for workers 1 and 4 (criteria 2, 3, 7, 8)", ok, detail,
           t.seconds());
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();

    int passed = 0;
    for (const auto& r : g_results)
        if (r.passed) ++passed;
    std::printf("acceptance: %d/9 criteria passed\n", passed);
    return passed == 9 ? 0 : 1;
}
