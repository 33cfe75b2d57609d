#include "hadfact/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>
#include <utility>

#include "hadfact/errors.hpp"
#include "hadfact/hurwitz.hpp"
#include "hadfact/parallel.hpp"
#include "hadfact/random_stable.hpp"
#include "hadfact/root_oracle.hpp"

namespace hadfact {

VerificationBundle verify_factorization(const PositivePolynomial& f,
                                        const PositivePolynomial& g1,
                                        const PositivePolynomial& g2) {
    if (f.degree() != g1.degree() || f.degree() != g2.degree())
        throw DegreeMismatch("factorization parts must share the degree of f");
    VerificationBundle b;
    b.product_matches = hadamard_product(g1, g2) == f;
    StabilityReport r1 = stability_report(g1);
    StabilityReport r2 = stability_report(g2);
    b.g1_stable = r1.stable;
    b.g2_stable = r2.stable;
    b.g1_minors = std::move(r1.minors);
    b.g2_minors = std::move(r2.minors);
    b.ok = b.product_matches && b.g1_stable && b.g2_stable;
    return b;
}

namespace {

constexpr int kSlotsPerRound = 32;
constexpr std::uint64_t kSearchSalt = 0xFAC7ull;

std::vector<double> log_coefficients(const PositivePolynomial& p) {
    std::vector<double> logs;
    logs.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) logs.push_back(std::log(c.get_d()));
    return logs;
}

// Monic-normalize in log space, clamp to a safe double range, promote to
// exact rationals.
PositivePolynomial polynomial_from_logs(std::vector<double> logs) {
    const double lead = logs.back();
    std::vector<Rational> coeffs;
    coeffs.reserve(logs.size());
    for (double l : logs) {
        double v = std::exp(std::clamp(l - lead, -600.0, 600.0));
        if (!(v > 0) || !std::isfinite(v)) v = std::numeric_limits<double>::min();
        coeffs.push_back(rational_from_double(v));
    }
    return PositivePolynomial(std::move(coeffs));
}

PositivePolynomial binomial_polynomial(int degree) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    mpz_class b;
    for (int k = 0; k <= degree; ++k) {
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(degree),
                     static_cast<unsigned long>(k));
        c[static_cast<std::size_t>(k)] = Rational(b);
    }
    return PositivePolynomial(std::move(c));
}

// Coefficient-wise square root in doubles; g with g.g = f coefficientwise
// is the natural first guess for a balanced split of f.
PositivePolynomial hadamard_sqrt_guess(const PositivePolynomial& f) {
    std::vector<double> logs;
    logs.reserve(f.coefficients().size());
    for (const auto& c : f.coefficients()) logs.push_back(0.5 * std::log(c.get_d()));
    return polynomial_from_logs(std::move(logs));
}

CertifiedWitness make_witness(PositivePolynomial factor, PositivePolynomial quotient) {
    CertifiedWitness w{std::move(factor), std::move(quotient), {}, {}};
    w.factor_minors = leading_principal_minors(HurwitzMatrix(w.factor));
    w.quotient_minors = leading_principal_minors(HurwitzMatrix(w.quotient));
    return w;
}

// Degrees 1..3: every stable polynomial splits constructively.
//   n = 1, 2: the all-ones polynomial of that degree is stable, so
//             f = f (hadamard) all-ones works.
//   n = 3:    stability of (b0,b1,b2,b3) is b2*b1 > b3*b0. Put
//             rho = (a2*a1)/(a3*a0) > 1 and take h = (1, 1, (1+rho)/2, 1);
//             then h and f diamond h are both stable because the middle
//             ratio of h sits strictly between 1 and rho.
FactorizationOutcome constructive_low_degree(const PositivePolynomial& f, std::uint64_t budget,
                                             std::uint64_t seed) {
    if (!is_stable_exact(f))
        throw NotStable("factorization search of degree <= 3 input requires a stable polynomial");
    FactorizationOutcome out;
    out.stats.budget = budget;
    out.stats.seed = seed;
    out.stats.evaluations = 1;  // the certificate for f above
    const int n = f.degree();
    PositivePolynomial g = all_ones(n);
    if (n == 3) {
        Rational rho = (f.coeff(2) * f.coeff(1)) / (f.coeff(3) * f.coeff(0));
        g = PositivePolynomial({Rational(1), Rational(1), (1 + rho) / 2, Rational(1)});
    }
    PositivePolynomial q = hadamard_quotient(f, g);
    out.stats.evaluations += 2;
    if (!is_stable_exact(g) || !is_stable_exact(q))
        throw InvariantViolation("constructive low-degree factor failed certification");
    out.status = SearchStatus::Found;
    out.witness = make_witness(std::move(g), std::move(q));
    return out;
}

struct SlotResult {
    bool generated = false;
    bool prefilter_passed = false;
    bool factor_stable = false;
    bool success = false;
    std::uint64_t evals = 0;
    double score = std::numeric_limits<double>::infinity();
    std::optional<PositivePolynomial> candidate;
    std::optional<PositivePolynomial> quotient;
};

}  // namespace

FactorizationOutcome search_factorization(const PositivePolynomial& f, std::uint64_t budget,
                                          std::uint64_t seed, int workers) {
    const int n = f.degree();
    if (n <= 3) return constructive_low_degree(f, budget, seed);

    FactorizationOutcome out;
    out.stats.budget = budget;
    out.stats.seed = seed;

    ObstructionRecord obs = obstruction_value(f);
    if (obs.certified_unfactorable) {
        out.status = SearchStatus::CertifiedImpossible;
        out.certificate = obs;
        return out;
    }

    const DeltaPair df = deltas(f);
    std::optional<std::vector<double>> refine_center;
    double refine_score = std::numeric_limits<double>::infinity();

    const double scales[4] = {0.5, 1.0, 2.0, 4.0};
    std::uint64_t round = 0;
    // The prefilter is free, so cap total proposals as well; otherwise a
    // polynomial whose deltas dominate every candidate would spin forever.
    const std::uint64_t proposal_cap = std::max<std::uint64_t>(4096, 64 * budget);
    // A candidate costs up to two exact tests (g, then f diamond g).
    while (budget - out.stats.evaluations >= 2 && out.stats.proposals < proposal_cap) {
        std::vector<PositivePolynomial> props;
        props.reserve(kSlotsPerRound);
        for (int slot = 0; slot < kSlotsPerRound; ++slot) {
            const std::uint64_t slot_seed =
                rng::mix(seed, kSearchSalt + round, static_cast<std::uint64_t>(slot));
            if (round == 0 && slot == 0) {
                props.push_back(hadamard_sqrt_guess(f));
            } else if (round == 0 && slot == 1) {
                props.push_back(binomial_polynomial(n));
            } else if (refine_center && slot % 2 == 1) {
                std::mt19937_64 gen(slot_seed);
                const double sigma = 0.4 * std::pow(0.85, static_cast<double>(round % 24)) *
                                     (0.25 + rng::uniform01(gen));
                std::vector<double> logs = *refine_center;
                for (double& l : logs) l += sigma * rng::normal(gen);
                props.push_back(polynomial_from_logs(std::move(logs)));
            } else {
                props.push_back(random_stable(n, slot_seed, scales[slot % 4]));
            }
        }

        std::vector<SlotResult> results(props.size());
        parallel_for(props.size(), workers, [&](std::size_t i) {
            SlotResult& r = results[i];
            r.generated = true;
            const DeltaPair dg = deltas(props[i]);
            if (!(df.delta1 < dg.delta1 && df.delta2 < dg.delta2)) return;
            r.prefilter_passed = true;
            r.evals = 1;
            if (!is_stable_exact(props[i])) return;
            r.factor_stable = true;
            PositivePolynomial q = hadamard_quotient(f, props[i]);
            r.evals = 2;
            const bool q_stable = is_stable_exact(q);
            // Float ranking for the refinement center; certificates above
            // never depend on it.
            try {
                r.score = polynomial_roots(q).max_real_part;
            } catch (const ConvergenceFailure&) {
                r.score = std::numeric_limits<double>::infinity();
            }
            r.candidate = props[i];
            if (q_stable) {
                r.success = true;
                r.quotient = std::move(q);
            }
        });

        // Merge in slot order; the budget cut is index-based, so worker
        // count cannot change the outcome.
        bool exhausted = false;
        std::optional<std::size_t> winner;
        std::size_t merged = 0;
        for (std::size_t i = 0; i < results.size(); ++i) {
            if (budget - out.stats.evaluations < 2) { exhausted = true; break; }
            merged = i + 1;
            out.stats.proposals += 1;
            if (!results[i].prefilter_passed) {
                out.stats.prefilter_rejections += 1;
                continue;
            }
            out.stats.evaluations += results[i].evals;
            if (results[i].success) { winner = i; break; }
        }
        if (winner) {
            SlotResult& w = results[*winner];
            out.status = SearchStatus::Found;
            out.witness = make_witness(std::move(*w.candidate), std::move(*w.quotient));
            return out;
        }
        for (std::size_t i = 0; i < merged; ++i) {
            if (results[i].factor_stable && results[i].score < refine_score) {
                refine_score = results[i].score;
                refine_center = log_coefficients(*results[i].candidate);
            }
        }
        if (exhausted) break;
        ++round;
    }

    out.status = SearchStatus::BudgetExhausted;
    return out;
}

namespace {

struct RestartOutcome {
    std::optional<PositivePolynomial> best;
    DeltaPair best_deltas;
    std::uint64_t evaluations = 0;
    std::uint64_t stable_candidates = 0;
    // Local improvement points, offsets within this restart's budget.
    std::vector<TracePoint> trace;
};

int compare_omega(const DeltaPair& a, const DeltaPair& b) {
    return compare_sqrt_sums(a.delta1, a.delta2, b.delta1, b.delta2);
}

RestartOutcome run_restart(int degree, int restart, std::uint64_t per_budget,
                           std::uint64_t seed, unsigned trace_digits) {
    RestartOutcome out;
    std::mt19937_64 gen(rng::mix(seed, 0xB0057ull, static_cast<std::uint64_t>(restart)));
    const double scales[4] = {0.5, 1.0, 2.0, 4.0};

    PositivePolynomial current =
        restart == 0
            ? binomial_polynomial(degree)
            : random_stable(degree, rng::mix(seed, 0x5EEDull, static_cast<std::uint64_t>(restart)),
                            scales[restart % 4]);

    auto record_improvement = [&](const PositivePolynomial& p, const DeltaPair& d) {
        out.best = p;
        out.best_deltas = d;
        const RationalInterval s1 = sqrt_bounds(d.delta1, trace_digits);
        const RationalInterval s2 = sqrt_bounds(d.delta2, trace_digits);
        out.trace.push_back(TracePoint{out.evaluations - 1, s1.lo + s2.lo, s1.hi + s2.hi,
                                       d.delta1, d.delta2});
    };

    while (out.evaluations < per_budget) {
        PositivePolynomial proposal = current;
        if (out.best) {
            std::vector<double> logs = log_coefficients(*out.best);
            const int kind = static_cast<int>(out.evaluations % 4);
            double sigma = kind == 0 ? 0.5 : kind == 1 ? 0.15 : kind == 3 ? 0.04 : 0.3;
            if (kind == 2) {
                // single-coordinate move
                std::size_t idx = static_cast<std::size_t>(gen() % logs.size());
                logs[idx] += sigma * rng::normal(gen);
            } else {
                for (double& l : logs) l += sigma * rng::normal(gen);
            }
            proposal = polynomial_from_logs(std::move(logs));
        }
        out.evaluations += 1;
        if (!is_stable_exact(proposal)) continue;
        out.stable_candidates += 1;
        const DeltaPair d = deltas(proposal);
        if (!out.best || compare_omega(d, out.best_deltas) > 0) record_improvement(proposal, d);
    }
    return out;
}

}  // namespace

HuntReport hunt_counterexample(int degree, std::uint64_t budget, int restarts,
                               std::uint64_t seed, int workers) {
    if (degree < 4) throw DegreeTooSmall("counterexample hunting needs degree >= 4");
    if (restarts < 1) restarts = 1;
    constexpr unsigned kTraceDigits = 15;

    HuntReport rep;
    rep.degree = degree;
    rep.budget = budget;
    rep.restarts = restarts;
    rep.seed = seed;

    const std::uint64_t per_budget = std::max<std::uint64_t>(1, budget / static_cast<std::uint64_t>(restarts));
    std::vector<RestartOutcome> outcomes(static_cast<std::size_t>(restarts));
    parallel_for(static_cast<std::size_t>(restarts), workers, [&](std::size_t r) {
        outcomes[r] = run_restart(degree, static_cast<int>(r), per_budget, seed, kTraceDigits);
    });

    // Merge in restart order: ties break to the earlier restart, then the
    // lexicographically smaller coefficient vector.
    for (std::size_t r = 0; r < outcomes.size(); ++r) {
        const RestartOutcome& o = outcomes[r];
        rep.evaluations += o.evaluations;
        rep.stable_candidates += o.stable_candidates;
        for (const TracePoint& t : o.trace) {
            const DeltaPair d{t.delta1, t.delta2};
            const bool improves =
                !rep.best || compare_omega(d, rep.best_deltas) > 0;
            if (improves) {
                TracePoint global = t;
                global.evaluation += r * per_budget;
                rep.trace.push_back(global);
            }
        }
        if (!o.best) continue;
        if (!rep.best) {
            rep.best = o.best;
            rep.best_deltas = o.best_deltas;
            rep.best_restart = static_cast<int>(r);
        } else {
            const int c = compare_omega(o.best_deltas, rep.best_deltas);
            if (c > 0 || (c == 0 && compare_lexicographic(*o.best, *rep.best) < 0)) {
                rep.best = o.best;
                rep.best_deltas = o.best_deltas;
                rep.best_restart = static_cast<int>(r);
            }
        }
    }
    if (!rep.best)
        throw InvariantViolation("hunt produced no stable candidate; restart 0 starts stable");
    rep.best_obstruction = obstruction_value(*rep.best);
    rep.certificate_fired = rep.best_obstruction.certified_unfactorable;
    return rep;
}

ChainRecord build_chain(const PositivePolynomial& g0, int max_steps, std::uint64_t step_budget,
                        std::uint64_t seed, int workers) {
    if (g0.degree() < 4) throw DegreeTooSmall("quotient chains need degree >= 4");
    if (!is_stable_exact(g0)) throw NotStable("chain origin must be exactly stable");

    ChainRecord rec;
    rec.max_steps = max_steps;
    rec.step_budget = step_budget;
    rec.seed = seed;
    rec.chain.push_back(g0);
    rec.chain_deltas.push_back(deltas(g0));
    rec.reason = ChainTermination::MaxSteps;

    for (int step = 0; step < max_steps; ++step) {
        const PositivePolynomial& tail = rec.chain.back();
        FactorizationOutcome res = search_factorization(
            tail, step_budget, rng::mix(seed, 0xC4A11ull, static_cast<std::uint64_t>(step)), workers);
        rec.evaluations += res.stats.evaluations;
        if (res.status == SearchStatus::CertifiedImpossible) {
            rec.reason = ChainTermination::CertifiedImpossible;
            return rec;
        }
        if (res.status == SearchStatus::BudgetExhausted) {
            rec.reason = ChainTermination::SearchExhausted;
            return rec;
        }

        const PositivePolynomial& next = res.witness->factor;
        const DeltaPair d_tail = rec.chain_deltas.back();
        const DeltaPair d_next = deltas(next);
        const Rational ratio_sum =
            d_tail.delta1 / d_next.delta1 + d_tail.delta2 / d_next.delta2;
        const DeltaPair d_quot = deltas(res.witness->quotient);
        // Both follow from the two stability certificates; a failure here
        // is a bug, not a property of the input.
        if (!(d_tail.delta1 < d_next.delta1 && d_tail.delta2 < d_next.delta2))
            throw InvariantViolation("chain step did not increase both delta invariants");
        if (!(ratio_sum < 1) || ratio_sum != d_quot.delta1 + d_quot.delta2)
            throw InvariantViolation("chain step ratio sum is not the quotient delta sum below 1");

        rec.chain.push_back(next);
        rec.chain_deltas.push_back(d_next);
        rec.ratio_sums.push_back(ratio_sum);
    }
    return rec;
}

}  // namespace hadfact
