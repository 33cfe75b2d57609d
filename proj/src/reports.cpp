#include "hadfact/reports.hpp"

#include <utility>

#include "hadfact/root_oracle.hpp"
#include "hadfact/version.hpp"

namespace hadfact {

namespace {

Json rationals_to_json(const std::vector<Rational>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(format_rational(v));
    return arr;
}

Json delta_pair_json(const DeltaPair& d) {
    Json j;
    j["delta1"] = format_rational(d.delta1);
    j["delta2"] = format_rational(d.delta2);
    return j;
}

// omega is irrational in general; report certified decimal bounds and the
// exact comparison against 1.
Json obstruction_json(const ObstructionRecord& rec, unsigned digits) {
    Json j;
    j["delta1"] = format_rational(rec.d.delta1);
    j["delta2"] = format_rational(rec.d.delta2);
    Json omega;
    omega["decimal_lower"] = decimal_string(rec.omega_lower, digits, RoundDir::Down);
    omega["decimal_upper"] = decimal_string(rec.omega_upper, digits, RoundDir::Up);
    omega["rounding"] = "outward";
    omega["vs_one"] = rec.omega_vs_one < 0 ? "<" : rec.omega_vs_one > 0 ? ">" : "=";
    j["omega"] = std::move(omega);
    j["certified_unfactorable"] = rec.certified_unfactorable;
    return j;
}

const char* status_name(SearchStatus s) {
    switch (s) {
        case SearchStatus::Found: return "Found";
        case SearchStatus::CertifiedImpossible: return "CertifiedImpossible";
        case SearchStatus::BudgetExhausted: return "BudgetExhausted";
    }
    return "?";
}

const char* termination_name(ChainTermination t) {
    switch (t) {
        case ChainTermination::MaxSteps: return "MaxSteps";
        case ChainTermination::SearchExhausted: return "SearchExhausted";
        case ChainTermination::CertifiedImpossible: return "CertifiedImpossible";
    }
    return "?";
}

}  // namespace

Json report_envelope(const std::string& command) {
    Json j;
    j["tool"] = std::string(kToolName);
    j["version"] = std::string(kVersion);
    j["command"] = command;
    return j;
}

std::string dump_report(const Json& report) {
    return report.dump(2) + "\n";
}

Json error_report(const Error& e) {
    Json j;
    j["tool"] = std::string(kToolName);
    j["version"] = std::string(kVersion);
    Json err;
    err["name"] = e.name();
    err["message"] = e.what();
    j["error"] = std::move(err);
    return j;
}

Json stability_report_json(const PositivePolynomial& f, bool with_float_oracle, double margin) {
    Json j = report_envelope("stable");
    j["polynomial"] = polynomial_to_json(f);
    StabilityReport rep = stability_report(f);
    j["stable"] = rep.stable;
    j["leading_minors"] = rationals_to_json(rep.minors);
    if (with_float_oracle) {
        RootSet roots = polynomial_roots(f);
        Json oracle;
        oracle["margin"] = margin;
        oracle["stable"] = roots.max_real_part < -margin;
        oracle["max_real_part"] = roots.max_real_part;
        j["float_oracle"] = std::move(oracle);
    }
    return j;
}

Json hurwitz_report_json(const PositivePolynomial& f) {
    Json j = report_envelope("hurwitz");
    j["polynomial"] = polynomial_to_json(f);
    HurwitzMatrix h(f);
    j["order"] = h.order();
    Json rows = Json::array();
    for (int i = 1; i <= h.order(); ++i) {
        Json row = Json::array();
        for (int k = 1; k <= h.order(); ++k) row.push_back(format_rational(h.entry(i, k)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

Json minor_report_json(const PositivePolynomial& f, std::vector<int> rows, std::vector<int> cols) {
    Json j = report_envelope("minors");
    j["polynomial"] = polynomial_to_json(f);
    bool located = rows.empty() && cols.empty();
    if (located) {
        SubmatrixLocation loc = locate_margin_submatrix(f.degree());
        rows = std::move(loc.rows);
        cols = std::move(loc.cols);
    }
    MinorReport rep = submatrix(HurwitzMatrix(f), std::move(rows), std::move(cols));
    j["located_margin_submatrix"] = located;
    j["rows"] = rep.rows;
    j["cols"] = rep.cols;
    j["determinant"] = format_rational(rep.determinant);
    j["diagonal_all_positive"] = rep.diagonal_all_positive;
    if (located) j["margin_m3"] = format_rational(necessary_margins(f).m3);
    return j;
}

Json kemperman_report_json(const PositivePolynomial& f, int max_minor_size,
                           std::uint64_t sample_budget, std::uint64_t seed, int workers) {
    Json j = report_envelope("kemperman");
    j["polynomial"] = polynomial_to_json(f);
    j["max_minor_size"] = max_minor_size;
    j["sample_budget"] = sample_budget;
    j["seed"] = seed;
    AuditReport rep = kemperman_audit(f, max_minor_size, sample_budget, seed, workers);
    j["total_submatrices"] = rep.total_submatrices;
    j["checked"] = rep.checked;
    j["checked_by_size"] = rep.checked_by_size;
    j["sampled"] = rep.sampled;
    j["violations"] = rep.violations;
    if (rep.first_violation) {
        Json v;
        v["rows"] = rep.first_violation->rows;
        v["cols"] = rep.first_violation->cols;
        v["determinant"] = format_rational(rep.first_violation->determinant);
        v["diagonal_all_positive"] = rep.first_violation->diagonal_all_positive;
        j["first_violation"] = std::move(v);
    } else {
        j["first_violation"] = nullptr;
    }
    return j;
}

Json delta_report_json(const PositivePolynomial& f, unsigned digits) {
    Json j = report_envelope("delta");
    j["polynomial"] = polynomial_to_json(f);
    ObstructionRecord rec = obstruction_value(f, digits);
    j["delta1"] = format_rational(rec.d.delta1);
    j["delta2"] = format_rational(rec.d.delta2);
    Json omega;
    omega["decimal_lower"] = decimal_string(rec.omega_lower, digits, RoundDir::Down);
    omega["decimal_upper"] = decimal_string(rec.omega_upper, digits, RoundDir::Up);
    omega["rounding"] = "outward";
    omega["vs_one"] = rec.omega_vs_one < 0 ? "<" : rec.omega_vs_one > 0 ? ">" : "=";
    j["omega"] = std::move(omega);
    j["certified_unfactorable"] = rec.certified_unfactorable;
    return j;
}

Json lemma1_report_json(const PositivePolynomial& f) {
    Json j = report_envelope("lemma1");
    j["polynomial"] = polynomial_to_json(f);
    IneqReport rep = lemma1_check(f);
    j["delta1"] = format_rational(rep.d.delta1);
    j["delta2"] = format_rational(rep.d.delta2);
    j["d1_lt_1"] = rep.d1_lt_1;
    j["d2_lt_1"] = rep.d2_lt_1;
    j["sum_lt_1"] = rep.sum_lt_1;
    j["margin1"] = format_rational(rep.margin1);
    j["margin2"] = format_rational(rep.margin2);
    j["margin_sum"] = format_rational(rep.margin_sum);
    return j;
}

Json lemma2_report_json(const PositivePolynomial& f, const PositivePolynomial& g) {
    Json j = report_envelope("lemma2");
    j["f"] = polynomial_to_json(f);
    j["g"] = polynomial_to_json(g);
    MonotonicityReport rep = lemma2_check(f, g);
    j["quotient_stable"] = true;  // lemma2_check would have thrown otherwise
    j["f_deltas"] = delta_pair_json(rep.f_deltas);
    j["g_deltas"] = delta_pair_json(rep.g_deltas);
    j["d1_increases"] = rep.d1_increases;
    j["d2_increases"] = rep.d2_increases;
    return j;
}

namespace {

Json binary_op_report(const char* command, const PositivePolynomial& f,
                      const PositivePolynomial& g, PositivePolynomial result) {
    Json j = report_envelope(command);
    j["f"] = polynomial_to_json(f);
    j["g"] = polynomial_to_json(g);
    j["result"] = polynomial_to_json(result);
    return j;
}

}  // namespace

Json product_report_json(const PositivePolynomial& f, const PositivePolynomial& g) {
    return binary_op_report("product", f, g, hadamard_product(f, g));
}

Json quotient_report_json(const PositivePolynomial& f, const PositivePolynomial& g) {
    return binary_op_report("quotient", f, g, hadamard_quotient(f, g));
}

Json factorize_report_json(const PositivePolynomial& f, std::uint64_t budget, std::uint64_t seed,
                           int workers, unsigned digits) {
    Json j = report_envelope("factorize");
    j["polynomial"] = polynomial_to_json(f);
    FactorizationOutcome out = search_factorization(f, budget, seed, workers);
    j["status"] = status_name(out.status);
    if (out.witness) {
        Json w;
        w["factor"] = polynomial_to_json(out.witness->factor);
        w["quotient"] = polynomial_to_json(out.witness->quotient);
        w["factor_minors"] = rationals_to_json(out.witness->factor_minors);
        w["quotient_minors"] = rationals_to_json(out.witness->quotient_minors);
        j["witness"] = std::move(w);
    } else {
        j["witness"] = nullptr;
    }
    j["certificate"] = out.certificate ? obstruction_json(*out.certificate, digits) : Json(nullptr);
    Json stats;
    stats["budget"] = out.stats.budget;
    stats["seed"] = out.stats.seed;
    stats["evaluations"] = out.stats.evaluations;
    stats["prefilter_rejections"] = out.stats.prefilter_rejections;
    stats["proposals"] = out.stats.proposals;
    j["stats"] = std::move(stats);
    return j;
}

Json hunt_report_json(const HuntReport& hunt, unsigned digits) {
    Json j = report_envelope("hunt");
    j["degree"] = hunt.degree;
    j["budget"] = hunt.budget;
    j["restarts"] = hunt.restarts;
    j["seed"] = hunt.seed;
    j["evaluations"] = hunt.evaluations;
    j["stable_candidates"] = hunt.stable_candidates;
    j["best"] = hunt.best ? polynomial_to_json(*hunt.best) : Json(nullptr);
    j["best_restart"] = hunt.best_restart;
    j["best_obstruction"] = obstruction_json(hunt.best_obstruction, digits);
    j["certificate_fired"] = hunt.certificate_fired;
    j["trace_points"] = hunt.trace.size();
    return j;
}

Json chain_report_json(const ChainRecord& chain, unsigned digits) {
    Json j = report_envelope("chain");
    j["max_steps"] = chain.max_steps;
    j["step_budget"] = chain.step_budget;
    j["seed"] = chain.seed;
    j["length"] = chain.length();
    j["termination"] = termination_name(chain.reason);
    j["evaluations"] = chain.evaluations;
    Json links = Json::array();
    for (std::size_t i = 0; i < chain.chain.size(); ++i) {
        Json link;
        link["polynomial"] = polynomial_to_json(chain.chain[i]);
        link["deltas"] = delta_pair_json(chain.chain_deltas[i]);
        links.push_back(std::move(link));
    }
    j["chain"] = std::move(links);
    j["ratio_sums"] = rationals_to_json(chain.ratio_sums);
    // The hard cap implied by the per-step doubling: 2^k d1 d2 < 1.
    const DeltaPair& d0 = chain.chain_deltas.front();
    Rational two_pow_k(1);
    for (int i = 0; i < chain.length(); ++i) two_pow_k *= 2;
    j["length_bound_satisfied"] = two_pow_k * d0.delta1 * d0.delta2 < 1;
    (void)digits;
    return j;
}

Json gen_report_json(const PositivePolynomial& p, int degree, std::uint64_t seed,
                     double root_scale) {
    Json j = report_envelope("gen");
    j["degree"] = degree;
    j["seed"] = seed;
    j["root_scale"] = root_scale;
    j["polynomial"] = polynomial_to_json(p);
    return j;
}

std::string hunt_trace_csv(const HuntReport& hunt, unsigned digits) {
    std::string csv = "evaluation,best_omega,delta1,delta2\n";
    for (const TracePoint& t : hunt.trace) {
        csv += std::to_string(t.evaluation);
        csv += ",";
        csv += decimal_string(t.omega_upper, digits, RoundDir::Up);
        csv += ",";
        csv += format_rational(t.delta1);
        csv += ",";
        csv += format_rational(t.delta2);
        csv += "\n";
    }
    return csv;
}

}  // namespace hadfact
