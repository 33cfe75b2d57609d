#pragma once

#include <cstdint>
#include <string>

#include "hadfact/errors.hpp"
#include "hadfact/factorization.hpp"
#include "hadfact/hurwitz.hpp"
#include "hadfact/poly_io.hpp"

namespace hadfact {

// JSON report builders shared by the CLI and the acceptance suite. Every
// report carries the tool version and command plus the relevant seeds and
// budgets, and exact values as "p/q" strings; for identical inputs the
// serialized bytes are identical, whatever the worker count.

Json report_envelope(const std::string& command);
std::string dump_report(const Json& report);  // stable 2-space dump + newline

Json error_report(const Error& e);

Json stability_report_json(const PositivePolynomial& f, bool with_float_oracle, double margin);
Json hurwitz_report_json(const PositivePolynomial& f);
// Empty rows/cols selects the located 3x3 margin submatrix.
Json minor_report_json(const PositivePolynomial& f, std::vector<int> rows, std::vector<int> cols);
Json kemperman_report_json(const PositivePolynomial& f, int max_minor_size,
                           std::uint64_t sample_budget, std::uint64_t seed, int workers);
Json delta_report_json(const PositivePolynomial& f, unsigned digits);
Json lemma1_report_json(const PositivePolynomial& f);
Json lemma2_report_json(const PositivePolynomial& f, const PositivePolynomial& g);
Json product_report_json(const PositivePolynomial& f, const PositivePolynomial& g);
Json quotient_report_json(const PositivePolynomial& f, const PositivePolynomial& g);
Json factorize_report_json(const PositivePolynomial& f, std::uint64_t budget, std::uint64_t seed,
                           int workers, unsigned digits);
Json hunt_report_json(const HuntReport& hunt, unsigned digits);
Json chain_report_json(const ChainRecord& chain, unsigned digits);
Json gen_report_json(const PositivePolynomial& p, int degree, std::uint64_t seed,
                     double root_scale);

std::string hunt_trace_csv(const HuntReport& hunt, unsigned digits);

}  // namespace hadfact
