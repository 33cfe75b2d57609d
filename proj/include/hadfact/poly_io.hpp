#pragma once

#include <string>

#include "json.hpp"

#include "hadfact/polynomial.hpp"

namespace hadfact {

using Json = nlohmann::ordered_json;

enum class PolyFormat { Json, Csv };

// Canonical polynomial file: {"degree": n, "coefficients": ["p/q", ...]}
// ascending. Coefficient tokens may be "p/q", integers, or decimal
// strings; JSON integer literals are accepted, other JSON numbers are
// rejected (quote decimals to keep them exact). CSV alternative: one row
// of the same tokens, ascending.
PositivePolynomial parse_polynomial_json(const std::string& text);
PositivePolynomial parse_polynomial_csv(const std::string& text);
PositivePolynomial parse_polynomial(const std::string& text);  // sniffs the format

PositivePolynomial read_polynomial(const std::string& path);

Json polynomial_to_json(const PositivePolynomial& p);
std::string format_polynomial(const PositivePolynomial& p, PolyFormat format);
void write_polynomial(const PositivePolynomial& p, const std::string& path, PolyFormat format);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace hadfact
