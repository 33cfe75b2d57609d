#include "hadfact/poly_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "hadfact/errors.hpp"

namespace hadfact {

namespace {

std::vector<std::string> split_csv_row(const std::string& line) {
    std::vector<std::string> tokens;
    std::string tok;
    std::stringstream ss(line);
    while (std::getline(ss, tok, ',')) tokens.push_back(tok);
    return tokens;
}

}  // namespace

PositivePolynomial parse_polynomial_json(const std::string& text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("degree") || !j.contains("coefficients"))
        throw ParseError("polynomial JSON needs \"degree\" and \"coefficients\"");
    if (!j["degree"].is_number_integer())
        throw ParseError("\"degree\" must be an integer");
    const long long degree = j["degree"].get<long long>();
    if (!j["coefficients"].is_array())
        throw ParseError("\"coefficients\" must be an array (ascending)");

    std::vector<Rational> coeffs;
    coeffs.reserve(j["coefficients"].size());
    for (const auto& c : j["coefficients"]) {
        if (c.is_string()) {
            coeffs.push_back(parse_rational(c.get<std::string>()));
        } else if (c.is_number_integer()) {
            coeffs.push_back(Rational(static_cast<long>(c.get<long long>())));
        } else {
            throw ParseError("coefficients must be strings or integers; "
                             "quote decimals to keep them exact");
        }
    }
    if (degree != static_cast<long long>(coeffs.size()) - 1)
        throw ParseError("\"degree\" does not match the coefficient count");
    return PositivePolynomial(std::move(coeffs));
}

PositivePolynomial parse_polynomial_csv(const std::string& text) {
    std::stringstream ss(text);
    std::string line, row;
    bool seen = false;
    while (std::getline(ss, line)) {
        bool blank = true;
        for (char ch : line)
            if (!std::isspace(static_cast<unsigned char>(ch))) { blank = false; break; }
        if (blank) continue;
        if (seen) throw ParseError("polynomial CSV must contain a single row");
        row = line;
        seen = true;
    }
    if (!seen) throw ParseError("empty polynomial CSV");
    std::vector<Rational> coeffs;
    for (const std::string& tok : split_csv_row(row)) coeffs.push_back(parse_rational(tok));
    return PositivePolynomial(std::move(coeffs));
}

PositivePolynomial parse_polynomial(const std::string& text) {
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        return ch == '{' ? parse_polynomial_json(text) : parse_polynomial_csv(text);
    }
    throw ParseError("empty polynomial file");
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write file: " + path);
    out << text;
}

PositivePolynomial read_polynomial(const std::string& path) {
    return parse_polynomial(read_text_file(path));
}

Json polynomial_to_json(const PositivePolynomial& p) {
    Json j;
    j["degree"] = p.degree();
    Json arr = Json::array();
    for (const auto& c : p.coefficients()) arr.push_back(format_rational(c));
    j["coefficients"] = std::move(arr);
    return j;
}

std::string format_polynomial(const PositivePolynomial& p, PolyFormat format) {
    if (format == PolyFormat::Json) return polynomial_to_json(p).dump(2) + "\n";
    std::string row;
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        if (k) row += ",";
        row += format_rational(p.coefficients()[k]);
    }
    return row + "\n";
}

void write_polynomial(const PositivePolynomial& p, const std::string& path, PolyFormat format) {
    write_text_file(path, format_polynomial(p, format));
}

}  // namespace hadfact
