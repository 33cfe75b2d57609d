#include "hadfact/polynomial.hpp"

#include <string>
#include <utility>

#include "hadfact/errors.hpp"

namespace hadfact {

PositivePolynomial::PositivePolynomial(std::vector<Rational> ascending_coefficients)
    : coefficients_(std::move(ascending_coefficients)) {
    if (coefficients_.size() < 2)
        throw InvalidPolynomial("polynomial must have degree at least 1");
    for (std::size_t k = 0; k < coefficients_.size(); ++k) {
        if (sgn(coefficients_[k]) <= 0)
            throw InvalidPolynomial("coefficient a" + std::to_string(k) + " must be strictly positive");
    }
}

namespace {

void require_same_degree(const PositivePolynomial& f, const PositivePolynomial& g) {
    if (f.degree() != g.degree())
        throw DegreeMismatch("degrees differ: " + std::to_string(f.degree()) + " vs " +
                             std::to_string(g.degree()));
}

}  // namespace

PositivePolynomial hadamard_product(const PositivePolynomial& f, const PositivePolynomial& g) {
    require_same_degree(f, g);
    std::vector<Rational> out;
    out.reserve(f.coefficients().size());
    for (std::size_t k = 0; k < f.coefficients().size(); ++k)
        out.push_back(f.coefficients()[k] * g.coefficients()[k]);
    return PositivePolynomial(std::move(out));
}

PositivePolynomial hadamard_quotient(const PositivePolynomial& f, const PositivePolynomial& g) {
    require_same_degree(f, g);
    std::vector<Rational> out;
    out.reserve(f.coefficients().size());
    for (std::size_t k = 0; k < f.coefficients().size(); ++k)
        out.push_back(f.coefficients()[k] / g.coefficients()[k]);
    return PositivePolynomial(std::move(out));
}

std::complex<double> evaluate(const PositivePolynomial& f, std::complex<double> s) {
    const auto& c = f.coefficients();
    std::complex<double> acc(c.back().get_d(), 0.0);
    for (std::size_t k = c.size() - 1; k-- > 0;)
        acc = acc * s + std::complex<double>(c[k].get_d(), 0.0);
    return acc;
}

PositivePolynomial all_ones(int degree) {
    if (degree < 1) throw InvalidPolynomial("degree must be at least 1");
    return PositivePolynomial(std::vector<Rational>(static_cast<std::size_t>(degree) + 1, Rational(1)));
}

std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> out(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

int compare_lexicographic(const PositivePolynomial& a, const PositivePolynomial& b) {
    if (a.degree() != b.degree())
        throw DegreeMismatch("lexicographic comparison requires equal degrees");
    for (std::size_t k = 0; k < a.coefficients().size(); ++k) {
        int c = cmp(a.coefficients()[k], b.coefficients()[k]);
        if (c != 0) return c;
    }
    return 0;
}

}  // namespace hadfact
