#pragma once

#include <complex>
#include <vector>

#include "hadfact/rational.hpp"

namespace hadfact {

// Degree-n polynomial with strictly positive exact rational coefficients,
// stored ascending: a0 + a1*s + ... + an*s^n. Immutable after construction.
class PositivePolynomial {
public:
    // Validates: at least degree 1, every coefficient strictly positive.
    explicit PositivePolynomial(std::vector<Rational> ascending_coefficients);

    int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }

    // a_k for 0 <= k <= degree.
    const Rational& coeff(int k) const { return coefficients_.at(static_cast<std::size_t>(k)); }

    bool operator==(const PositivePolynomial& other) const = default;

private:
    std::vector<Rational> coefficients_;
};

// Element-wise coefficient product/quotient of same-degree polynomials.
PositivePolynomial hadamard_product(const PositivePolynomial& f, const PositivePolynomial& g);
PositivePolynomial hadamard_quotient(const PositivePolynomial& f, const PositivePolynomial& g);

// Horner evaluation in double precision (diagnostics only; certificates
// never depend on it).
std::complex<double> evaluate(const PositivePolynomial& f, std::complex<double> s);

// (1, 1, ..., 1) of the given degree.
PositivePolynomial all_ones(int degree);

// Exact coefficient convolution; the expansion helper behind the stable
// sampler and a few constructive factorizations.
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b);

// Lexicographic order on ascending coefficient vectors (same degree
// required); used for deterministic tie-breaking.
int compare_lexicographic(const PositivePolynomial& a, const PositivePolynomial& b);

}  // namespace hadfact
