#include "hadfact/random_stable.hpp"

#include <random>
#include <string>

#include "hadfact/errors.hpp"
#include "hadfact/parallel.hpp"

namespace hadfact {

namespace {

// Exact quadratic factor s^2 + 2a*s + (a^2 + b^2) for the conjugate pair
// -a +/- b*i, built from already-rationalized draws.
std::vector<Rational> conjugate_pair_factor(const Rational& a, const Rational& b) {
    return {a * a + b * b, 2 * a, Rational(1)};
}

Rational draw_positive(std::mt19937_64& gen, double scale) {
    return rational_from_double(rng::uniform01(gen) * scale);
}

PositivePolynomial expand(const std::vector<std::vector<Rational>>& factors) {
    std::vector<Rational> acc{Rational(1)};
    for (const auto& fac : factors) acc = convolve(acc, fac);
    return PositivePolynomial(std::move(acc));
}

}  // namespace

PositivePolynomial random_stable(int degree, std::uint64_t seed, double root_scale) {
    if (degree < 1) throw InvalidPolynomial("degree must be at least 1");
    if (!(root_scale > 0)) throw InvalidPolynomial("root_scale must be positive");
    std::mt19937_64 gen(rng::mix(seed, 0x5741B1Eull, static_cast<std::uint64_t>(degree)));

    std::vector<std::vector<Rational>> factors;
    const int pairs = degree / 2;
    for (int p = 0; p < pairs; ++p) {
        Rational a = draw_positive(gen, root_scale);
        Rational b = draw_positive(gen, root_scale);
        factors.push_back(conjugate_pair_factor(a, b));
    }
    if (degree % 2 == 1) {
        Rational r = draw_positive(gen, root_scale);
        factors.push_back({r, Rational(1)});
    }
    return expand(factors);
}

PositivePolynomial random_unstable(int degree, std::uint64_t seed, double root_scale) {
    if (degree < 3)
        throw DegreeTooSmall("unstable polynomials with positive coefficients need degree >= 3");
    if (!(root_scale > 0)) throw InvalidPolynomial("root_scale must be positive");
    std::mt19937_64 gen(rng::mix(seed, 0xF11Full, static_cast<std::uint64_t>(degree)));

    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<std::vector<Rational>> factors;
        const int pairs = degree / 2;
        for (int p = 0; p < pairs; ++p) {
            Rational a = draw_positive(gen, root_scale);
            Rational b = draw_positive(gen, root_scale);
            if (p == 0) {
                // Right-half-plane pair +a +/- b*i: factor s^2 - 2a*s + (a^2+b^2).
                // Shrink the real part so the other factors can keep the
                // expanded coefficients positive.
                a /= 8;
                factors.push_back({a * a + b * b, -2 * a, Rational(1)});
            } else {
                factors.push_back(conjugate_pair_factor(a, b));
            }
        }
        if (degree % 2 == 1) {
            Rational r = draw_positive(gen, root_scale);
            factors.push_back({r, Rational(1)});
        }
        std::vector<Rational> acc{Rational(1)};
        for (const auto& fac : factors) acc = convolve(acc, fac);
        bool all_positive = true;
        for (const auto& c : acc)
            if (sgn(c) <= 0) { all_positive = false; break; }
        if (all_positive) return PositivePolynomial(std::move(acc));
    }
    throw ConvergenceFailure("could not draw an unstable polynomial with positive coefficients (degree " +
                             std::to_string(degree) + ")");
}

}  // namespace hadfact
