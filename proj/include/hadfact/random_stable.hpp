#pragma once

#include <cstdint>

#include "hadfact/polynomial.hpp"

namespace hadfact {

// Monic degree-n polynomial that is Hurwitz stable by construction: the
// exact expansion of floor(n/2) complex-conjugate root pairs and (n mod 2)
// negative real roots, all real parts drawn from (-root_scale, 0).
// Sampled doubles are promoted to exact rationals before expansion, so the
// result is certifiable with zero tolerance. Deterministic in
// (degree, seed, root_scale).
PositivePolynomial random_stable(int degree, std::uint64_t seed, double root_scale = 1.0);

// Same root recipe with one conjugate pair's real part flipped into the
// right half plane; redraws until every expanded coefficient stays
// positive. Unstable by construction; requires degree >= 3 (for degrees
// 1 and 2 positive coefficients already imply stability). Test-corpus
// generator for the dual-oracle runs.
PositivePolynomial random_unstable(int degree, std::uint64_t seed, double root_scale = 1.0);

}  // namespace hadfact
