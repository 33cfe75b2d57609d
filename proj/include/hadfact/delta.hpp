#pragma once

#include "hadfact/polynomial.hpp"

namespace hadfact {

// The two coefficient-ratio invariants of a degree-n polynomial (n >= 4):
//   delta1 = a1*a4 / (a3*a2)
//   delta2 = a_{n-1}*a0 / (a_{n-3}*a2)
// Defined on all positive-coefficient polynomials; no stability required.
// Both are invariant under scaling f by a positive constant.
struct DeltaPair {
    Rational delta1;
    Rational delta2;
};

DeltaPair deltas(const PositivePolynomial& f);

// For stable f all three strict inequalities hold:
//   delta1 < 1, delta2 < 1, delta1 + delta2 < 1
// (they are the necessary margins m1, m2, m3 rescaled by positive factors).
struct IneqReport {
    DeltaPair d;
    bool d1_lt_1;
    bool d2_lt_1;
    bool sum_lt_1;
    Rational margin1;     // 1 - delta1
    Rational margin2;     // 1 - delta2
    Rational margin_sum;  // 1 - delta1 - delta2
};
IneqReport lemma1_check(const PositivePolynomial& f);

// Algebraic identity on positive-coefficient polynomials:
//   delta_i(f <hadamard-quotient> g) = delta_i(f) / delta_i(g), exactly.
struct QuotientDeltaIdentity {
    DeltaPair quotient_deltas;  // deltas of f diamond g
    DeltaPair delta_ratios;     // componentwise deltas(f)/deltas(g)
    bool equal1;
    bool equal2;
};
QuotientDeltaIdentity quotient_delta_identity(const PositivePolynomial& f,
                                              const PositivePolynomial& g);

// When the Hadamard quotient f diamond g is stable, both invariants must
// strictly increase from f to g. Requires an exact stability certificate
// for the quotient; throws QuotientNotStable otherwise.
struct MonotonicityReport {
    DeltaPair f_deltas;
    DeltaPair g_deltas;
    bool d1_increases;
    bool d2_increases;
};
MonotonicityReport lemma2_check(const PositivePolynomial& f, const PositivePolynomial& g);

// Factorization obstruction omega = sqrt(delta1) + sqrt(delta2).
//
// If f = g1 (hadamard) g2 with g1, g2 stable, then with g = g2 and
// q = f diamond g both stable:
//   delta1(f)/delta1(g) + delta2(f)/delta2(g) = delta1(q) + delta2(q) < 1
// with delta1(g) + delta2(g) < 1. Minimizing the left side over the
// feasible (delta1(g), delta2(g)) shows feasibility forces
// (sqrt(delta1(f)) + sqrt(delta2(f)))^2 < 1. Hence omega >= 1 certifies
// that no Hadamard factorization exists (the boundary omega = 1 is
// included because all inequalities above are strict). Full derivation in
// docs/theory.md.
//
// The certificate compares omega with 1 in exact rational arithmetic
// (omega >= 1 iff delta1+delta2 >= 1, or else 4*delta1*delta2 >=
// (1-delta1-delta2)^2); the decimal bounds are directed outward.
struct ObstructionRecord {
    DeltaPair d;
    Rational omega_lower;                 // rational bound, rounded down
    Rational omega_upper;                 // rational bound, rounded up
    int omega_vs_one = 0;                 // exact sign of omega - 1
    bool certified_unfactorable = false;  // omega_vs_one >= 0
};
ObstructionRecord obstruction_value(const PositivePolynomial& f, unsigned digits = 30);

}  // namespace hadfact
