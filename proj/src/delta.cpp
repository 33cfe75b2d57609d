#include "hadfact/delta.hpp"

#include "hadfact/errors.hpp"
#include "hadfact/hurwitz.hpp"

namespace hadfact {

DeltaPair deltas(const PositivePolynomial& f) {
    const int n = f.degree();
    if (n < 4) throw DegreeTooSmall("delta invariants are defined for degree >= 4");
    DeltaPair d;
    d.delta1 = (f.coeff(1) * f.coeff(4)) / (f.coeff(3) * f.coeff(2));
    d.delta2 = (f.coeff(n - 1) * f.coeff(0)) / (f.coeff(n - 3) * f.coeff(2));
    return d;
}

IneqReport lemma1_check(const PositivePolynomial& f) {
    IneqReport rep;
    rep.d = deltas(f);
    rep.margin1 = 1 - rep.d.delta1;
    rep.margin2 = 1 - rep.d.delta2;
    rep.margin_sum = 1 - rep.d.delta1 - rep.d.delta2;
    rep.d1_lt_1 = sgn(rep.margin1) > 0;
    rep.d2_lt_1 = sgn(rep.margin2) > 0;
    rep.sum_lt_1 = sgn(rep.margin_sum) > 0;
    return rep;
}

QuotientDeltaIdentity quotient_delta_identity(const PositivePolynomial& f,
                                              const PositivePolynomial& g) {
    QuotientDeltaIdentity rep;
    rep.quotient_deltas = deltas(hadamard_quotient(f, g));
    const DeltaPair df = deltas(f);
    const DeltaPair dg = deltas(g);
    rep.delta_ratios = DeltaPair{df.delta1 / dg.delta1, df.delta2 / dg.delta2};
    rep.equal1 = rep.quotient_deltas.delta1 == rep.delta_ratios.delta1;
    rep.equal2 = rep.quotient_deltas.delta2 == rep.delta_ratios.delta2;
    return rep;
}

MonotonicityReport lemma2_check(const PositivePolynomial& f, const PositivePolynomial& g) {
    const PositivePolynomial quotient = hadamard_quotient(f, g);
    if (quotient.degree() < 4)
        throw DegreeTooSmall("delta monotonicity is defined for degree >= 4");
    if (!is_stable_exact(quotient))
        throw QuotientNotStable("the Hadamard quotient of f by g is not stable");
    MonotonicityReport rep;
    rep.f_deltas = deltas(f);
    rep.g_deltas = deltas(g);
    rep.d1_increases = rep.f_deltas.delta1 < rep.g_deltas.delta1;
    rep.d2_increases = rep.f_deltas.delta2 < rep.g_deltas.delta2;
    return rep;
}

ObstructionRecord obstruction_value(const PositivePolynomial& f, unsigned digits) {
    ObstructionRecord rec;
    rec.d = deltas(f);
    const RationalInterval s1 = sqrt_bounds(rec.d.delta1, digits);
    const RationalInterval s2 = sqrt_bounds(rec.d.delta2, digits);
    rec.omega_lower = s1.lo + s2.lo;
    rec.omega_upper = s1.hi + s2.hi;
    rec.omega_vs_one = compare_sqrt_sums(rec.d.delta1, rec.d.delta2, Rational(1), Rational(0));
    rec.certified_unfactorable = rec.omega_vs_one >= 0;
    return rec;
}

}  // namespace hadfact
