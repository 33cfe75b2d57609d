#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hadfact {

// Exact coefficient arithmetic. mpq_class already maintains the canonical
// form this project relies on: lowest terms, denominator >= 1.
using Rational = mpq_class;

// Accepts "p/q", integer, and plain decimal tokens ("1.25", "-3e-2").
// The result is canonicalized; a zero denominator is a ParseError.
Rational parse_rational(std::string_view token);

// Canonical serialization: "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rational& r);

// Exact conversion; doubles are dyadic rationals. Throws ParseError on
// non-finite input.
Rational rational_from_double(double x);

int sign(const Rational& r);

enum class RoundDir { Down, Up };

// Decimal rendering of r with `digits` fraction digits, rounded toward
// -inf (Down) or +inf (Up).
std::string decimal_string(const Rational& r, unsigned digits, RoundDir dir);

// Rational bracket lo <= sqrt(r) <= hi with hi - lo <= 10^-digits.
// Requires r >= 0.
struct RationalInterval {
    Rational lo;
    Rational hi;
};
RationalInterval sqrt_bounds(const Rational& r, unsigned digits);

// Exact sign of (sqrt(a) + sqrt(b)) - (sqrt(c) + sqrt(d)) for a,b,c,d >= 0.
// No floating point anywhere; ties are detected exactly.
int compare_sqrt_sums(const Rational& a, const Rational& b,
                      const Rational& c, const Rational& d);

// Exact sign of sqrt(u) - (k + sqrt(v)) for u,v >= 0 and rational k.
int compare_sqrt_vs(const Rational& u, const Rational& k, const Rational& v);

}  // namespace hadfact
