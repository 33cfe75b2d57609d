#include "hadfact/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

#include "hadfact/errors.hpp"

namespace hadfact {

namespace {

bool is_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

// "-12.345e-2" -> -12345 / 10^3 * 10^-2, all exact.
Rational parse_decimal(std::string_view s) {
    std::string digits;
    bool negative = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = (s[i] == '-');
        ++i;
    }
    long frac_digits = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '.'); ++i) {
        if (s[i] == '.') {
            if (seen_dot) throw ParseError("malformed decimal: " + std::string(s));
            seen_dot = true;
        } else {
            digits.push_back(s[i]);
            seen_digit = true;
            if (seen_dot) ++frac_digits;
        }
    }
    if (!seen_digit) throw ParseError("malformed number: " + std::string(s));
    long exponent = 0;
    if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        ++i;
        if (i >= s.size()) throw ParseError("malformed exponent: " + std::string(s));
        char* end = nullptr;
        std::string tail(s.substr(i));
        exponent = std::strtol(tail.c_str(), &end, 10);
        if (end == tail.c_str() || *end != '\0')
            throw ParseError("malformed exponent: " + std::string(s));
    } else if (i != s.size()) {
        throw ParseError("malformed number: " + std::string(s));
    }

    mpz_class num(digits.empty() ? "0" : digits);
    if (negative) num = -num;
    long pow10 = exponent - frac_digits;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(pow10)));
    Rational r;
    if (pow10 >= 0) {
        r = Rational(num * scale);
    } else {
        r = Rational(num, scale);
    }
    r.canonicalize();
    return r;
}

}  // namespace

Rational parse_rational(std::string_view token) {
    // trim
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front()))) token.remove_prefix(1);
    while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back()))) token.remove_suffix(1);
    if (token.empty()) throw ParseError("empty rational token");

    auto slash = token.find('/');
    if (slash != std::string_view::npos) {
        std::string_view ns = token.substr(0, slash);
        std::string_view ds = token.substr(slash + 1);
        if (!is_integer_token(ns) || !is_integer_token(ds))
            throw ParseError("malformed rational: " + std::string(token));
        mpz_class num{std::string(ns)};
        mpz_class den{std::string(ds)};
        if (den == 0) throw ParseError("zero denominator: " + std::string(token));
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    if (is_integer_token(token)) {
        return Rational(mpz_class(std::string(token)));
    }
    return parse_decimal(token);
}

std::string format_rational(const Rational& r) {
    return r.get_str();
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw ParseError("non-finite value cannot be converted to a rational");
    Rational r;
    mpq_set_d(r.get_mpq_t(), x);
    return r;
}

int sign(const Rational& r) {
    return sgn(r);
}

std::string decimal_string(const Rational& r, unsigned digits, RoundDir dir) {
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    mpz_class num = r.get_num() * scale;
    mpz_class q;
    if (dir == RoundDir::Down) {
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
    } else {
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), r.get_den().get_mpz_t());
    }
    bool negative = q < 0;
    mpz_class mag = abs(q);
    std::string s = mag.get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    if (negative) s.insert(0, "-");
    return s;
}

RationalInterval sqrt_bounds(const Rational& r, unsigned digits) {
    if (sgn(r) < 0) throw ParseError("sqrt_bounds requires a non-negative argument");
    // sqrt(p/q) = sqrt(p*q)/q; bracket sqrt(p*q*M^2) with the integer sqrt.
    mpz_class m;
    mpz_ui_pow_ui(m.get_mpz_t(), 10, digits);
    mpz_class n = r.get_num() * r.get_den() * m * m;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    mpz_class den = r.get_den() * m;
    RationalInterval iv;
    iv.lo = Rational(root, den);
    iv.lo.canonicalize();
    if (root * root == n) {
        iv.hi = iv.lo;
    } else {
        iv.hi = Rational(root + 1, den);
        iv.hi.canonicalize();
    }
    return iv;
}

// sign of sqrt(u) - (k + sqrt(v)). Squarings need sign bookkeeping:
//   sqrt(u) ? k + sqrt(v)
// If the right side is negative the answer is +1. Otherwise compare
//   u ? k^2 + v + 2k*sqrt(v)  <=>  L := u - k^2 - v ? 2k*sqrt(v)
// and resolve the remaining single square root by one more squaring,
// reversing the order when both sides are non-positive.
int compare_sqrt_vs(const Rational& u, const Rational& k, const Rational& v) {
    if (sgn(u) < 0 || sgn(v) < 0) throw ParseError("compare_sqrt_vs requires non-negative radicands");
    auto unit = [](int c) { return c < 0 ? -1 : c > 0 ? 1 : 0; };
    if (sgn(k) < 0 && k * k > v) return +1;  // rhs < 0 <= lhs
    const Rational L = u - k * k - v;
    const Rational R2 = 4 * k * k * v;  // (2k*sqrt(v))^2
    if (sgn(k) >= 0) {
        if (sgn(L) < 0) return -1;
        return unit(cmp(L * L, R2));
    }
    // k < 0, rhs >= 0: 2k*sqrt(v) <= 0
    if (sgn(L) > 0) return +1;
    return -unit(cmp(L * L, R2));
}

int compare_sqrt_sums(const Rational& a, const Rational& b,
                      const Rational& c, const Rational& d) {
    // Both sums are non-negative, so comparing squares preserves order:
    //   (sqrt(a)+sqrt(b))^2 = a+b + 2*sqrt(ab).
    const Rational k = (c + d - (a + b)) / 2;
    return compare_sqrt_vs(a * b, k, c * d);
}

}  // namespace hadfact
