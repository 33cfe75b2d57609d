#include "doctest.h"

#include <random>

#include "hadfact/errors.hpp"
#include "hadfact/hurwitz.hpp"
#include "hadfact/parallel.hpp"
#include "hadfact/random_stable.hpp"
#include "hadfact/reports.hpp"
#include "hadfact/root_oracle.hpp"
#include "oracles.hpp"

using namespace hadfact;

namespace {

PositivePolynomial poly(std::vector<long> ints) {
    std::vector<Rational> c;
    c.reserve(ints.size());
    for (long v : ints) c.emplace_back(v);
    return PositivePolynomial(std::move(c));
}

PositivePolynomial random_positive(int degree, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    std::vector<Rational> c;
    for (int k = 0; k <= degree; ++k) {
        Rational r(static_cast<long>(gen() % 999 + 1), static_cast<long>(gen() % 99 + 1));
        r.canonicalize();
        c.push_back(r);
    }
    return PositivePolynomial(std::move(c));
}

std::vector<std::vector<Rational>> leading_block(const HurwitzMatrix& h, int size) {
    std::vector<std::vector<Rational>> grid;
    for (int i = 1; i <= size; ++i) {
        std::vector<Rational> row;
        for (int j = 1; j <= size; ++j) row.push_back(h.entry(i, j));
        grid.push_back(std::move(row));
    }
    return grid;
}

const PositivePolynomial kBinomial4 = poly({1, 4, 6, 4, 1});  // (s+1)^4

}  // namespace

TEST_CASE("Hurwitz matrix entries") {
    SUBCASE("degree 4") {
        HurwitzMatrix h(kBinomial4);
        std::vector<std::vector<long>> expected{
            {4, 1, 0, 0}, {4, 6, 4, 1}, {0, 1, 4, 6}, {0, 0, 0, 1}};
        for (int i = 1; i <= 4; ++i)
            for (int j = 1; j <= 4; ++j)
                CHECK(h.entry(i, j) == Rational(expected[i - 1][j - 1]));
    }
    SUBCASE("degree 1 is the single entry a0") {
        HurwitzMatrix h(poly({1, 1}));
        CHECK(h.order() == 1);
        CHECK(h.entry(1, 1) == Rational(1));
    }
    SUBCASE("degree 2") {
        HurwitzMatrix h(poly({1, 2, 1}));
        CHECK(h.entry(1, 1) == Rational(2));
        CHECK(h.entry(1, 2) == Rational(1));
        CHECK(h.entry(2, 1) == Rational(0));
        CHECK(h.entry(2, 2) == Rational(1));
    }
    SUBCASE("out-of-range access throws") {
        HurwitzMatrix h(kBinomial4);
        CHECK_THROWS_AS(h.entry(0, 1), BadIndex);
        CHECK_THROWS_AS(h.entry(1, 5), BadIndex);
    }
}

TEST_CASE("row shift and diagonal properties") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        int n = 4 + static_cast<int>(s % 7);
        PositivePolynomial f = random_positive(n, rng::mix(21, s, 0));
        HurwitzMatrix h(f);
        for (int i = 1; i <= n; ++i) {
            CHECK(h.entry(i, i) == f.coeff(n - i));
            for (int j = 1; j <= n; ++j)
                if (i + 1 <= n && j + 2 <= n) CHECK(h.entry(i + 1, j + 2) == h.entry(i, j));
        }
    }
}

TEST_CASE("exact stability certificates") {
    SUBCASE("(s+1)^4") {
        StabilityReport rep = stability_report(kBinomial4);
        CHECK(rep.stable);
        REQUIRE(rep.minors.size() == 4);
        CHECK(rep.minors[0] == Rational(4));
        CHECK(rep.minors[1] == Rational(20));
        CHECK(rep.minors[2] == Rational(64));
        CHECK(rep.minors[3] == Rational(64));
        CHECK(is_stable_exact(kBinomial4));
    }
    SUBCASE("(1,16,36,16,1)") {
        StabilityReport rep = stability_report(poly({1, 16, 36, 16, 1}));
        CHECK(rep.stable);
        CHECK(rep.minors[0] == Rational(16));
        CHECK(rep.minors[1] == Rational(560));
        CHECK(rep.minors[2] == Rational(8704));
        CHECK(rep.minors[3] == Rational(8704));
    }
    SUBCASE("all-ones degree 4 is rejected") {
        CHECK_FALSE(is_stable_exact(all_ones(4)));
        CHECK_FALSE(is_stable_float(all_ones(4)));
    }
    SUBCASE("zero pivot fallback: all-ones minors are 1, 0, -1, -1") {
        std::vector<Rational> minors = leading_principal_minors(HurwitzMatrix(all_ones(4)));
        CHECK(minors[0] == Rational(1));
        CHECK(minors[1] == Rational(0));
        CHECK(minors[2] == Rational(-1));
        CHECK(minors[3] == Rational(-1));
    }
}

TEST_CASE("leading minors agree with the cofactor oracle") {
    for (std::uint64_t s = 0; s < 25; ++s) {
        int n = 2 + static_cast<int>(s % 6);
        PositivePolynomial f = s % 2 ? random_positive(n, rng::mix(31, s, 0))
                                     : random_stable(n, rng::mix(31, s, 1));
        HurwitzMatrix h(f);
        std::vector<Rational> minors = leading_principal_minors(h);
        for (int k = 1; k <= n; ++k) {
            CAPTURE(s);
            CAPTURE(k);
            CHECK(minors[static_cast<std::size_t>(k - 1)] ==
                  oracles::cofactor_determinant(leading_block(h, k)));
        }
    }
}

TEST_CASE("exact determinant handles row swaps") {
    // leading zero forces pivoting: det [[0,1],[1,0]] = -1
    CHECK(exact_determinant({Rational(0), Rational(1), Rational(1), Rational(0)}, 2) ==
          Rational(-1));
    CHECK(exact_determinant({Rational(0), Rational(0), Rational(0), Rational(0)}, 2) ==
          Rational(0));
    std::mt19937_64 gen(5);
    for (int t = 0; t < 30; ++t) {
        int n = 2 + t % 5;
        std::vector<Rational> flat;
        std::vector<std::vector<Rational>> grid(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational v(static_cast<long>(gen() % 19) - 9, static_cast<long>(gen() % 7 + 1));
                v.canonicalize();
                flat.push_back(v);
                grid[i].push_back(v);
            }
        CHECK(exact_determinant(flat, n) == oracles::cofactor_determinant(grid));
    }
}

TEST_CASE("submatrix minors") {
    HurwitzMatrix h(kBinomial4);
    SUBCASE("3x3 leading block of (s+1)^4") {
        MinorReport rep = submatrix(h, {1, 2, 3}, {1, 2, 3});
        CHECK(rep.determinant == Rational(64));
        CHECK(rep.diagonal_all_positive);
        CHECK(rep.determinant ==
              oracles::cofactor_determinant(leading_block(h, 3)));
    }
    SUBCASE("1x1 corner is a0") {
        MinorReport rep = submatrix(h, {4}, {4});
        CHECK(rep.determinant == kBinomial4.coeff(0));
        CHECK(rep.diagonal_all_positive);
    }
    SUBCASE("a zero row gives det 0 and a zero diagonal entry") {
        MinorReport rep = submatrix(h, {1, 4}, {1, 2});
        CHECK(rep.determinant == Rational(0));
        CHECK_FALSE(rep.diagonal_all_positive);
    }
    SUBCASE("index validation") {
        CHECK_THROWS_AS(submatrix(h, {1, 2}, {1}), BadIndex);
        CHECK_THROWS_AS(submatrix(h, {2, 1}, {1, 2}), BadIndex);
        CHECK_THROWS_AS(submatrix(h, {1, 5}, {1, 2}), BadIndex);
        CHECK_THROWS_AS(submatrix(h, {0, 1}, {1, 2}), BadIndex);
        CHECK_THROWS_AS(submatrix(h, {}, {}), BadIndex);
        CHECK_THROWS_AS(submatrix(h, {1, 1}, {1, 2}), BadIndex);
    }
}

TEST_CASE("kemperman audit") {
    SUBCASE("(s+1)^4 full enumeration up to 3x3") {
        AuditReport rep = kemperman_audit(kBinomial4, 3, 1u << 20, 7);
        CHECK_FALSE(rep.sampled);
        CHECK(rep.total_submatrices == 68);  // 16 + 36 + 16
        CHECK(rep.checked == 68);
        CHECK(rep.checked_by_size == std::vector<std::uint64_t>{16, 36, 16});
        CHECK(rep.violations == 0);
        CHECK_FALSE(rep.first_violation.has_value());
    }
    SUBCASE("(s+1)^5 full enumeration up to 3x3") {
        AuditReport rep = kemperman_audit(poly({1, 5, 10, 10, 5, 1}), 3, 1u << 20, 7);
        CHECK(rep.checked == 225);  // 25 + 100 + 100
        CHECK(rep.violations == 0);
    }
    SUBCASE("unstable input refuses to run") {
        CHECK_THROWS_AS(kemperman_audit(all_ones(4), 3, 1000, 7), NotStable);
    }
    SUBCASE("sampling kicks in beyond the budget and stays deterministic") {
        PositivePolynomial f = random_stable(8, 99);
        AuditReport a = kemperman_audit(f, 3, 100, 5, 1);
        AuditReport b = kemperman_audit(f, 3, 100, 5, 4);
        CHECK(a.sampled);
        CHECK(a.checked == 100);
        CHECK(a.violations == 0);
        CHECK(b.checked == a.checked);
        CHECK(b.violations == a.violations);
    }
    SUBCASE("worker count does not change the report bytes") {
        PositivePolynomial f = random_stable(6, 123);
        std::string one = dump_report(kemperman_report_json(f, 3, 100000, 11, 1));
        std::string four = dump_report(kemperman_report_json(f, 3, 100000, 11, 4));
        CHECK(one == four);
    }
    SUBCASE("max_minor_size must be positive") {
        CHECK_THROWS_AS(kemperman_audit(kBinomial4, 0, 10, 1), BadIndex);
    }
}

TEST_CASE("necessary margins") {
    SUBCASE("(s+1)^4") {
        NecessaryMargins m = necessary_margins(kBinomial4);
        CHECK(m.m1 == Rational(20));
        CHECK(m.m2 == Rational(20));
        CHECK(m.m3 == Rational(64));
    }
    SUBCASE("(1,16,36,16,1)") {
        NecessaryMargins m = necessary_margins(poly({1, 16, 36, 16, 1}));
        CHECK(m.m1 == Rational(560));
        CHECK(m.m2 == Rational(560));
        CHECK(m.m3 == Rational(8704));
    }
    SUBCASE("all-ones degree 4 sits on the boundary") {
        NecessaryMargins m = necessary_margins(all_ones(4));
        CHECK(m.m1 == Rational(0));
        CHECK(sgn(m.m1) <= 0);
    }
    SUBCASE("degree below 4 throws") {
        CHECK_THROWS_AS(necessary_margins(poly({1, 2, 2, 1})), DegreeTooSmall);
    }
    SUBCASE("stable polynomials have all margins positive") {
        for (std::uint64_t s = 0; s < 60; ++s) {
            NecessaryMargins m = necessary_margins(random_stable(4 + s % 5, rng::mix(41, s, 0)));
            CHECK(sgn(m.m1) > 0);
            CHECK(sgn(m.m2) > 0);
            CHECK(sgn(m.m3) > 0);
        }
    }
}

TEST_CASE("located margin submatrix") {
    SUBCASE("fixed locations") {
        SubmatrixLocation l4 = locate_margin_submatrix(4);
        CHECK(l4.rows == std::vector<int>{1, 2, 3});
        CHECK(l4.cols == std::vector<int>{1, 2, 3});
        SubmatrixLocation l5 = locate_margin_submatrix(5);
        CHECK(l5.rows == std::vector<int>{2, 3, 4});
        CHECK(l5.cols == std::vector<int>{2, 3, 5});
        SubmatrixLocation l6 = locate_margin_submatrix(6);
        CHECK(l6.rows == std::vector<int>{2, 3, 4});
        CHECK(l6.cols == std::vector<int>{1, 2, 5});
        CHECK_THROWS_AS(locate_margin_submatrix(3), DegreeTooSmall);
    }
    SUBCASE("selected entries form the expected pattern") {
        for (int n = 4; n <= 10; ++n) {
            PositivePolynomial f = random_positive(n, rng::mix(51, 0, n));
            HurwitzMatrix h(f);
            SubmatrixLocation loc = locate_margin_submatrix(n);
            auto e = [&](int r, int c) { return h.entry(loc.rows[r], loc.cols[c]); };
            CHECK(e(0, 0) == f.coeff(3));
            CHECK(e(0, 1) == f.coeff(4));
            CHECK(e(0, 2) == Rational(0));
            CHECK(e(1, 0) == f.coeff(1));
            CHECK(e(1, 1) == f.coeff(2));
            CHECK(e(1, 2) == f.coeff(n - 1));
            CHECK(e(2, 0) == Rational(0));
            CHECK(e(2, 1) == f.coeff(0));
            CHECK(e(2, 2) == f.coeff(n - 3));
        }
    }
    SUBCASE("determinant equals the third margin for arbitrary positive polynomials") {
        for (std::uint64_t s = 0; s < 40; ++s) {
            int n = 4 + static_cast<int>(s % 7);
            PositivePolynomial f = random_positive(n, rng::mix(52, s, 0));
            SubmatrixLocation loc = locate_margin_submatrix(n);
            MinorReport rep = submatrix(HurwitzMatrix(f), loc.rows, loc.cols);
            CHECK(rep.determinant == necessary_margins(f).m3);
        }
    }
}

TEST_CASE("float oracle") {
    CHECK(is_stable_float(kBinomial4));
    // (s^2+1)(s+1)^2 = (1,2,2,2,1): roots at +/- i sit on the axis
    CHECK_FALSE(is_stable_float(poly({1, 2, 2, 2, 1})));
    RootSet roots = polynomial_roots(poly({1, 2, 2, 2, 1}));
    CHECK(roots.min_axis_distance < 1e-8);
    CHECK_THROWS_AS(is_stable_float(kBinomial4, -1.0), ParseError);

    SUBCASE("dual-oracle agreement on a seeded corpus") {
        int checked = 0;
        for (std::uint64_t s = 0; s < 150; ++s) {
            int n = 3 + static_cast<int>(s % 6);
            PositivePolynomial f = s % 2 ? random_stable(n, rng::mix(61, s, 0))
                                         : random_unstable(n, rng::mix(61, s, 1));
            if (polynomial_roots(f).min_axis_distance < 1e-6) continue;
            ++checked;
            CAPTURE(s);
            CHECK(is_stable_exact(f) == is_stable_float(f));
        }
        CHECK(checked > 100);
    }
}

TEST_CASE("kemperman biconditional holds on random stable polynomials") {
    for (std::uint64_t s = 0; s < 10; ++s) {
        PositivePolynomial f = random_stable(4 + static_cast<int>(s % 4), rng::mix(71, s, 0));
        AuditReport rep = kemperman_audit(f, 3, 1u << 20, s, 2);
        CAPTURE(s);
        CHECK(rep.violations == 0);
    }
}
