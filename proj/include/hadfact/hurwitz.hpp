#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hadfact/polynomial.hpp"

namespace hadfact {

// The n x n Hurwitz matrix of a degree-n polynomial, entry rule
// entry(i,j) = a_{n-2i+j} (1-based), zero outside 0..n:
//
//   a_{n-1}  a_n      0        0      ...
//   a_{n-3}  a_{n-2}  a_{n-1}  a_n    ...
//   a_{n-5}  a_{n-4}  a_{n-3}  ...
//   ...                               a_0
//
// Each row is the previous one shifted right by two positions; the
// diagonal reads a_{n-1}, a_{n-2}, ..., a_0.
class HurwitzMatrix {
public:
    explicit HurwitzMatrix(const PositivePolynomial& f);

    int order() const { return order_; }

    // 1-based, as in the entry rule above.
    const Rational& entry(int i, int j) const;

private:
    int order_;
    std::vector<Rational> entries_;  // row-major
};

HurwitzMatrix hurwitz_matrix(const PositivePolynomial& f);

// Exact determinant of a dense rational matrix (row-major, m x m),
// fraction-free elimination with row pivoting.
Rational exact_determinant(std::vector<Rational> m, int size);

// All n leading principal minors of H, exact. One Bareiss sweep computes
// the whole sequence; a zero pivot mid-sweep falls back to per-minor
// determinants for the remainder.
std::vector<Rational> leading_principal_minors(const HurwitzMatrix& h);

// Classical Hurwitz criterion: stable iff every leading principal minor is
// strictly positive. Exact arithmetic, no tolerance; stops at the first
// non-positive pivot.
bool is_stable_exact(const PositivePolynomial& f);

struct StabilityReport {
    bool stable;
    std::vector<Rational> minors;  // all n leading principal minors
};
StabilityReport stability_report(const PositivePolynomial& f);

// Arbitrary (possibly non-contiguous) square submatrix selection.
struct MinorReport {
    std::vector<int> rows;  // strictly increasing, 1-based
    std::vector<int> cols;
    Rational determinant;
    bool diagonal_all_positive;  // the submatrix's own diagonal
};
MinorReport submatrix(const HurwitzMatrix& h, std::vector<int> rows, std::vector<int> cols);

// For a stable polynomial every square submatrix of the Hurwitz matrix has
// positive determinant exactly when its diagonal is all positive
// (Kemperman). The audit enumerates all square submatrices up to
// max_minor_size when there are at most sample_budget of them, otherwise
// it samples that many without replacement (seeded), and checks both
// directions: positive diagonal => det > 0, zero on the diagonal =>
// det <= 0 (entries are coefficients or zero, never negative).
struct AuditViolation {
    std::vector<int> rows;
    std::vector<int> cols;
    Rational determinant;
    bool diagonal_all_positive;
};

struct AuditReport {
    std::uint64_t total_submatrices = 0;  // of size <= max_minor_size
    std::uint64_t checked = 0;
    bool sampled = false;
    std::uint64_t violations = 0;
    std::optional<AuditViolation> first_violation;  // lexicographic order
    std::vector<std::uint64_t> checked_by_size;     // index k-1 -> count of k x k
    std::uint64_t seed = 0;
};

AuditReport kemperman_audit(const PositivePolynomial& f, int max_minor_size,
                            std::uint64_t sample_budget, std::uint64_t seed,
                            int workers = 1);

// The three exact margins that must be positive for any stable polynomial
// of degree >= 4:
//   m1 = a3*a2 - a1*a4
//   m2 = a_{n-3}*a2 - a_{n-1}*a0
//   m3 = a_{n-3}*a3*a2 - a_{n-3}*a4*a1 - a_{n-1}*a3*a0
struct NecessaryMargins {
    Rational m1;
    Rational m2;
    Rational m3;
};
NecessaryMargins necessary_margins(const PositivePolynomial& f);

// Location of the 3x3 submatrix of the Hurwitz matrix whose determinant
// equals m3 for every degree-n polynomial:
//   [ a3  a4  0       ]
//   [ a1  a2  a_{n-1} ]
//   [ 0   a0  a_{n-3} ]
// Even n: rows ((n-2)/2, n/2, (n+2)/2), cols (1, 2, n-1).
// Odd n:  rows ((n-1)/2, (n+1)/2, (n+3)/2), cols (2, 3, n).
// (Instantiations for n = 4, 5, 6 are tabulated in docs/theory.md.)
struct SubmatrixLocation {
    std::vector<int> rows;
    std::vector<int> cols;
};
SubmatrixLocation locate_margin_submatrix(int degree);

}  // namespace hadfact
