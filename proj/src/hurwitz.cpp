#include "hadfact/hurwitz.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "hadfact/errors.hpp"
#include "hadfact/parallel.hpp"

namespace hadfact {

HurwitzMatrix::HurwitzMatrix(const PositivePolynomial& f) : order_(f.degree()) {
    const int n = order_;
    entries_.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const int k = n - 2 * i + j;
            entries_.push_back((k >= 0 && k <= n) ? f.coeff(k) : Rational(0));
        }
    }
}

const Rational& HurwitzMatrix::entry(int i, int j) const {
    if (i < 1 || i > order_ || j < 1 || j > order_)
        throw BadIndex("Hurwitz matrix index out of range");
    return entries_[static_cast<std::size_t>(i - 1) * order_ + (j - 1)];
}

HurwitzMatrix hurwitz_matrix(const PositivePolynomial& f) {
    return HurwitzMatrix(f);
}

// Bareiss condensation with row pivoting. Every division is exact; the
// fraction-free update keeps intermediate numerators and denominators from
// compounding the way plain elimination does.
Rational exact_determinant(std::vector<Rational> m, int size) {
    if (size == 0) return Rational(1);
    auto at = [&](int i, int j) -> Rational& { return m[static_cast<std::size_t>(i) * size + j]; };
    int sign_flip = 1;
    Rational prev(1);
    for (int k = 0; k < size; ++k) {
        if (sgn(at(k, k)) == 0) {
            int pivot_row = -1;
            for (int r = k + 1; r < size; ++r) {
                if (sgn(at(r, k)) != 0) { pivot_row = r; break; }
            }
            if (pivot_row < 0) return Rational(0);
            for (int j = 0; j < size; ++j) std::swap(at(k, j), at(pivot_row, j));
            sign_flip = -sign_flip;
        }
        if (k == size - 1) break;
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)) / prev;
            }
        }
        prev = at(k, k);
    }
    Rational det = at(size - 1, size - 1);
    return sign_flip < 0 ? Rational(-det) : det;
}

namespace {

std::vector<Rational> copy_entries(const HurwitzMatrix& h) {
    const int n = h.order();
    std::vector<Rational> m;
    m.reserve(static_cast<std::size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) m.push_back(h.entry(i, j));
    return m;
}

Rational leading_block_determinant(const HurwitzMatrix& h, int size) {
    std::vector<Rational> block;
    block.reserve(static_cast<std::size_t>(size) * size);
    for (int i = 1; i <= size; ++i)
        for (int j = 1; j <= size; ++j) block.push_back(h.entry(i, j));
    return exact_determinant(std::move(block), size);
}

}  // namespace

std::vector<Rational> leading_principal_minors(const HurwitzMatrix& h) {
    const int n = h.order();
    std::vector<Rational> m = copy_entries(h);
    auto at = [&](int i, int j) -> Rational& { return m[static_cast<std::size_t>(i) * n + j]; };
    std::vector<Rational> minors(static_cast<std::size_t>(n));
    Rational prev(1);
    for (int k = 0; k < n; ++k) {
        // After k condensation steps the (k,k) entry is the order-(k+1)
        // leading principal minor.
        minors[static_cast<std::size_t>(k)] = at(k, k);
        if (k == n - 1) break;
        if (sgn(at(k, k)) == 0) {
            // The sweep cannot divide through a zero pivot; finish the
            // remaining minors one determinant at a time.
            for (int j = k + 1; j < n; ++j)
                minors[static_cast<std::size_t>(j)] = leading_block_determinant(h, j + 1);
            break;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)) / prev;
        prev = minors[static_cast<std::size_t>(k)];
    }
    return minors;
}

bool is_stable_exact(const PositivePolynomial& f) {
    const HurwitzMatrix h(f);
    const int n = h.order();
    std::vector<Rational> m = copy_entries(h);
    auto at = [&](int i, int j) -> Rational& { return m[static_cast<std::size_t>(i) * n + j]; };
    Rational prev(1);
    for (int k = 0; k < n; ++k) {
        if (sgn(at(k, k)) <= 0) return false;
        if (k == n - 1) break;
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(k, k) * at(i, j) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return true;
}

StabilityReport stability_report(const PositivePolynomial& f) {
    StabilityReport rep;
    rep.minors = leading_principal_minors(HurwitzMatrix(f));
    rep.stable = std::all_of(rep.minors.begin(), rep.minors.end(),
                             [](const Rational& d) { return sgn(d) > 0; });
    return rep;
}

namespace {

void validate_selection(const std::vector<int>& idx, int n, const char* what) {
    if (idx.empty()) throw BadIndex(std::string(what) + " selection is empty");
    int prev = 0;
    for (int v : idx) {
        if (v < 1 || v > n)
            throw BadIndex(std::string(what) + " index " + std::to_string(v) + " out of range 1.." +
                           std::to_string(n));
        if (v <= prev) throw BadIndex(std::string(what) + " indices must be strictly increasing");
        prev = v;
    }
}

}  // namespace

MinorReport submatrix(const HurwitzMatrix& h, std::vector<int> rows, std::vector<int> cols) {
    if (rows.size() != cols.size())
        throw BadIndex("row and column selections must have the same length");
    validate_selection(rows, h.order(), "row");
    validate_selection(cols, h.order(), "column");
    const int k = static_cast<int>(rows.size());
    std::vector<Rational> block;
    block.reserve(static_cast<std::size_t>(k) * k);
    bool diag_positive = true;
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) block.push_back(h.entry(rows[i], cols[j]));
        if (sgn(h.entry(rows[i], cols[i])) <= 0) diag_positive = false;
    }
    MinorReport rep;
    rep.rows = std::move(rows);
    rep.cols = std::move(cols);
    rep.determinant = exact_determinant(std::move(block), k);
    rep.diagonal_all_positive = diag_positive;
    return rep;
}

namespace {

mpz_class binomial(int n, int k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

// Lexicographic unranking of a k-combination of 1..n.
std::vector<int> unrank_combination(mpz_class rank, int n, int k) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(k));
    int next = 1;
    for (int remaining = k; remaining > 0; --remaining) {
        for (int v = next; v <= n; ++v) {
            mpz_class with_v = binomial(n - v, remaining - 1);
            if (rank < with_v) {
                out.push_back(v);
                next = v + 1;
                break;
            }
            rank -= with_v;
        }
    }
    return out;
}

bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - (k - 1 - i)) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

AuditReport kemperman_audit(const PositivePolynomial& f, int max_minor_size,
                            std::uint64_t sample_budget, std::uint64_t seed,
                            int workers) {
    if (max_minor_size < 1) throw BadIndex("max_minor_size must be at least 1");
    if (!is_stable_exact(f))
        throw NotStable("kemperman_audit requires an exactly certified stable polynomial");

    const HurwitzMatrix h(f);
    const int n = h.order();
    const int kmax = std::min(max_minor_size, n);

    std::vector<mpz_class> per_size(static_cast<std::size_t>(kmax) + 1);
    mpz_class total = 0;
    for (int k = 1; k <= kmax; ++k) {
        per_size[static_cast<std::size_t>(k)] = binomial(n, k) * binomial(n, k);
        total += per_size[static_cast<std::size_t>(k)];
    }

    AuditReport rep;
    rep.seed = seed;
    rep.checked_by_size.assign(static_cast<std::size_t>(kmax), 0);
    rep.total_submatrices = mpz_class(total).get_ui();

    // Selection list in lexicographic (size, rows, cols) order.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> selections;
    if (total <= sample_budget) {
        for (int k = 1; k <= kmax; ++k) {
            std::vector<int> rows(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) rows[static_cast<std::size_t>(i)] = i + 1;
            do {
                std::vector<int> cols(static_cast<std::size_t>(k));
                for (int i = 0; i < k; ++i) cols[static_cast<std::size_t>(i)] = i + 1;
                do {
                    selections.emplace_back(rows, cols);
                } while (next_combination(cols, n));
            } while (next_combination(rows, n));
        }
    } else {
        rep.sampled = true;
        gmp_randclass rand(gmp_randinit_mt);
        rand.seed(static_cast<unsigned long>(rng::mix(seed, 0xAD17ull)));
        std::set<mpz_class> ranks;
        while (ranks.size() < sample_budget) ranks.insert(rand.get_z_range(total));
        for (const mpz_class& global_rank : ranks) {
            mpz_class rank = global_rank;
            int k = 1;
            while (rank >= per_size[static_cast<std::size_t>(k)]) {
                rank -= per_size[static_cast<std::size_t>(k)];
                ++k;
            }
            mpz_class row_rank = rank / binomial(n, k);
            mpz_class col_rank = rank % binomial(n, k);
            selections.emplace_back(unrank_combination(row_rank, n, k),
                                    unrank_combination(col_rank, n, k));
        }
    }

    struct Result {
        Rational determinant;
        bool diag_positive;
        bool violation;
    };
    std::vector<Result> results(selections.size());
    parallel_for(selections.size(), workers, [&](std::size_t i) {
        MinorReport m = submatrix(h, selections[i].first, selections[i].second);
        bool violation = m.diagonal_all_positive ? sgn(m.determinant) <= 0
                                                 : sgn(m.determinant) > 0;
        results[i] = Result{std::move(m.determinant), m.diagonal_all_positive, violation};
    });

    for (std::size_t i = 0; i < selections.size(); ++i) {
        rep.checked += 1;
        rep.checked_by_size[selections[i].first.size() - 1] += 1;
        if (results[i].violation) {
            rep.violations += 1;
            if (!rep.first_violation) {
                rep.first_violation = AuditViolation{selections[i].first, selections[i].second,
                                                     results[i].determinant,
                                                     results[i].diag_positive};
            }
        }
    }
    return rep;
}

NecessaryMargins necessary_margins(const PositivePolynomial& f) {
    const int n = f.degree();
    if (n < 4) throw DegreeTooSmall("necessary margins are defined for degree >= 4");
    const Rational& a0 = f.coeff(0);
    const Rational& a1 = f.coeff(1);
    const Rational& a2 = f.coeff(2);
    const Rational& a3 = f.coeff(3);
    const Rational& a4 = f.coeff(4);
    const Rational& an1 = f.coeff(n - 1);
    const Rational& an3 = f.coeff(n - 3);
    NecessaryMargins m;
    m.m1 = a3 * a2 - a1 * a4;
    m.m2 = an3 * a2 - an1 * a0;
    m.m3 = an3 * a3 * a2 - an3 * a4 * a1 - an1 * a3 * a0;
    return m;
}

SubmatrixLocation locate_margin_submatrix(int degree) {
    if (degree < 4) throw DegreeTooSmall("the margin submatrix exists for degree >= 4");
    SubmatrixLocation loc;
    if (degree % 2 == 0) {
        loc.rows = {(degree - 2) / 2, degree / 2, (degree + 2) / 2};
        loc.cols = {1, 2, degree - 1};
    } else {
        loc.rows = {(degree - 1) / 2, (degree + 1) / 2, (degree + 3) / 2};
        loc.cols = {2, 3, degree};
    }
    return loc;
}

}  // namespace hadfact
