#include "hadfact/root_oracle.hpp"

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>

#include "hadfact/errors.hpp"

namespace hadfact {

namespace {

// Parlett-Reinsch style balancing: scale row/column pairs by powers of two
// until the 1-norms stop improving. Powers of two keep the scaling exact.
void balance(Eigen::MatrixXd& m) {
    const int n = static_cast<int>(m.rows());
    Eigen::MatrixXd off = m;
    off.diagonal().setZero();
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            double row_norm = off.row(i).lpNorm<1>();
            double col_norm = off.col(i).lpNorm<1>();
            if (row_norm == 0.0 || col_norm == 0.0) continue;
            int exponent = 0;
            std::frexp(row_norm / col_norm, &exponent);
            exponent /= 2;
            if (exponent != 0) {
                double scaled_col = std::ldexp(col_norm, exponent);
                double scaled_row = std::ldexp(row_norm, -exponent);
                if (scaled_col + scaled_row < 0.9 * (col_norm + row_norm)) {
                    changed = true;
                    off.row(i) *= std::ldexp(1.0, -exponent);
                    off.col(i) *= std::ldexp(1.0, exponent);
                }
            }
        }
    }
    off.diagonal() = m.diagonal();
    m = off;
}

}  // namespace

RootSet polynomial_roots(const PositivePolynomial& f) {
    const int n = f.degree();
    const auto& c = f.coefficients();
    const double leading = c.back().get_d();

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
    companion.diagonal(-1).setOnes();
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[static_cast<std::size_t>(i)].get_d() / leading;
    balance(companion);

    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success)
        throw ConvergenceFailure("companion-matrix eigensolver did not converge");

    RootSet out;
    out.roots.reserve(static_cast<std::size_t>(n));
    out.max_real_part = -std::numeric_limits<double>::infinity();
    out.min_axis_distance = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
        std::complex<double> r(solver.eigenvalues()[i].real(), solver.eigenvalues()[i].imag());
        out.roots.push_back(r);
        out.max_real_part = std::max(out.max_real_part, r.real());
        out.min_axis_distance = std::min(out.min_axis_distance, std::abs(r.real()));
    }
    return out;
}

bool is_stable_float(const PositivePolynomial& f, double margin) {
    if (!(margin > 0)) throw ParseError("margin must be positive");
    return polynomial_roots(f).max_real_part < -margin;
}

}  // namespace hadfact
