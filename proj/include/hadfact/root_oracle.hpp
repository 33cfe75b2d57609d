#pragma once

#include <complex>
#include <vector>

#include "hadfact/polynomial.hpp"

namespace hadfact {

struct RootSet {
    std::vector<std::complex<double>> roots;
    double max_real_part;
    double min_axis_distance;  // min |Re(root)| over all roots
};

// All roots as eigenvalues of the balanced companion matrix. Diagnostics
// and cross-checks only; certificates always come from the exact minor
// test. Throws ConvergenceFailure if the eigensolver fails.
RootSet polynomial_roots(const PositivePolynomial& f);

// True iff every root has real part < -margin.
bool is_stable_float(const PositivePolynomial& f, double margin = 1e-9);

}  // namespace hadfact
