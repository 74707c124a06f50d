// simplex.hpp
// Max-min linear program over nullspace shifts, solved with a dense tableau
// simplex method using Bland's rule.

#pragma once

#include <vector>

#include "qproj/linalg.hpp"

namespace qproj {

struct MaxMinResult {
    // max over c of min_k (p + sum_j c_j N_j)(k); +inf when unbounded
    double t_star = 0.0;
    std::vector<double> coefficients;
    bool unbounded = false;
    int pivots = 0;
};

// Maximises t subject to p(k) + sum_j c_j basis[j](k) >= t for all k, with c
// and t free. An empty basis returns the minimum entry of p. When the program
// is unbounded the coefficients are those of the last feasible vertex.
MaxMinResult maxmin_over_nullspace(const RealVector& p, const std::vector<RealVector>& basis);

// Same program with the shift directions as the columns of `basis` (n x r).
MaxMinResult maxmin_over_nullspace(const RealVector& p, const RealMatrix& basis);

} // namespace qproj
