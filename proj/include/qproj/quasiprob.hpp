// quasiprob.hpp
// Sigma-parametrized quasiprobabilities P_sigma = g^{-sigma} Q, state
// reconstruction from them, the invisible complement of incomplete
// measurements and Kirkwood-Dirac distributions.

#pragma once

#include <vector>

#include "qproj/measurement_frame.hpp"

namespace qproj {

struct QuasiprobVector {
    double sigma = 0.0;
    ComplexVector entries;
    int nullspace_dim = 0;
    // true for the minimum-norm (pseudo-inverse) representation
    bool canonical = true;

    int size() const { return static_cast<int>(entries.size()); }
};

struct Complement {
    ComplexMatrix nu;
    double norm = 0.0;
};

using Basis = std::vector<ComplexVector>;

QuasiprobVector quasiprob(const MeasurementSet& set, const DensityOperator& rho, double sigma);

// sum_l p(l) Delta_{1-sigma}(l), with sigma taken from p.
ComplexMatrix reconstruct(const MeasurementSet& set, const QuasiprobVector& p);

// nu = rho - reconstruct(set, P_1): the part of rho no operator in the set sees.
Complement complement(const MeasurementSet& set, const DensityOperator& rho);

// Kirkwood-Dirac distribution over the flattened pair index k * d + l:
// P(k, l) = <b_l|a_k> <a_k|rho|b_l>, which is exactly g^{-1} Q for the weak
// measurement Pi_(k,l) = |a_k><b_l| / <b_l|a_k>.
QuasiprobVector kirkwood_dirac(const Basis& a, const Basis& b, const DensityOperator& rho);

MeasurementSet kd_measurement_set(const Basis& a, const Basis& b);

// Throws NotOrthonormal unless both bases are orthonormal and complete, and
// VanishingOverlap if some |<b_l|a_k>| <= 1e-10.
void check_basis_pair(const Basis& a, const Basis& b);

} // namespace qproj
