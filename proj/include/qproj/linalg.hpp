// linalg.hpp
// Dense complex linear algebra: Hermitian eigendecomposition by cyclic Jacobi
// rotations, fractional pseudo-powers and nullspace extraction.

#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qproj {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kDefaultRankTol = 1e-9;
inline constexpr double kHermiticityTol = 1e-10;

// Eigendecomposition of a Hermitian (typically Gram) matrix.
//
// Eigenvalues are sorted in descending order and the columns of `eigenvectors`
// are the matching orthonormal eigenvectors. `tolerance_used` is the absolute
// cutoff below which an eigenvalue is treated as zero, i.e. the relative
// tolerance scaled by max(lambda_max, 1).
struct MetricSpectrum {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;
    int rank = 0;
    double tolerance_used = 0.0;

    int dim() const { return static_cast<int>(eigenvalues.size()); }
    int nullity() const { return dim() - rank; }
};

struct JacobiOptions {
    int max_sweeps = 100;
    double relative_offdiag_tol = 1e-12;
};

// Max-norm of M - M^dag.
double hermiticity_defect(const ComplexMatrix& m);

// Throws NonHermitianInput when M is not Hermitian within 1e-10 (scaled by
// max(1, max|M_ij|)), NoConvergence when the sweep cap is exceeded.
MetricSpectrum hermitian_eig(const ComplexMatrix& m, double tol = kDefaultRankTol,
                             const JacobiOptions& options = {});

// Sum over eigenvalues above the cutoff of lambda^a v v^dag. Eigenvalues in
// the nullspace never contribute, so a = -1 is the Moore-Penrose inverse and
// a = 0 is the orthogonal projector onto the range.
ComplexMatrix fractional_pseudo_power(const MetricSpectrum& spectrum, double a);

// Orthonormal basis of the eigenspace with eigenvalues at or below the cutoff.
std::vector<ComplexVector> nullspace_basis(const MetricSpectrum& spectrum);

// Orthogonal projector onto the range, sum of v v^dag over the kept eigenvectors.
ComplexMatrix range_projector(const MetricSpectrum& spectrum);

} // namespace qproj
