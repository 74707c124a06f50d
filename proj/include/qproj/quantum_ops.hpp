// quantum_ops.hpp
// Density operators, Hilbert-Schmidt inner products and qubit Bloch vectors.

#pragma once

#include <vector>

#include "qproj/errors.hpp"
#include "qproj/linalg.hpp"

namespace qproj {

inline constexpr double kDensityTol = 1e-9;

namespace pauli {
ComplexMatrix identity();
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
} // namespace pauli

// Trace-one, Hermitian, positive semidefinite operator. Only constructible
// through validation, so holding one is proof of those properties.
class DensityOperator {
public:
    // Validates and throws InvalidDensity listing every failed condition.
    explicit DensityOperator(const ComplexMatrix& m, double tol = kDensityTol);

    const ComplexMatrix& matrix() const { return matrix_; }
    int dim() const { return static_cast<int>(matrix_.rows()); }
    double purity() const;

private:
    ComplexMatrix matrix_;
};

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    double norm() const;
};

// tr(A^dag B).
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

// Hilbert-Schmidt (Frobenius) norm.
double hs_norm(const ComplexMatrix& a);

// 1/2 (1 + x sigma_x + y sigma_y + z sigma_z) = 1/2 [[1+z, x-iy], [x+iy, 1-z]].
DensityOperator bloch_to_density(const BlochVector& v);

// (tr(rho sigma_x), tr(rho sigma_y), tr(rho sigma_z)); requires a qubit state.
BlochVector density_to_bloch(const DensityOperator& rho);

// All violated conditions (empty when M is a valid state). Deviations are
// max|M - M^dag|, |tr M - 1| and -lambda_min respectively.
std::vector<DensityViolation> density_violations(const ComplexMatrix& m, double tol = kDensityTol);

DensityOperator validate_density(const ComplexMatrix& m, double tol = kDensityTol);

} // namespace qproj
