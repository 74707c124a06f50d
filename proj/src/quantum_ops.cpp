#include "qproj/quantum_ops.hpp"

#include <algorithm>
#include <cmath>

namespace qproj {

std::string to_string(DensityViolation::Kind kind) {
    switch (kind) {
    case DensityViolation::Kind::NotHermitian: return "NotHermitian";
    case DensityViolation::Kind::TraceNotOne: return "TraceNotOne";
    case DensityViolation::Kind::NotPSD: return "NotPSD";
    }
    return "Unknown";
}

namespace {

std::string describe(const std::vector<DensityViolation>& violations) {
    std::string msg = "invalid density operator:";
    for (const auto& v : violations)
        msg += " " + to_string(v.kind) + "(" + std::to_string(v.deviation) + ")";
    return msg;
}

} // namespace

InvalidDensity::InvalidDensity(std::vector<DensityViolation> violations)
    : Error(describe(violations)), violations_(std::move(violations)) {}

bool InvalidDensity::has(DensityViolation::Kind kind) const {
    return std::any_of(violations_.begin(), violations_.end(),
                       [kind](const DensityViolation& v) { return v.kind == kind; });
}

namespace pauli {

ComplexMatrix identity() { return ComplexMatrix::Identity(2, 2); }

ComplexMatrix x() {
    ComplexMatrix m(2, 2);
    m << 0.0, 1.0, 1.0, 0.0;
    return m;
}

ComplexMatrix y() {
    ComplexMatrix m(2, 2);
    m << 0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0;
    return m;
}

ComplexMatrix z() {
    ComplexMatrix m(2, 2);
    m << 1.0, 0.0, 0.0, -1.0;
    return m;
}

} // namespace pauli

std::vector<DensityViolation> density_violations(const ComplexMatrix& m, double tol) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw DimensionMismatch("density operator must be a non-empty square matrix");

    std::vector<DensityViolation> out;
    const double herm = hermiticity_defect(m);
    if (herm > tol) out.push_back({DensityViolation::Kind::NotHermitian, herm});

    const double trace_dev = std::abs(m.trace() - Complex(1.0));
    if (trace_dev > tol) out.push_back({DensityViolation::Kind::TraceNotOne, trace_dev});

    // PSD check on the Hermitian part so that it stays meaningful when the
    // Hermiticity check has already failed.
    const ComplexMatrix herm_part = 0.5 * (m + m.adjoint());
    const MetricSpectrum spec = hermitian_eig(herm_part);
    const double lambda_min = spec.eigenvalues(spec.dim() - 1);
    if (lambda_min < -tol) out.push_back({DensityViolation::Kind::NotPSD, -lambda_min});
    return out;
}

DensityOperator validate_density(const ComplexMatrix& m, double tol) {
    return DensityOperator(m, tol);
}

DensityOperator::DensityOperator(const ComplexMatrix& m, double tol) {
    auto violations = density_violations(m, tol);
    if (!violations.empty()) throw InvalidDensity(std::move(violations));
    matrix_ = m;
}

double DensityOperator::purity() const { return (matrix_ * matrix_).trace().real(); }

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols())
        throw DimensionMismatch("hs_inner: operands must be square of equal dimension");
    // tr(A^dag B) = sum_ij conj(A_ij) B_ij
    return (a.conjugate().cwiseProduct(b)).sum();
}

double hs_norm(const ComplexMatrix& a) { return a.norm(); }

DensityOperator bloch_to_density(const BlochVector& v) {
    const double r = v.norm();
    if (r > 1.0 + 1e-9) throw OutsideBall(r);
    ComplexMatrix m(2, 2);
    m << 0.5 * (1.0 + v.z), 0.5 * Complex(v.x, -v.y),
         0.5 * Complex(v.x, v.y), 0.5 * (1.0 - v.z);
    return DensityOperator(m);
}

BlochVector density_to_bloch(const DensityOperator& rho) {
    if (rho.dim() != 2)
        throw WrongDimension("density_to_bloch requires a qubit state, got dimension " +
                             std::to_string(rho.dim()));
    const ComplexMatrix& m = rho.matrix();
    return {(m * pauli::x()).trace().real(), (m * pauli::y()).trace().real(),
            (m * pauli::z()).trace().real()};
}

} // namespace qproj
