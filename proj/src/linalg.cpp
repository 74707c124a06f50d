#include "qproj/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qproj/errors.hpp"

namespace qproj {

namespace {

double offdiag_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j)
        for (Eigen::Index i = 0; i < a.rows(); ++i)
            if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

// One unitary rotation in the (p, q) plane that zeroes a(p, q).
//
// With a(p, q) = |b| e^{i phi}, the phase matrix diag(1, e^{-i phi}) makes the
// 2x2 block real symmetric, after which an ordinary Jacobi rotation applies.
// The combined rotation J has J_pp = c, J_pq = s, J_qp = -s e^{-i phi},
// J_qq = c e^{-i phi}; we form a <- J^dag a J and v <- v J.
void rotate(ComplexMatrix& a, ComplexMatrix& v, Eigen::Index p, Eigen::Index q) {
    const Complex apq = a(p, q);
    const double mag = std::abs(apq);
    if (mag == 0.0) return;

    const Complex phase = apq / mag;  // e^{i phi}
    const Complex phase_conj = std::conj(phase);
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double tau = (aqq - app) / (2.0 * mag);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    const Eigen::Index n = a.rows();
    // columns: a <- a J
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - s * phase_conj * akq;
        a(k, q) = s * akp + c * phase_conj * akq;
    }
    // rows: a <- J^dag a
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - s * phase * aqk;
        a(q, k) = s * apk + c * phase * aqk;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = app - t * mag;
    a(q, q) = aqq + t * mag;

    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = c * vkp - s * phase_conj * vkq;
        v(k, q) = s * vkp + c * phase_conj * vkq;
    }
}

} // namespace

double hermiticity_defect(const ComplexMatrix& m) {
    if (m.size() == 0) return 0.0;
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

MetricSpectrum hermitian_eig(const ComplexMatrix& m, double tol, const JacobiOptions& options) {
    if (m.rows() != m.cols())
        throw DimensionMismatch("hermitian_eig expects a square matrix");
    if (!(tol > 0.0)) throw Error("hermitian_eig: tolerance must be positive");

    const double scale = m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
    const double defect = hermiticity_defect(m);
    if (defect > kHermiticityTol * std::max(1.0, scale)) throw NonHermitianInput(defect);

    const Eigen::Index n = m.rows();
    ComplexMatrix a = 0.5 * (m + m.adjoint());
    ComplexMatrix v = ComplexMatrix::Identity(n, n);

    const double target = options.relative_offdiag_tol * a.norm();
    int sweeps = 0;
    while (offdiag_norm(a) >= target && offdiag_norm(a) > 0.0) {
        if (sweeps >= options.max_sweeps) throw NoConvergence(sweeps);
        for (Eigen::Index p = 0; p < n; ++p)
            for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
        ++sweeps;
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
        return a(i, i).real() > a(j, j).real();
    });

    MetricSpectrum spec;
    spec.eigenvalues.resize(n);
    spec.eigenvectors.resize(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        spec.eigenvalues(k) = a(order[k], order[k]).real();
        spec.eigenvectors.col(k) = v.col(order[k]);
    }
    const double lambda_max = n > 0 ? spec.eigenvalues(0) : 0.0;
    spec.tolerance_used = tol * std::max(lambda_max, 1.0);
    spec.rank = static_cast<int>(
        (spec.eigenvalues.array() > spec.tolerance_used).count());
    return spec;
}

ComplexMatrix fractional_pseudo_power(const MetricSpectrum& spectrum, double a) {
    const Eigen::Index n = spectrum.dim();
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        const double lambda = spectrum.eigenvalues(k);
        if (lambda <= spectrum.tolerance_used) continue;
        const ComplexVector& col = spectrum.eigenvectors.col(k);
        out.noalias() += std::pow(lambda, a) * (col * col.adjoint());
    }
    // exact Hermitian symmetry regardless of rounding in the outer products
    return 0.5 * (out + out.adjoint());
}

std::vector<ComplexVector> nullspace_basis(const MetricSpectrum& spectrum) {
    std::vector<ComplexVector> basis;
    for (Eigen::Index k = 0; k < spectrum.dim(); ++k)
        if (spectrum.eigenvalues(k) <= spectrum.tolerance_used)
            basis.emplace_back(spectrum.eigenvectors.col(k));
    return basis;
}

ComplexMatrix range_projector(const MetricSpectrum& spectrum) {
    return fractional_pseudo_power(spectrum, 0.0);
}

} // namespace qproj
