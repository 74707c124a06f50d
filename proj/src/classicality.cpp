#include "qproj/classicality.hpp"

#include <cmath>
#include <exception>
#include <limits>

namespace qproj {

ClassicalityAnalyzer::ClassicalityAnalyzer(MeasurementSet set, double sigma, double decision_tol)
    : set_(std::move(set)), sigma_(sigma), decision_tol_(decision_tol) {
    power_ = metric_power(set_, -sigma_);

    const auto basis = nullspace_basis(set_.spectrum());
    const Eigen::Index n = set_.size();
    const auto m = static_cast<Eigen::Index>(basis.size());
    null_.resize(n, m);
    for (Eigen::Index j = 0; j < m; ++j) null_.col(j) = basis[static_cast<std::size_t>(j)];
    if (m == 0) return;

    // c = a + i b:  N c = (Nr a - Ni b) + i (Ni a + Nr b)
    const RealMatrix nr = null_.real();
    const RealMatrix ni = null_.imag();
    re_map_.resize(n, 2 * m);
    re_map_ << nr, -ni;
    im_map_.resize(n, 2 * m);
    im_map_ << ni, nr;

    const RealMatrix gram = im_map_.transpose() * im_map_;
    const MetricSpectrum spec = hermitian_eig(gram.cast<Complex>());
    const RealMatrix gram_pinv = fractional_pseudo_power(spec, -1.0).real();
    im_pinv_ = gram_pinv * im_map_.transpose();

    const auto kernel = nullspace_basis(spec);
    im_kernel_.resize(2 * m, static_cast<Eigen::Index>(kernel.size()));
    for (std::size_t j = 0; j < kernel.size(); ++j)
        im_kernel_.col(static_cast<Eigen::Index>(j)) = kernel[j].real();
    reduced_basis_ = re_map_ * im_kernel_;
}

ClassicalityVerdict ClassicalityAnalyzer::classify(const DensityOperator& rho) const {
    const ComplexVector q = outcome_distribution(set_, rho);
    return classify_canonical(power_ * q);
}

ClassicalityVerdict ClassicalityAnalyzer::classify_canonical(const ComplexVector& canonical) const {
    if (canonical.size() != set_.size())
        throw DimensionMismatch("canonical vector length does not match outcome count");

    ClassicalityVerdict v;
    const Eigen::Index m = null_.cols();
    const RealVector re = canonical.real();
    const RealVector im = canonical.imag();

    ComplexVector witness = canonical;
    v.nullspace_coefficients = ComplexVector::Zero(m);
    if (m == 0) {
        v.imaginary_residual = im.cwiseAbs().maxCoeff();
    } else {
        const RealVector z0 = -(im_pinv_ * im);
        v.imaginary_residual = (im + im_map_ * z0).cwiseAbs().maxCoeff();
        const RealVector shifted = re + re_map_ * z0;

        RealVector z = z0;
        if (im_kernel_.cols() > 0) {
            const MaxMinResult lp = maxmin_over_nullspace(shifted, reduced_basis_);
            v.unbounded = lp.unbounded;
            const RealVector w = Eigen::Map<const RealVector>(
                lp.coefficients.data(), static_cast<Eigen::Index>(lp.coefficients.size()));
            z += im_kernel_ * w;
        }
        for (Eigen::Index j = 0; j < m; ++j) v.nullspace_coefficients(j) = Complex(z(j), z(m + j));
        witness += null_ * v.nullspace_coefficients;
    }

    v.complex_obstruction = v.imaginary_residual > kImaginaryTol;
    v.maxmin_value = v.unbounded ? std::numeric_limits<double>::infinity()
                                 : witness.real().minCoeff();
    v.boundary = std::abs(v.maxmin_value) <= decision_tol_;
    v.classical = !v.complex_obstruction && v.maxmin_value >= -decision_tol_;

    v.witness.sigma = sigma_;
    v.witness.entries = std::move(witness);
    v.witness.nullspace_dim = static_cast<int>(m);
    v.witness.canonical = m == 0 || v.nullspace_coefficients.cwiseAbs().maxCoeff() == 0.0;
    return v;
}

ClassicalityVerdict sigma_classical(const MeasurementSet& set, const DensityOperator& rho,
                                    double sigma, double decision_tol) {
    return ClassicalityAnalyzer(set, sigma, decision_tol).classify(rho);
}

bool closed_form_oracle(CatalogId id, double sigma, const BlochVector& v) {
    const double sqrt2 = std::sqrt(2.0);
    const double sqrt3 = std::sqrt(3.0);
    const double sqrt6 = std::sqrt(6.0);
    switch (id) {
    case CatalogId::Tetrahedron: {
        const double c = std::pow(3.0, 1.0 - sigma);
        return -std::pow(3.0, -sigma) <= v.z && v.z <= c + 2.0 * sqrt2 * v.x &&
               std::abs(v.y) <= (c - v.z - sqrt2 * v.x) / sqrt6;
    }
    case CatalogId::Trine:
        return v.x >= -std::pow(2.0, -sigma) &&
               std::abs(v.y) <= (std::pow(2.0, 1.0 - sigma) - v.x) / sqrt3;
    case CatalogId::Octahedron:
        return std::pow(3.0, 1.0 - sigma) - std::abs(v.x) - std::abs(v.y) - std::abs(v.z) >= 0.0;
    case CatalogId::Square:
        return std::pow(2.0, 1.0 - sigma) - std::abs(v.x) - std::abs(v.y) >= 0.0;
    }
    throw UnknownCatalogId(std::to_string(static_cast<int>(id)));
}

bool closed_form_oracle(std::string_view name, double sigma, const BlochVector& v) {
    return closed_form_oracle(parse_catalog_id(name), sigma, v);
}

namespace {

int grid_half_count(double step) {
    if (!(step > 0.0 && step <= 0.5))
        throw InvalidArgument("scan step must lie in (0, 0.5], got " + std::to_string(step));
    return static_cast<int>(std::floor(1.0 / step + 1e-9));
}

ScanPoint evaluate(const ClassicalityAnalyzer& analyzer, const BlochVector& v) {
    const ClassicalityVerdict verdict = analyzer.classify(bloch_to_density(v));
    return {v, verdict.classical, verdict.boundary, verdict.maxmin_value};
}

RegionScan finish(double sigma, double step, std::vector<ScanPoint> points) {
    RegionScan scan;
    scan.sigma = sigma;
    scan.step = step;
    scan.half_count = grid_half_count(step);
    scan.points = std::move(points);
    for (const auto& p : scan.points)
        if (p.classical) ++scan.classical_count;
    scan.classical_fraction = scan.points.empty()
                                  ? 0.0
                                  : static_cast<double>(scan.classical_count) /
                                        static_cast<double>(scan.points.size());
    return scan;
}

void require_qubit(const MeasurementSet& set) {
    if (set.dim() != 2)
        throw WrongDimension("region scan needs a qubit measurement, got dimension " +
                             std::to_string(set.dim()));
}

} // namespace

std::vector<BlochVector> bloch_grid(double step) {
    const int n = grid_half_count(step);
    const double limit = 1.0 + 1e-12;
    std::vector<BlochVector> grid;
    for (int i = -n; i <= n; ++i)
        for (int j = -n; j <= n; ++j)
            for (int k = -n; k <= n; ++k) {
                const BlochVector v{i * step, j * step, k * step};
                if (v.norm() <= limit) grid.push_back(v);
            }
    return grid;
}

RegionScan region_scan_serial(const MeasurementSet& set, double sigma, double step,
                              double decision_tol) {
    require_qubit(set);
    const auto grid = bloch_grid(step);
    const ClassicalityAnalyzer analyzer(set, sigma, decision_tol);
    std::vector<ScanPoint> points;
    points.reserve(grid.size());
    for (const auto& v : grid) points.push_back(evaluate(analyzer, v));
    return finish(sigma, step, std::move(points));
}

RegionScan region_scan(const MeasurementSet& set, double sigma, double step, double decision_tol) {
    require_qubit(set);
    const auto grid = bloch_grid(step);
    const ClassicalityAnalyzer analyzer(set, sigma, decision_tol);
    std::vector<ScanPoint> points(grid.size());
    std::exception_ptr failure;

    const auto count = static_cast<std::ptrdiff_t>(grid.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            points[static_cast<std::size_t>(i)] = evaluate(analyzer, grid[static_cast<std::size_t>(i)]);
        } catch (...) {
#pragma omp critical(qproj_region_scan_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return finish(sigma, step, std::move(points));
}

} // namespace qproj
