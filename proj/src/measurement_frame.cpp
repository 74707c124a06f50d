#include "qproj/measurement_frame.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

namespace qproj {

struct MeasurementSet::Cache {
    std::once_flag once;
    ComplexMatrix metric;
    MetricSpectrum spectrum;
};

MeasurementSet::MeasurementSet(std::vector<ComplexMatrix> operators, std::vector<std::string> labels,
                               double rank_tol)
    : operators_(std::move(operators)), labels_(std::move(labels)), rank_tol_(rank_tol),
      cache_(std::make_shared<Cache>()) {
    if (operators_.empty()) throw InvalidMeasurementSet("measurement set needs at least one operator");
    dim_ = static_cast<int>(operators_.front().rows());
    if (dim_ == 0) throw InvalidMeasurementSet("measurement operators must be non-empty");
    for (std::size_t k = 0; k < operators_.size(); ++k) {
        const auto& op = operators_[k];
        if (op.rows() != op.cols())
            throw InvalidMeasurementSet("operator " + std::to_string(k) + " is not square");
        if (op.rows() != dim_)
            throw InvalidMeasurementSet("operator " + std::to_string(k) + " has dimension " +
                                        std::to_string(op.rows()) + ", expected " +
                                        std::to_string(dim_));
    }
    if (labels_.empty()) {
        for (std::size_t k = 0; k < operators_.size(); ++k) labels_.push_back("k" + std::to_string(k));
    } else if (labels_.size() != operators_.size()) {
        throw InvalidMeasurementSet("label count does not match operator count");
    }
}

const ComplexMatrix& MeasurementSet::metric() const {
    spectrum();
    return cache_->metric;
}

const MetricSpectrum& MeasurementSet::spectrum() const {
    std::call_once(cache_->once, [this] {
        cache_->metric = metric_tensor(*this);
        cache_->spectrum = hermitian_eig(cache_->metric, rank_tol_);
    });
    return cache_->spectrum;
}

MeasurementSet MeasurementSet::with_rank_tol(double tol) const {
    return MeasurementSet(operators_, labels_, tol);
}

ComplexMatrix metric_tensor(const MeasurementSet& set) {
    const int n = set.size();
    ComplexMatrix g(n, n);
    for (int k = 0; k < n; ++k) {
        g(k, k) = hs_inner(set.op(k), set.op(k)).real();
        for (int l = k + 1; l < n; ++l) {
            g(k, l) = hs_inner(set.op(k), set.op(l));
            g(l, k) = std::conj(g(k, l));
        }
    }
    return g;
}

ComplexVector outcome_distribution(const MeasurementSet& set, const ComplexMatrix& op) {
    if (op.rows() != set.dim() || op.cols() != set.dim())
        throw DimensionMismatch("state dimension " + std::to_string(op.rows()) +
                                " does not match measurement dimension " + std::to_string(set.dim()));
    ComplexVector q(set.size());
    for (int k = 0; k < set.size(); ++k) q(k) = hs_inner(set.op(k), op);
    return q;
}

ComplexVector outcome_distribution(const MeasurementSet& set, const DensityOperator& rho) {
    return outcome_distribution(set, rho.matrix());
}

ComplexMatrix metric_power(const MeasurementSet& set, double exponent) {
    if (exponent == 0.0) return ComplexMatrix::Identity(set.size(), set.size());
    return fractional_pseudo_power(set.spectrum(), exponent);
}

std::vector<ComplexMatrix> dual_frame(const MeasurementSet& set, double sigma) {
    if (sigma == 0.0) return set.operators();
    const ComplexMatrix w = metric_power(set, -sigma);
    std::vector<ComplexMatrix> out;
    out.reserve(static_cast<std::size_t>(set.size()));
    for (int j = 0; j < set.size(); ++j) {
        ComplexMatrix delta = ComplexMatrix::Zero(set.dim(), set.dim());
        for (int l = 0; l < set.size(); ++l) delta += w(l, j) * set.op(l);
        out.push_back(std::move(delta));
    }
    return out;
}

CompletenessClass classify_completeness(const MeasurementSet& set) {
    CompletenessClass c;
    c.span_rank = set.spectrum().rank;
    c.outcome_count = set.size();
    c.dim = set.dim();
    c.is_complete = c.span_rank == set.dim() * set.dim();
    c.is_overcomplete = c.span_rank < c.outcome_count;
    return c;
}

PovmReport validate_povm(const MeasurementSet& set, double tol) {
    PovmReport r;
    r.min_eigenvalue = std::numeric_limits<double>::infinity();
    ComplexMatrix total = ComplexMatrix::Zero(set.dim(), set.dim());
    for (const auto& op : set.operators()) {
        r.hermiticity_defect = std::max(r.hermiticity_defect, hermiticity_defect(op));
        const ComplexMatrix herm = 0.5 * (op + op.adjoint());
        const MetricSpectrum spec = hermitian_eig(herm);
        r.min_eigenvalue = std::min(r.min_eigenvalue, spec.eigenvalues(spec.dim() - 1));
        total += op;
    }
    r.completeness_defect =
        (total - ComplexMatrix::Identity(set.dim(), set.dim())).cwiseAbs().maxCoeff();
    r.is_povm = r.hermiticity_defect <= tol && r.min_eigenvalue >= -tol &&
                r.completeness_defect <= tol;
    return r;
}

} // namespace qproj
