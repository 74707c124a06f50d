// measurement_frame.hpp
// Measurement-operator sets, their metric tensor (Gram matrix under the
// Hilbert-Schmidt inner product), outcome vectors and sigma-dual frames.

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qproj/linalg.hpp"
#include "qproj/quantum_ops.hpp"

namespace qproj {

// Ordered list of d x d measurement operators. Operators need not be
// Hermitian, positive or complete (weak measurements are allowed); see
// validate_povm for the POVM conditions.
//
// The metric spectrum is computed lazily on first use and memoised; copies
// share the memo and concurrent first calls are safe.
class MeasurementSet {
public:
    MeasurementSet(std::vector<ComplexMatrix> operators, std::vector<std::string> labels = {},
                   double rank_tol = kDefaultRankTol);

    int dim() const { return dim_; }
    int size() const { return static_cast<int>(operators_.size()); }
    const std::vector<ComplexMatrix>& operators() const { return operators_; }
    const ComplexMatrix& op(int k) const { return operators_[static_cast<std::size_t>(k)]; }
    const std::vector<std::string>& labels() const { return labels_; }
    double rank_tol() const { return rank_tol_; }

    const ComplexMatrix& metric() const;
    const MetricSpectrum& spectrum() const;

    // Same operators with a different rank tolerance (fresh memo).
    MeasurementSet with_rank_tol(double tol) const;

private:
    struct Cache;

    int dim_ = 0;
    std::vector<ComplexMatrix> operators_;
    std::vector<std::string> labels_;
    double rank_tol_;
    std::shared_ptr<Cache> cache_;
};

struct PovmReport {
    bool is_povm = false;
    double hermiticity_defect = 0.0;
    double min_eigenvalue = 0.0;
    double completeness_defect = 0.0;
};

struct CompletenessClass {
    int span_rank = 0;
    int outcome_count = 0;
    int dim = 0;
    bool is_complete = false;
    bool is_overcomplete = false;
};

// g_{kl} = tr(Pi_k^dag Pi_l).
ComplexMatrix metric_tensor(const MeasurementSet& set);

// Q(k) = tr(Pi_k^dag rho).
ComplexVector outcome_distribution(const MeasurementSet& set, const DensityOperator& rho);
ComplexVector outcome_distribution(const MeasurementSet& set, const ComplexMatrix& op);

// Delta_sigma(j) = sum_l (g^{-sigma})_{lj} Pi_l with pseudo-power semantics;
// sigma = 0 returns the operators themselves.
std::vector<ComplexMatrix> dual_frame(const MeasurementSet& set, double sigma);

// Pseudo-power g^exponent, or exactly the identity for exponent = 0.
ComplexMatrix metric_power(const MeasurementSet& set, double exponent);

CompletenessClass classify_completeness(const MeasurementSet& set);

PovmReport validate_povm(const MeasurementSet& set, double tol = 1e-9);

} // namespace qproj
