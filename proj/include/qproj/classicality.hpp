// classicality.hpp
// Sigma-classicality decisions: a state is sigma-classical when some
// representation P_sigma + N (N in the nullspace of the metric) is real and
// entrywise nonnegative. The best nullspace shift is found by the max-min
// linear program in simplex.hpp.

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "qproj/catalog.hpp"
#include "qproj/quasiprob.hpp"
#include "qproj/simplex.hpp"

namespace qproj {

inline constexpr double kDecisionTol = 1e-9;
inline constexpr double kImaginaryTol = 1e-9;

struct ClassicalityVerdict {
    bool classical = false;
    // |maxmin_value| <= decision tolerance; such states count as classical
    bool boundary = false;
    // best achievable minimum real part over nullspace shifts (+inf if unbounded)
    double maxmin_value = 0.0;
    QuasiprobVector witness;
    // shift coefficients c in witness = canonical + sum_j c_j N_j
    ComplexVector nullspace_coefficients;
    // no shift cancels the imaginary parts; always nonclassical
    bool complex_obstruction = false;
    double imaginary_residual = 0.0;
    bool unbounded = false;
};

// Precomputes everything that depends only on (set, sigma): the metric
// pseudo-power, the nullspace and the split of complex shifts into real LP
// variables. classify() is const and safe to call concurrently.
class ClassicalityAnalyzer {
public:
    ClassicalityAnalyzer(MeasurementSet set, double sigma, double decision_tol = kDecisionTol);

    const MeasurementSet& set() const { return set_; }
    double sigma() const { return sigma_; }
    int nullspace_dim() const { return static_cast<int>(null_.cols()); }

    ClassicalityVerdict classify(const DensityOperator& rho) const;
    ClassicalityVerdict classify_canonical(const ComplexVector& canonical) const;

private:
    MeasurementSet set_;
    double sigma_;
    double decision_tol_;
    ComplexMatrix power_;
    ComplexMatrix null_;      // n x m, orthonormal nullspace columns
    RealMatrix re_map_;       // Re(N c) = re_map_ * [Re c; Im c]
    RealMatrix im_map_;       // Im(N c) = im_map_ * [Re c; Im c]
    RealMatrix im_pinv_;      // pseudo-inverse of im_map_
    RealMatrix im_kernel_;    // shifts leaving the imaginary part unchanged
    RealMatrix reduced_basis_;
};

ClassicalityVerdict sigma_classical(const MeasurementSet& set, const DensityOperator& rho,
                                    double sigma, double decision_tol = kDecisionTol);

// Closed-form region inequalities for the four catalog POVMs.
// Pure arithmetic on the Bloch coordinates.
bool closed_form_oracle(CatalogId id, double sigma, const BlochVector& v);
bool closed_form_oracle(std::string_view name, double sigma, const BlochVector& v);

struct ScanPoint {
    BlochVector v;
    bool classical = false;
    bool boundary = false;
    double maxmin = 0.0;
};

// Grid step * Z^3 restricted to |v| <= 1 + 1e-12, in x-major, then y, then z order.
struct RegionScan {
    double sigma = 0.0;
    double step = 0.0;
    int half_count = 0;  // axis indices run over [-half_count, half_count]
    std::vector<ScanPoint> points;
    std::size_t classical_count = 0;
    double classical_fraction = 0.0;
};

std::vector<BlochVector> bloch_grid(double step);

// OpenMP-parallel over grid points; output identical to region_scan_serial.
RegionScan region_scan(const MeasurementSet& set, double sigma, double step,
                       double decision_tol = kDecisionTol);

// Single-threaded reference implementation.
RegionScan region_scan_serial(const MeasurementSet& set, double sigma, double step,
                              double decision_tol = kDecisionTol);

} // namespace qproj
