#include "qproj/simplex.hpp"

#include <cmath>
#include <limits>

#include "qproj/errors.hpp"

namespace qproj {

namespace {

constexpr double kPivotEps = 1e-12;
constexpr int kMaxPivots = 100000;

// Tableau for: maximise t+ - t- subject to
//   t+ - t- - sum_j N(k, j) (c+_j - c-_j) + s_k = p_k - t0,   all vars >= 0,
// where t0 = min p keeps the right-hand side nonnegative so the slack basis is
// feasible from the start.
class Tableau {
public:
    Tableau(const RealVector& p, const RealMatrix& basis, double t0)
        : rows_(p.size()), shifts_(basis.cols()), vars_(2 + 2 * shifts_ + rows_),
          t_(rows_, vars_ + 1), cost_(RealVector::Zero(vars_)), basic_(rows_) {
        t_.setZero();
        for (Eigen::Index k = 0; k < rows_; ++k) {
            t_(k, 0) = 1.0;
            t_(k, 1) = -1.0;
            for (Eigen::Index j = 0; j < shifts_; ++j) {
                t_(k, 2 + 2 * j) = -basis(k, j);
                t_(k, 3 + 2 * j) = basis(k, j);
            }
            t_(k, 2 + 2 * shifts_ + k) = 1.0;
            t_(k, vars_) = p(k) - t0;
            basic_[k] = 2 + 2 * shifts_ + k;
        }
        cost_(0) = 1.0;
        cost_(1) = -1.0;
    }

    // Returns false when the objective is unbounded.
    bool solve(int& pivots) {
        for (;;) {
            const Eigen::Index entering = choose_entering();
            if (entering < 0) return true;
            const Eigen::Index leaving = choose_leaving(entering);
            if (leaving < 0) return false;
            pivot(leaving, entering);
            if (++pivots > kMaxPivots) throw Error("simplex pivot limit exceeded");
        }
    }

    RealVector solution() const {
        RealVector x = RealVector::Zero(vars_);
        for (Eigen::Index k = 0; k < rows_; ++k) x(basic_[k]) = t_(k, vars_);
        return x;
    }

private:
    double reduced_cost(Eigen::Index j) const {
        double d = cost_(j);
        for (Eigen::Index k = 0; k < rows_; ++k) d -= cost_(basic_[k]) * t_(k, j);
        return d;
    }

    // Bland: lowest-index variable with a positive reduced cost.
    Eigen::Index choose_entering() const {
        for (Eigen::Index j = 0; j < vars_; ++j)
            if (reduced_cost(j) > kPivotEps) return j;
        return -1;
    }

    // Minimum ratio; ties go to the lowest-index basic variable.
    Eigen::Index choose_leaving(Eigen::Index entering) const {
        Eigen::Index best = -1;
        double best_ratio = std::numeric_limits<double>::infinity();
        for (Eigen::Index k = 0; k < rows_; ++k) {
            const double a = t_(k, entering);
            if (a <= kPivotEps) continue;
            const double ratio = t_(k, vars_) / a;
            if (best < 0 || ratio < best_ratio - kPivotEps ||
                (std::abs(ratio - best_ratio) <= kPivotEps && basic_[k] < basic_[best])) {
                best = k;
                best_ratio = ratio;
            }
        }
        return best;
    }

    void pivot(Eigen::Index row, Eigen::Index col) {
        t_.row(row) /= t_(row, col);
        for (Eigen::Index k = 0; k < rows_; ++k) {
            if (k == row) continue;
            const double f = t_(k, col);
            if (f != 0.0) t_.row(k) -= f * t_.row(row);
        }
        basic_[row] = col;
    }

    Eigen::Index rows_;
    Eigen::Index shifts_;
    Eigen::Index vars_;
    RealMatrix t_;
    RealVector cost_;
    std::vector<Eigen::Index> basic_;
};

} // namespace

MaxMinResult maxmin_over_nullspace(const RealVector& p, const RealMatrix& basis) {
    if (p.size() == 0) throw DimensionMismatch("maxmin_over_nullspace: empty vector");
    if (basis.cols() > 0 && basis.rows() != p.size())
        throw DimensionMismatch("maxmin_over_nullspace: basis length does not match vector");

    MaxMinResult result;
    if (basis.cols() == 0) {
        result.t_star = p.minCoeff();
        return result;
    }

    const double t0 = p.minCoeff();
    Tableau tableau(p, basis, t0);
    const bool bounded = tableau.solve(result.pivots);
    const RealVector x = tableau.solution();

    RealVector c(basis.cols());
    for (Eigen::Index j = 0; j < basis.cols(); ++j) c(j) = x(2 + 2 * j) - x(3 + 2 * j);
    result.coefficients.assign(c.data(), c.data() + c.size());
    if (!bounded) {
        result.unbounded = true;
        result.t_star = std::numeric_limits<double>::infinity();
        return result;
    }
    // The objective recomputed from the shifted vector avoids tableau drift.
    result.t_star = (p + basis * c).minCoeff();
    return result;
}

MaxMinResult maxmin_over_nullspace(const RealVector& p, const std::vector<RealVector>& basis) {
    RealMatrix m(p.size(), static_cast<Eigen::Index>(basis.size()));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (basis[j].size() != p.size())
            throw DimensionMismatch("maxmin_over_nullspace: basis length does not match vector");
        m.col(static_cast<Eigen::Index>(j)) = basis[j];
    }
    return maxmin_over_nullspace(p, m);
}

} // namespace qproj
