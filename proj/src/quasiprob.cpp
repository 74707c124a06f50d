#include "qproj/quasiprob.hpp"

#include <cmath>

namespace qproj {

namespace {

constexpr double kOrthonormalTol = 1e-10;
constexpr double kOverlapTol = 1e-10;

void check_orthonormal(const Basis& basis, const char* name) {
    const std::size_t d = basis.size();
    for (std::size_t i = 0; i < d; ++i) {
        if (static_cast<std::size_t>(basis[i].size()) != d)
            throw NotOrthonormal(std::string("basis ") + name + " vector " + std::to_string(i) +
                                 " has length " + std::to_string(basis[i].size()) +
                                 ", expected " + std::to_string(d));
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            const Complex ip = basis[i].dot(basis[j]);  // conjugates the first argument
            const Complex expected = i == j ? 1.0 : 0.0;
            if (std::abs(ip - expected) > kOrthonormalTol)
                throw NotOrthonormal(std::string("basis ") + name + " fails <" + std::to_string(i) +
                                     "|" + std::to_string(j) + "> = delta");
        }
    }
}

} // namespace

void check_basis_pair(const Basis& a, const Basis& b) {
    if (a.empty() || a.size() != b.size())
        throw NotOrthonormal("bases must be non-empty and of equal size");
    check_orthonormal(a, "a");
    check_orthonormal(b, "b");
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t l = 0; l < b.size(); ++l)
            if (std::abs(b[l].dot(a[k])) <= kOverlapTol) throw VanishingOverlap(k, l);
}

QuasiprobVector quasiprob(const MeasurementSet& set, const DensityOperator& rho, double sigma) {
    const ComplexVector q = outcome_distribution(set, rho);
    QuasiprobVector p;
    p.sigma = sigma;
    p.nullspace_dim = set.spectrum().nullity();
    p.canonical = true;
    p.entries = sigma == 0.0 ? q : ComplexVector(metric_power(set, -sigma) * q);
    return p;
}

ComplexMatrix reconstruct(const MeasurementSet& set, const QuasiprobVector& p) {
    if (p.size() != set.size())
        throw DimensionMismatch("quasiprobability vector has " + std::to_string(p.size()) +
                                " entries, measurement set has " + std::to_string(set.size()) +
                                " outcomes");
    const auto frame = dual_frame(set, 1.0 - p.sigma);
    ComplexMatrix out = ComplexMatrix::Zero(set.dim(), set.dim());
    for (int l = 0; l < set.size(); ++l) out += p.entries(l) * frame[static_cast<std::size_t>(l)];
    return out;
}

Complement complement(const MeasurementSet& set, const DensityOperator& rho) {
    Complement c;
    c.nu = rho.matrix() - reconstruct(set, quasiprob(set, rho, 1.0));
    c.norm = hs_norm(c.nu);
    return c;
}

QuasiprobVector kirkwood_dirac(const Basis& a, const Basis& b, const DensityOperator& rho) {
    check_basis_pair(a, b);
    const std::size_t d = a.size();
    if (static_cast<std::size_t>(rho.dim()) != d)
        throw DimensionMismatch("state dimension does not match basis size");

    QuasiprobVector p;
    p.sigma = 1.0;
    p.nullspace_dim = 0;
    p.canonical = true;
    p.entries.resize(static_cast<Eigen::Index>(d * d));
    for (std::size_t k = 0; k < d; ++k) {
        const ComplexVector rho_dag_a = rho.matrix().adjoint() * a[k];
        for (std::size_t l = 0; l < d; ++l) {
            // <a_k|rho|b_l> = (rho^dag a_k)^dag b_l
            p.entries(static_cast<Eigen::Index>(k * d + l)) = b[l].dot(a[k]) * rho_dag_a.dot(b[l]);
        }
    }
    return p;
}

MeasurementSet kd_measurement_set(const Basis& a, const Basis& b) {
    check_basis_pair(a, b);
    const std::size_t d = a.size();
    std::vector<ComplexMatrix> ops;
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < d; ++k) {
        for (std::size_t l = 0; l < d; ++l) {
            const Complex overlap = b[l].dot(a[k]);
            ops.push_back((a[k] * b[l].adjoint()) / overlap);
            labels.push_back("(" + std::to_string(k) + "," + std::to_string(l) + ")");
        }
    }
    return MeasurementSet(std::move(ops), std::move(labels));
}

} // namespace qproj
