#include "qproj/catalog.hpp"

#include <cmath>
#include <numbers>

namespace qproj {

namespace {

ComplexVector ket(Complex a0, Complex a1) {
    ComplexVector v(2);
    v << a0, a1;
    return v;
}

ComplexMatrix scaled_projector(const ComplexVector& v, double weight) {
    return weight * (v * v.adjoint());
}

// omega^j with omega = exp(2 pi i / 3), exact radicals
Complex omega(int j) {
    const double half_sqrt3 = std::sqrt(3.0) / 2.0;
    switch (((j % 3) + 3) % 3) {
    case 0: return {1.0, 0.0};
    case 1: return {-0.5, half_sqrt3};
    default: return {-0.5, -half_sqrt3};
    }
}

// Eigenstates of the Pauli operators with a real positive first amplitude.
struct PauliKets {
    ComplexVector x_plus = ket(1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2);
    ComplexVector x_minus = ket(1.0 / std::numbers::sqrt2, -1.0 / std::numbers::sqrt2);
    ComplexVector y_plus = ket(1.0 / std::numbers::sqrt2, Complex(0.0, 1.0 / std::numbers::sqrt2));
    ComplexVector y_minus = ket(1.0 / std::numbers::sqrt2, Complex(0.0, -1.0 / std::numbers::sqrt2));
    ComplexVector z_plus = ket(1.0, 0.0);
    ComplexVector z_minus = ket(0.0, 1.0);
};

MeasurementSet tetrahedron() {
    const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
    const double amp1 = std::numbers::sqrt2 * inv_sqrt3;
    std::vector<ComplexMatrix> ops{scaled_projector(ket(1.0, 0.0), 0.5)};
    for (int j = 0; j < 3; ++j) ops.push_back(scaled_projector(ket(inv_sqrt3, amp1 * omega(j)), 0.5));
    return MeasurementSet(std::move(ops), {"psi3", "psi0", "psi1", "psi2"});
}

MeasurementSet trine() {
    const double amp = 1.0 / std::numbers::sqrt2;
    std::vector<ComplexMatrix> ops;
    for (int j = 0; j < 3; ++j) ops.push_back(scaled_projector(ket(amp, amp * omega(j)), 2.0 / 3.0));
    return MeasurementSet(std::move(ops), {"psi0", "psi1", "psi2"});
}

MeasurementSet octahedron() {
    const PauliKets k;
    const double w = 1.0 / 3.0;
    return MeasurementSet({scaled_projector(k.x_plus, w), scaled_projector(k.x_minus, w),
                           scaled_projector(k.y_plus, w), scaled_projector(k.y_minus, w),
                           scaled_projector(k.z_plus, w), scaled_projector(k.z_minus, w)},
                          {"x+", "x-", "y+", "y-", "z+", "z-"});
}

MeasurementSet square() {
    const PauliKets k;
    return MeasurementSet({scaled_projector(k.x_plus, 0.5), scaled_projector(k.x_minus, 0.5),
                           scaled_projector(k.y_plus, 0.5), scaled_projector(k.y_minus, 0.5)},
                          {"x+", "x-", "y+", "y-"});
}

} // namespace

std::string to_string(CatalogId id) {
    switch (id) {
    case CatalogId::Tetrahedron: return "tetrahedron";
    case CatalogId::Trine: return "trine";
    case CatalogId::Octahedron: return "octahedron";
    case CatalogId::Square: return "square";
    }
    return "unknown";
}

CatalogId parse_catalog_id(std::string_view name) {
    for (CatalogId id : kAllCatalogIds)
        if (name == to_string(id)) return id;
    throw UnknownCatalogId(std::string(name));
}

MeasurementSet catalog(CatalogId id) {
    switch (id) {
    case CatalogId::Tetrahedron: return tetrahedron();
    case CatalogId::Trine: return trine();
    case CatalogId::Octahedron: return octahedron();
    case CatalogId::Square: return square();
    }
    throw UnknownCatalogId(std::to_string(static_cast<int>(id)));
}

MeasurementSet catalog(std::string_view name) { return catalog(parse_catalog_id(name)); }

std::pair<Basis, Basis> standard_basis_pair(BasisPairKind kind, int d) {
    Basis a;
    Basis b;
    switch (kind) {
    case BasisPairKind::ComputationalHadamard: {
        const PauliKets k;
        a = {k.z_plus, k.z_minus};
        b = {k.x_plus, k.x_minus};
        break;
    }
    case BasisPairKind::Fourier: {
        if (d < 2) throw DegenerateBasis("fourier basis pair needs d >= 2");
        const double norm = 1.0 / std::sqrt(static_cast<double>(d));
        for (int j = 0; j < d; ++j) a.push_back(ComplexVector::Unit(d, j));
        for (int l = 0; l < d; ++l) {
            ComplexVector v(d);
            for (int j = 0; j < d; ++j) {
                // reduce j*l mod d so large products keep the phase exact
                const double angle = 2.0 * std::numbers::pi * ((j * l) % d) / d;
                v(j) = norm * Complex(std::cos(angle), std::sin(angle));
            }
            b.push_back(std::move(v));
        }
        break;
    }
    }
    for (std::size_t k = 0; k < a.size(); ++k)
        for (std::size_t l = 0; l < b.size(); ++l)
            if (std::abs(b[l].dot(a[k])) < 1e-10)
                throw DegenerateBasis("overlap <b_" + std::to_string(l) + "|a_" + std::to_string(k) +
                                      "> vanishes");
    return {std::move(a), std::move(b)};
}

} // namespace qproj
