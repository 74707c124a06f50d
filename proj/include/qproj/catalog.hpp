// catalog.hpp
// The four qubit POVMs used as case studies, plus standard basis pairs for
// Kirkwood-Dirac distributions. All entries come from closed-form radicals.

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>

#include "qproj/measurement_frame.hpp"
#include "qproj/quasiprob.hpp"

namespace qproj {

enum class CatalogId { Tetrahedron, Trine, Octahedron, Square };

inline constexpr std::array<CatalogId, 4> kAllCatalogIds{
    CatalogId::Tetrahedron, CatalogId::Trine, CatalogId::Octahedron, CatalogId::Square};

std::string to_string(CatalogId id);
CatalogId parse_catalog_id(std::string_view name);

// Outcome orders:
//   tetrahedron  psi3, psi0, psi1, psi2   (Pi = |psi><psi| / 2, psi3 = |0>)
//   trine        psi0, psi1, psi2         (Pi = 2/3 |psi><psi|, equatorial)
//   octahedron   x+, x-, y+, y-, z+, z-   (Pi = |w><w| / 3)
//   square       x+, x-, y+, y-           (Pi = |w><w| / 2)
MeasurementSet catalog(CatalogId id);
MeasurementSet catalog(std::string_view name);

enum class BasisPairKind { ComputationalHadamard, Fourier };

// ComputationalHadamard is always d = 2. Fourier pairs the computational
// basis with the DFT basis b_l = d^{-1/2} sum_j e^{2 pi i j l / d} |j>.
std::pair<Basis, Basis> standard_basis_pair(BasisPairKind kind, int d = 2);

} // namespace qproj
