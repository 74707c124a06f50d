// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Runs without a test framework so it can be executed directly.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "qproj/cli.hpp"
#include "qproj/io.hpp"

using namespace qproj;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

ComplexMatrix scaled(std::initializer_list<std::initializer_list<double>> rows, double s) {
    const auto n = static_cast<Eigen::Index>(rows.size());
    ComplexMatrix m(n, n);
    Eigen::Index i = 0;
    for (const auto& row : rows) {
        Eigen::Index j = 0;
        for (double v : row) m(i, j++) = v * s;
        ++i;
    }
    return m;
}

Outcome golden_metrics() {
    const std::pair<CatalogId, ComplexMatrix> cases[] = {
        {CatalogId::Tetrahedron, scaled({{3, 1, 1, 1}, {1, 3, 1, 1}, {1, 1, 3, 1}, {1, 1, 1, 3}}, 1.0 / 12)},
        {CatalogId::Trine, scaled({{4, 1, 1}, {1, 4, 1}, {1, 1, 4}}, 1.0 / 9)},
        {CatalogId::Octahedron, scaled({{2, 0, 1, 1, 1, 1},
                                        {0, 2, 1, 1, 1, 1},
                                        {1, 1, 2, 0, 1, 1},
                                        {1, 1, 0, 2, 1, 1},
                                        {1, 1, 1, 1, 2, 0},
                                        {1, 1, 1, 1, 0, 2}},
                                       1.0 / 18)},
        {CatalogId::Square, scaled({{2, 0, 1, 1}, {0, 2, 1, 1}, {1, 1, 2, 0}, {1, 1, 0, 2}}, 1.0 / 8)},
    };
    double worst = 0.0;
    for (const auto& [id, expected] : cases)
        worst = std::max(worst, test::max_abs(metric_tensor(catalog(id)) - expected));
    return {worst <= 1e-12, fmt("max entry error %.3g", worst)};
}

Outcome power_formula() {
    const MeasurementSet set = catalog(CatalogId::Tetrahedron);
    double worst = 0.0;
    for (double a : {-1.25, -1.0, -0.5, 0.0, 0.5, 1.0}) {
        const RealMatrix expected = std::pow(6.0, -a) * RealMatrix::Identity(4, 4) +
                                    (std::pow(2.0, -a) - std::pow(6.0, -a)) / 4.0 * RealMatrix::Ones(4, 4);
        worst = std::max(worst, test::max_abs(fractional_pseudo_power(set.spectrum(), a) - expected.cast<Complex>()));
    }
    return {worst <= 1e-10, fmt("max entry error %.3g", worst)};
}

Outcome spectra_and_nullspaces() {
    bool ok = true;
    const MeasurementSet octa = catalog(CatalogId::Octahedron);
    const MetricSpectrum& s = octa.spectrum();
    double eig_err = std::abs(s.eigenvalues(0) - 1.0 / 3.0);
    for (int k = 1; k < 4; ++k) eig_err = std::max(eig_err, std::abs(s.eigenvalues(k) - 1.0 / 9.0));
    ok = ok && s.rank == 4 && eig_err <= 1e-10;

    const auto null = nullspace_basis(s);
    ok = ok && null.size() == 2;
    ComplexMatrix known(6, 2);
    known.col(0) << 2, 2, -1, -1, -1, -1;
    known.col(1) << 0, 0, 1, 1, -1, -1;
    double span_err = 0.0;
    if (null.size() == 2) {
        const ComplexMatrix n = test::stack_columns(null, 6);
        // each known vector lies in span(null), and the spans have equal dimension
        span_err = (n * (n.adjoint() * known) - known).norm();
    }

    const MeasurementSet square = catalog(CatalogId::Square);
    const auto sq_null = nullspace_basis(square.spectrum());
    ok = ok && sq_null.size() == 1;
    if (sq_null.size() == 1) {
        ComplexVector v(4);
        v << 1, 1, -1, -1;
        v /= 2.0;
        span_err = std::max(span_err, 1.0 - std::abs(v.dot(sq_null[0])));
    }
    ok = ok && span_err <= 1e-10;
    return {ok, fmt("eigenvalue error %.3g", eig_err) + ", " + fmt("span error %.3g", span_err)};
}

Outcome region_agreement() {
    const auto start = std::chrono::steady_clock::now();
    const auto grid = bloch_grid(0.1);
    std::size_t checked = 0;
    std::size_t disagreements = 0;
    for (CatalogId id : kAllCatalogIds) {
        for (double sigma : {0.5, 0.75, 1.0, 1.25}) {
            const ClassicalityAnalyzer analyzer(catalog(id), sigma);
            for (const BlochVector& v : grid) {
                const ClassicalityVerdict verdict = analyzer.classify(bloch_to_density(v));
                if (std::abs(verdict.maxmin_value) <= 1e-7) continue;
                ++checked;
                if (verdict.classical != closed_form_oracle(id, sigma, v)) ++disagreements;
            }
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {disagreements == 0 && seconds < 60.0,
            std::to_string(disagreements) + " disagreements over " + std::to_string(checked) +
                " points, " + fmt("%.2f s", seconds)};
}

Outcome wigner_like_totality() {
    const double octa = region_scan(catalog(CatalogId::Octahedron), 0.5, 0.1).classical_fraction;
    const double square = region_scan(catalog(CatalogId::Square), 0.5, 0.1).classical_fraction;
    const double tetra = region_scan(catalog(CatalogId::Tetrahedron), 0.0, 0.1).classical_fraction;
    return {octa == 1.0 && square == 1.0 && tetra == 1.0,
            "fractions " + fmt("%.6g", octa) + " / " + fmt("%.6g", square) + " / " + fmt("%.6g", tetra)};
}

Outcome reconstruction_identity() {
    test::Rng rng(20261018);
    double complete_err = 0.0;
    double orth_err = 0.0;
    double trine_err = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const BlochVector v = test::random_bloch(rng);
        const DensityOperator rho = bloch_to_density(v);
        for (double sigma : {0.0, 0.5, 1.0}) {
            for (CatalogId id : {CatalogId::Tetrahedron, CatalogId::Octahedron}) {
                const MeasurementSet set = catalog(id);
                complete_err = std::max(complete_err, (rho.matrix() - reconstruct(set, quasiprob(set, rho, sigma))).norm());
            }
            for (CatalogId id : {CatalogId::Trine, CatalogId::Square}) {
                const MeasurementSet set = catalog(id);
                const ComplexMatrix residual = rho.matrix() - reconstruct(set, quasiprob(set, rho, sigma));
                const Complement c = complement(set, rho);
                orth_err = std::max(orth_err, (residual - c.nu).norm());
                for (const auto& op : set.operators()) orth_err = std::max(orth_err, std::abs(hs_inner(op, c.nu)));
                if (id == CatalogId::Trine)
                    trine_err = std::max(trine_err, test::max_abs(c.nu - 0.5 * v.z * pauli::z()));
            }
        }
    }
    return {complete_err <= 1e-8 && orth_err <= 1e-9 && trine_err <= 1e-10,
            fmt("complete %.3g", complete_err) + ", " + fmt("complement %.3g", orth_err) + ", " +
                fmt("trine nu %.3g", trine_err)};
}

Outcome dual_orthonormality() {
    const MeasurementSet set = catalog(CatalogId::Tetrahedron);
    const auto duals = dual_frame(set, 1.0);
    double worst = 0.0;
    for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l)
            worst = std::max(worst, std::abs(hs_inner(set.op(k), duals[static_cast<std::size_t>(l)]) -
                                             (k == l ? 1.0 : 0.0)));
    return {worst <= 1e-9, fmt("max deviation %.3g", worst)};
}

Outcome witness_formulas() {
    test::Rng rng(8);
    double worst = 0.0;
    int compared = 0;
    const MeasurementSet octa = catalog(CatalogId::Octahedron);
    const MeasurementSet square = catalog(CatalogId::Square);
    for (double sigma : {0.5, 1.0}) {
        const ClassicalityAnalyzer oa(octa, sigma);
        const ClassicalityAnalyzer sa(square, sigma);
        for (int trial = 0; trial < 100; ++trial) {
            const BlochVector b = test::random_bloch(rng);
            const DensityOperator rho = bloch_to_density(b);
            const double w[3] = {b.x, b.y, b.z};
            const double u = std::pow(3.0, 1.0 - sigma) - std::abs(b.x) - std::abs(b.y) - std::abs(b.z);
            if (u >= 0) {
                RealVector e(6);
                for (int i = 0; i < 3; ++i) {
                    e(2 * i) = u + 3.0 * (std::abs(w[i]) + w[i]);
                    e(2 * i + 1) = u + 3.0 * (std::abs(w[i]) - w[i]);
                }
                e *= std::pow(9.0, sigma) / 18.0;
                worst = std::max(worst, test::max_abs(oa.classify(rho).witness.entries - e.cast<Complex>()));
                ++compared;
            }
            const double v = std::pow(2.0, 1.0 - sigma) - std::abs(b.x) - std::abs(b.y);
            if (v >= 0) {
                RealVector e(4);
                for (int i = 0; i < 2; ++i) {
                    e(2 * i) = v + 2.0 * (std::abs(w[i]) + w[i]);
                    e(2 * i + 1) = v + 2.0 * (std::abs(w[i]) - w[i]);
                }
                e *= std::pow(4.0, sigma) / 8.0;
                worst = std::max(worst, test::max_abs(sa.classify(rho).witness.entries - e.cast<Complex>()));
                ++compared;
            }
        }
    }
    return {worst <= 1e-8 && compared > 0, std::to_string(compared) + " witnesses, " + fmt("max error %.3g", worst)};
}

Outcome kd_equivalence() {
    test::Rng rng(9);
    double route_err = 0.0;
    double sum_err = 0.0;
    const std::pair<BasisPairKind, int> pairs[] = {
        {BasisPairKind::ComputationalHadamard, 2}, {BasisPairKind::Fourier, 2}, {BasisPairKind::Fourier, 3}};
    for (const auto& [kind, d] : pairs) {
        const auto [a, b] = standard_basis_pair(kind, d);
        const MeasurementSet weak = kd_measurement_set(a, b);
        for (int trial = 0; trial < 20; ++trial) {
            const DensityOperator rho = d == 2 ? bloch_to_density(test::random_bloch(rng)) : test::random_density(rng, d);
            const QuasiprobVector kd = kirkwood_dirac(a, b, rho);
            route_err = std::max(route_err, test::max_abs(kd.entries - quasiprob(weak, rho, 1.0).entries));
            sum_err = std::max(sum_err, std::abs(kd.entries.sum() - 1.0));
        }
    }
    return {route_err <= 1e-9 && sum_err <= 1e-10, fmt("route error %.3g", route_err) + ", " + fmt("sum error %.3g", sum_err)};
}

Outcome cli_determinism() {
    auto run = [](const std::vector<std::string>& args) {
        std::ostringstream out;
        std::ostringstream err;
        const int code = cli::run(args, out, err);
        return std::make_pair(code, out.str());
    };
    double worst = 0.0;
    bool ok = true;
    for (CatalogId id : kAllCatalogIds) {
        const auto [code, text] = run({"catalog", "--dump", to_string(id)});
        ok = ok && code == 0;
        worst = std::max(worst, test::max_abs(parse_measurement_set(text).metric() - catalog(id).metric()));
    }
    for (CatalogId id : kAllCatalogIds) {
        const std::vector<std::string> args{"scan", "--catalog", to_string(id), "--sigma", "1", "--step", "0.1"};
        const auto first = run(args);
        const auto second = run(args);
        ok = ok && first.first == 0 && first.second == second.second && !first.second.empty();
    }
    return {ok && worst <= 1e-15, fmt("round-trip metric error %.3g", worst) + (ok ? ", scans byte-identical" : ", scan mismatch")};
}

} // namespace

int main() {
    const std::pair<const char*, std::function<Outcome()>> criteria[] = {
        {"golden metric tensors", golden_metrics},
        {"tetrahedron power formula", power_formula},
        {"octahedron spectrum and nullspaces", spectra_and_nullspaces},
        {"closed-form region agreement on 21^3 grid", region_agreement},
        {"Wigner-like totality", wigner_like_totality},
        {"reconstruction identity", reconstruction_identity},
        {"dual orthonormality", dual_orthonormality},
        {"overcomplete witness formulas", witness_formulas},
        {"Kirkwood-Dirac pipeline equivalence", kd_equivalence},
        {"CLI determinism and round-trip", cli_determinism},
    };
    int failures = 0;
    int index = 1;
    for (const auto& [name, check] : criteria) {
        Outcome o;
        try {
            o = check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] AC%d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
        if (!o.pass) ++failures;
        ++index;
    }
    std::printf("%d/%d criteria passed\n", index - 1 - failures, index - 1);
    return failures == 0 ? 0 : 1;
}
