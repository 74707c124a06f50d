#include "qproj/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qproj/catalog.hpp"
#include "qproj/classicality.hpp"
#include "qproj/io.hpp"
#include "qproj/quasiprob.hpp"

namespace qproj::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct SetOptions {
    std::string catalog;
    std::string file;
    double tol = kDefaultRankTol;
};

struct StateOptions {
    std::string bloch;
    std::string file;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidArgument("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

MeasurementSet load_set(const SetOptions& opt) {
    if (!opt.catalog.empty()) return catalog(opt.catalog).with_rank_tol(opt.tol);
    return parse_measurement_set(read_file(opt.file), opt.tol);
}

std::string set_name(const SetOptions& opt) { return opt.catalog.empty() ? opt.file : opt.catalog; }

std::optional<BlochVector> parse_bloch(const std::string& text) {
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        try {
            values.push_back(std::stod(item, &used));
        } catch (const std::exception&) {
            throw InvalidArgument("--bloch expects x,y,z, got '" + text + "'");
        }
        if (used != item.size()) throw InvalidArgument("--bloch expects x,y,z, got '" + text + "'");
    }
    if (values.size() != 3) throw InvalidArgument("--bloch expects three comma-separated numbers");
    return BlochVector{values[0], values[1], values[2]};
}

DensityOperator load_state(const StateOptions& opt, double tol) {
    if (!opt.bloch.empty()) return bloch_to_density(*parse_bloch(opt.bloch));
    return validate_density(parse_state_matrix(read_file(opt.file)), std::max(tol, kDensityTol));
}

ordered_json complex_array(const ComplexVector& v) {
    ordered_json arr = ordered_json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) arr.push_back(format_complex(v(k)));
    return arr;
}

ordered_json complex_rows(const ComplexMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(complex_array(m.row(r).transpose()));
    return rows;
}

ordered_json real_array(const RealVector& v) {
    ordered_json arr = ordered_json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) arr.push_back(round_real(v(k)));
    return arr;
}

// Orthonormal basis of the nullspace that depends only on the subspace:
// Gram-Schmidt over the columns of its orthogonal projector, in column order,
// each vector phased so its first significant entry is real and positive.
std::vector<ComplexVector> canonical_nullspace(const MetricSpectrum& spec) {
    const auto raw = nullspace_basis(spec);
    const Eigen::Index n = spec.dim();
    ComplexMatrix proj = ComplexMatrix::Zero(n, n);
    for (const auto& v : raw) proj += v * v.adjoint();

    std::vector<ComplexVector> out;
    for (Eigen::Index c = 0; c < n && out.size() < raw.size(); ++c) {
        ComplexVector v = proj.col(c);
        for (const auto& u : out) v -= u.dot(v) * u;
        const double norm = v.norm();
        if (norm < 1e-8) continue;
        v /= norm;
        for (Eigen::Index k = 0; k < n; ++k) {
            if (std::abs(v(k)) > 1e-12) {
                v *= std::conj(v(k)) / std::abs(v(k));
                break;
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InvalidArgument("cannot write '" + path + "'");
    file << text;
}

int cmd_catalog(const std::string& dump, std::ostream& out) {
    if (dump.empty()) {
        for (CatalogId id : kAllCatalogIds) {
            const MeasurementSet set = catalog(id);
            const CompletenessClass cls = classify_completeness(set);
            out << to_string(id) << " outcomes=" << set.size() << " rank=" << cls.span_rank
                << " complete=" << (cls.is_complete ? "true" : "false")
                << " overcomplete=" << (cls.is_overcomplete ? "true" : "false") << "\n";
        }
        return kSuccess;
    }
    out << serialize_measurement_set(catalog(dump));
    return kSuccess;
}

int cmd_analyze(const SetOptions& opt, std::ostream& out) {
    const MeasurementSet set = load_set(opt);
    const PovmReport povm = validate_povm(set, opt.tol);
    const CompletenessClass cls = classify_completeness(set);
    const MetricSpectrum& spec = set.spectrum();

    ordered_json doc;
    doc["set"] = set_name(opt);
    doc["dim"] = set.dim();
    doc["outcomes"] = set.size();
    doc["labels"] = set.labels();
    doc["povm"] = {{"is_povm", povm.is_povm},
                   {"hermiticity_defect", round_real(povm.hermiticity_defect)},
                   {"min_eigenvalue", round_real(povm.min_eigenvalue)},
                   {"completeness_defect", round_real(povm.completeness_defect)}};
    doc["metric"] = complex_rows(set.metric());
    doc["eigenvalues"] = real_array(spec.eigenvalues);
    doc["rank"] = cls.span_rank;
    doc["informationally_complete"] = cls.is_complete;
    doc["incomplete"] = !cls.is_complete;
    doc["overcomplete"] = cls.is_overcomplete;
    ordered_json null = ordered_json::array();
    for (const auto& v : canonical_nullspace(spec)) null.push_back(complex_array(v));
    doc["nullspace"] = std::move(null);
    out << doc.dump(2) << "\n";
    return kSuccess;
}

int cmd_classify(const SetOptions& set_opt, const StateOptions& state_opt, double sigma,
                 std::ostream& out) {
    const MeasurementSet set = load_set(set_opt);
    const DensityOperator rho = load_state(state_opt, set_opt.tol);
    const ClassicalityAnalyzer analyzer(set, sigma, set_opt.tol);
    const ClassicalityVerdict verdict = analyzer.classify(rho);
    const QuasiprobVector canonical = quasiprob(set, rho, sigma);

    ordered_json doc;
    doc["set"] = set_name(set_opt);
    doc["sigma"] = round_real(sigma);
    if (rho.dim() == 2) {
        const BlochVector v = density_to_bloch(rho);
        doc["bloch"] = {round_real(v.x), round_real(v.y), round_real(v.z)};
    }
    doc["classical"] = verdict.classical;
    doc["boundary"] = verdict.boundary;
    doc["maxmin"] = round_real(verdict.maxmin_value);
    doc["complex_obstruction"] = verdict.complex_obstruction;
    doc["imaginary_residual"] = round_real(verdict.imaginary_residual);
    doc["nullspace_dim"] = verdict.witness.nullspace_dim;
    doc["canonical"] = complex_array(canonical.entries);
    doc["witness"] = complex_array(verdict.witness.entries);
    doc["nullspace_coefficients"] = complex_array(verdict.nullspace_coefficients);
    if (!set_opt.catalog.empty() && rho.dim() == 2)
        doc["closed_form_oracle"] =
            closed_form_oracle(set_opt.catalog, sigma, density_to_bloch(rho));
    out << doc.dump(2) << "\n";
    return kSuccess;
}

int cmd_scan(const SetOptions& set_opt, double sigma, double step, const std::string& path,
             std::ostream& out) {
    const MeasurementSet set = load_set(set_opt);
    const RegionScan scan = region_scan(set, sigma, step, set_opt.tol);
    std::ostringstream csv;
    csv << "x,y,z,classical,maxmin\n";
    for (const auto& p : scan.points)
        csv << format_real(p.v.x) << ',' << format_real(p.v.y) << ',' << format_real(p.v.z) << ','
            << (p.classical ? 1 : 0) << ',' << format_real(p.maxmin) << '\n';
    csv << "# classical_fraction=" << format_real(scan.classical_fraction) << '\n';
    write_output(csv.str(), path, out);
    return kSuccess;
}

int cmd_kd(const std::string& basis, int dim, const StateOptions& state_opt, double tol,
           std::ostream& out) {
    const auto kind = basis == "fourier" ? BasisPairKind::Fourier : BasisPairKind::ComputationalHadamard;
    const auto [a, b] = standard_basis_pair(kind, kind == BasisPairKind::Fourier ? dim : 2);
    const DensityOperator rho = load_state(state_opt, tol);
    const QuasiprobVector p = kirkwood_dirac(a, b, rho);

    const auto d = static_cast<Eigen::Index>(a.size());
    out << "k,l,P\n";
    for (Eigen::Index k = 0; k < d; ++k)
        for (Eigen::Index l = 0; l < d; ++l)
            out << k << ',' << l << ',' << format_complex(p.entries(k * d + l)) << '\n';
    out << "# sum=" << format_complex(p.entries.sum()) << '\n';
    return kSuccess;
}

int cmd_reconstruct(const SetOptions& set_opt, const std::string& p_file, double sigma,
                    std::ostream& out) {
    const MeasurementSet set = load_set(set_opt);
    QuasiprobVector p;
    p.sigma = sigma;
    p.entries = parse_p_vector(read_file(p_file));
    p.nullspace_dim = set.spectrum().nullity();
    p.canonical = false;
    const ComplexMatrix m = reconstruct(set, p);

    ordered_json doc;
    doc["set"] = set_name(set_opt);
    doc["sigma"] = round_real(sigma);
    doc["matrix"] = complex_rows(m);
    doc["trace"] = format_complex(m.trace());
    out << doc.dump(2) << "\n";
    return kSuccess;
}

void add_set_options(CLI::App* cmd, SetOptions& opt) {
    std::vector<std::string> names;
    for (CatalogId id : kAllCatalogIds) names.push_back(to_string(id));
    auto* cat = cmd->add_option("--catalog", opt.catalog, "Catalog measurement set")
                    ->check(CLI::IsMember(names));
    auto* file = cmd->add_option("--set", opt.file, "MeasurementSetFile JSON");
    cat->excludes(file);
    file->excludes(cat);
    cmd->add_option("--tol", opt.tol, "Rank and decision tolerance")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
}

void add_state_options(CLI::App* cmd, StateOptions& opt) {
    auto* bloch = cmd->add_option("--bloch", opt.bloch, "Qubit Bloch vector x,y,z");
    auto* file = cmd->add_option("--state", opt.file, "Density matrix JSON file");
    bloch->excludes(file);
    file->excludes(bloch);
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Measurement-based quasiprobabilities and sigma-classicality", "qproj"};
    app.require_subcommand(1);

    std::string dump;
    auto* catalog_cmd = app.add_subcommand("catalog", "List catalog sets, or dump one as JSON");
    {
        std::vector<std::string> names;
        for (CatalogId id : kAllCatalogIds) names.push_back(to_string(id));
        catalog_cmd->add_option("--dump", dump, "Catalog set to dump")->check(CLI::IsMember(names));
    }

    SetOptions analyze_set;
    auto* analyze_cmd = app.add_subcommand("analyze", "Metric tensor, spectrum, rank and nullspace");
    add_set_options(analyze_cmd, analyze_set);

    SetOptions classify_set;
    StateOptions classify_state;
    double classify_sigma = 1.0;
    auto* classify_cmd = app.add_subcommand("classify", "Sigma-classicality of one state");
    add_set_options(classify_cmd, classify_set);
    add_state_options(classify_cmd, classify_state);
    classify_cmd->add_option("--sigma", classify_sigma, "Sigma parameter")->capture_default_str();

    SetOptions scan_set;
    double scan_sigma = 1.0;
    double scan_step = 0.1;
    std::string scan_out;
    auto* scan_cmd = app.add_subcommand("scan", "Classify a Bloch-ball grid and write CSV");
    add_set_options(scan_cmd, scan_set);
    scan_cmd->add_option("--sigma", scan_sigma, "Sigma parameter")->capture_default_str();
    scan_cmd->add_option("--step", scan_step, "Grid step in (0, 0.5]")->capture_default_str();
    scan_cmd->add_option("--out", scan_out, "Output path (default standard output)");

    std::string kd_basis = "computational_hadamard";
    int kd_dim = 2;
    StateOptions kd_state;
    double kd_tol = kDensityTol;
    auto* kd_cmd = app.add_subcommand("kd", "Kirkwood-Dirac distribution for a basis pair");
    kd_cmd->add_option("--basis", kd_basis, "Basis pair")
        ->capture_default_str()
        ->check(CLI::IsMember({"computational_hadamard", "fourier"}));
    kd_cmd->add_option("--dim", kd_dim, "Dimension for the fourier pair")
        ->capture_default_str()
        ->check(CLI::Range(2, 64));
    add_state_options(kd_cmd, kd_state);
    kd_cmd->add_option("--tol", kd_tol, "State validation tolerance")->capture_default_str();

    SetOptions rec_set;
    std::string rec_p;
    double rec_sigma = 1.0;
    auto* rec_cmd = app.add_subcommand("reconstruct", "Operator from a quasiprobability vector");
    add_set_options(rec_cmd, rec_set);
    rec_cmd->add_option("--p", rec_p, "P-vector JSON file")->required();
    rec_cmd->add_option("--sigma", rec_sigma, "Sigma the vector belongs to")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        for (auto* cmd : {analyze_cmd, classify_cmd, scan_cmd, rec_cmd}) {
            if (!cmd->parsed()) continue;
            if (cmd->count("--catalog") + cmd->count("--set") != 1)
                throw CLI::ValidationError("exactly one of --catalog or --set is required");
        }
        for (auto* cmd : {classify_cmd, kd_cmd}) {
            if (!cmd->parsed()) continue;
            if (cmd->count("--bloch") + cmd->count("--state") != 1)
                throw CLI::ValidationError("exactly one of --bloch or --state is required");
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    try {
        if (catalog_cmd->parsed()) return cmd_catalog(dump, out);
        if (analyze_cmd->parsed()) return cmd_analyze(analyze_set, out);
        if (classify_cmd->parsed())
            return cmd_classify(classify_set, classify_state, classify_sigma, out);
        if (scan_cmd->parsed()) return cmd_scan(scan_set, scan_sigma, scan_step, scan_out, out);
        if (kd_cmd->parsed()) return cmd_kd(kd_basis, kd_dim, kd_state, kd_tol, out);
        if (rec_cmd->parsed()) return cmd_reconstruct(rec_set, rec_p, rec_sigma, out);
    } catch (const ParseError& e) {
        err << "qproj: " << e.what() << "\n";
        return kUsageError;
    } catch (const SchemaError& e) {
        err << "qproj: " << e.what() << "\n";
        return kUsageError;
    } catch (const InvalidArgument& e) {
        err << "qproj: " << e.what() << "\n";
        return kUsageError;
    } catch (const UnknownCatalogId& e) {
        err << "qproj: " << e.what() << "\n";
        return kUsageError;
    } catch (const Error& e) {
        err << "qproj: " << e.what() << "\n";
        return kDomainError;
    }
    return kUsageError;
}

} // namespace qproj::cli
