#include "qproj/io.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace qproj {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

json parse_json(std::string_view text) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(e.byte, e.what());
    }
}

double number_at(const json& j, const std::string& path) {
    if (!j.is_number()) throw SchemaError(path, "expected a number");
    return j.get<double>();
}

Complex complex_at(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) throw SchemaError(path, "expected a [re, im] pair");
    return {number_at(j[0], path + "/0"), number_at(j[1], path + "/1")};
}

// dim < 0 accepts any square size.
ComplexMatrix matrix_at(const json& j, const std::string& path, long dim) {
    if (!j.is_array() || j.empty()) throw SchemaError(path, "expected a non-empty array of rows");
    const auto rows = static_cast<long>(j.size());
    if (dim >= 0 && rows != dim)
        throw SchemaError(path, "expected " + std::to_string(dim) + " rows, found " + std::to_string(rows));
    ComplexMatrix m(rows, rows);
    for (long r = 0; r < rows; ++r) {
        const std::string row_path = path + "/" + std::to_string(r);
        const json& row = j[static_cast<std::size_t>(r)];
        if (!row.is_array()) throw SchemaError(row_path, "expected a row array");
        if (static_cast<long>(row.size()) != rows)
            throw SchemaError(row_path, "matrix is not square (" + std::to_string(row.size()) +
                                            " columns, " + std::to_string(rows) + " rows)");
        for (long c = 0; c < rows; ++c)
            m(r, c) = complex_at(row[static_cast<std::size_t>(c)], row_path + "/" + std::to_string(c));
    }
    return m;
}

json pair(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_json(const ComplexMatrix& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(pair(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

MeasurementSet parse_measurement_set(std::string_view text, double rank_tol) {
    const json doc = parse_json(text);
    if (!doc.is_object()) throw SchemaError("", "expected an object");

    if (!doc.contains("dim")) throw SchemaError("/dim", "missing field");
    const json& dim_j = doc["dim"];
    if (!dim_j.is_number_integer() || dim_j.get<long>() < 1)
        throw SchemaError("/dim", "expected a positive integer");
    const long dim = dim_j.get<long>();

    if (!doc.contains("operators")) throw SchemaError("/operators", "missing field");
    const json& ops_j = doc["operators"];
    if (!ops_j.is_array() || ops_j.empty())
        throw SchemaError("/operators", "expected a non-empty array of matrices");

    std::vector<ComplexMatrix> ops;
    for (std::size_t k = 0; k < ops_j.size(); ++k)
        ops.push_back(matrix_at(ops_j[k], "/operators/" + std::to_string(k), dim));

    std::vector<std::string> labels;
    if (doc.contains("labels")) {
        const json& labels_j = doc["labels"];
        if (!labels_j.is_array() || labels_j.size() != ops.size())
            throw SchemaError("/labels", "expected one string per operator");
        for (std::size_t k = 0; k < labels_j.size(); ++k) {
            if (!labels_j[k].is_string())
                throw SchemaError("/labels/" + std::to_string(k), "expected a string");
            labels.push_back(labels_j[k].get<std::string>());
        }
    }
    return MeasurementSet(std::move(ops), std::move(labels), rank_tol);
}

std::string serialize_measurement_set(const MeasurementSet& set) {
    ordered_json doc;
    doc["dim"] = set.dim();
    json ops = json::array();
    for (const auto& op : set.operators()) ops.push_back(matrix_json(op));
    doc["operators"] = std::move(ops);
    doc["labels"] = set.labels();
    return doc.dump() + "\n";
}

ComplexMatrix parse_state_matrix(std::string_view text) { return matrix_at(parse_json(text), "", -1); }

ComplexVector parse_p_vector(std::string_view text) {
    const json doc = parse_json(text);
    if (!doc.is_array() || doc.empty()) throw SchemaError("", "expected a non-empty array of [re, im] pairs");
    ComplexVector v(static_cast<Eigen::Index>(doc.size()));
    for (std::size_t k = 0; k < doc.size(); ++k)
        v(static_cast<Eigen::Index>(k)) = complex_at(doc[k], "/" + std::to_string(k));
    return v;
}

std::string serialize_matrix(const ComplexMatrix& m) { return matrix_json(m).dump() + "\n"; }

std::string serialize_vector(const ComplexVector& v) {
    json arr = json::array();
    for (Eigen::Index k = 0; k < v.size(); ++k) arr.push_back(pair(v(k)));
    return arr.dump() + "\n";
}

std::string format_real(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    if (std::abs(x) < 5e-15) return "0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_complex(Complex z) {
    const std::string im = format_real(std::abs(z.imag()));
    const bool negative = z.imag() < 0.0 && im != "0";
    return format_real(z.real()) + (negative ? "-" : "+") + im + "i";
}

double round_real(double x) {
    if (!std::isfinite(x)) return x;
    return std::stod(format_real(x));
}

} // namespace qproj
