// io.hpp
// JSON file formats and number formatting used by the command-line tool.
//
// MeasurementSetFile:
//   {"dim": d, "operators": [M_0, M_1, ...], "labels": ["...", ...]}
// where every matrix is an array of d rows, each an array of d [re, im]
// pairs. "labels" is optional. State files hold a single such matrix and
// P-vector files an array of [re, im] pairs.

#pragma once

#include <string>
#include <string_view>

#include "qproj/measurement_frame.hpp"

namespace qproj {

// Throws ParseError (byte offset) for malformed JSON and SchemaError (JSON
// pointer to the offending field) for structural problems.
MeasurementSet parse_measurement_set(std::string_view text, double rank_tol = kDefaultRankTol);

// Full-precision output; parse_measurement_set(serialize(s)) reproduces every
// entry bit for bit.
std::string serialize_measurement_set(const MeasurementSet& set);

ComplexMatrix parse_state_matrix(std::string_view text);
ComplexVector parse_p_vector(std::string_view text);

std::string serialize_matrix(const ComplexMatrix& m);
std::string serialize_vector(const ComplexVector& v);

// 12 significant digits; magnitudes below 5e-15 print as 0.
std::string format_real(double x);
// "re+imi" / "re-imi".
std::string format_complex(Complex z);

// Value format_real prints, as a double.
double round_real(double x);

} // namespace qproj
