// errors.hpp
// Exception hierarchy shared by every qproj module.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qproj {

// Base class for all domain errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class NonHermitianInput : public Error {
public:
    explicit NonHermitianInput(double defect)
        : Error("matrix is not Hermitian (max |M - M^dag| = " + std::to_string(defect) + ")"),
          defect_(defect) {}
    double defect() const { return defect_; }

private:
    double defect_;
};

class NoConvergence : public Error {
public:
    explicit NoConvergence(int sweeps)
        : Error("Jacobi eigensolver did not converge after " + std::to_string(sweeps) + " sweeps") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class WrongDimension : public Error {
public:
    using Error::Error;
};

class OutsideBall : public Error {
public:
    explicit OutsideBall(double norm)
        : Error("Bloch vector lies outside the unit ball (|v| = " + std::to_string(norm) + ")"),
          norm_(norm) {}
    double norm() const { return norm_; }

private:
    double norm_;
};

// One failed density-operator condition together with the measured deviation.
struct DensityViolation {
    enum class Kind { NotHermitian, TraceNotOne, NotPSD };
    Kind kind;
    double deviation;
};

std::string to_string(DensityViolation::Kind kind);

class InvalidDensity : public Error {
public:
    explicit InvalidDensity(std::vector<DensityViolation> violations);
    const std::vector<DensityViolation>& violations() const { return violations_; }
    bool has(DensityViolation::Kind kind) const;

private:
    std::vector<DensityViolation> violations_;
};

class UnknownCatalogId : public Error {
public:
    explicit UnknownCatalogId(const std::string& name)
        : Error("unknown catalog id '" + name + "' (expected tetrahedron, trine, octahedron or square)") {}
};

class NotOrthonormal : public Error {
public:
    using Error::Error;
};

class VanishingOverlap : public Error {
public:
    VanishingOverlap(std::size_t k, std::size_t l)
        : Error("overlap <b_" + std::to_string(l) + "|a_" + std::to_string(k) + "> vanishes"),
          k_(k), l_(l) {}
    std::size_t k() const { return k_; }
    std::size_t l() const { return l_; }

private:
    std::size_t k_;
    std::size_t l_;
};

class DegenerateBasis : public Error {
public:
    using Error::Error;
};

class InvalidMeasurementSet : public Error {
public:
    using Error::Error;
};

// Malformed input text; position is a byte offset into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& message)
        : Error("parse error at byte " + std::to_string(position) + ": " + message),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

// Well-formed JSON that does not follow the expected schema; path is a JSON pointer.
class SchemaError : public Error {
public:
    SchemaError(std::string path, const std::string& message)
        : Error("schema error at " + (path.empty() ? std::string("/") : path) + ": " + message),
          path_(std::move(path)) {}
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

} // namespace qproj
