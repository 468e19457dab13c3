#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace korbit {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input files or JSON payloads (includes rejected negative indices).
struct ParseError : Error {
  using Error::Error;
};

struct DuplicateIndexError : Error {
  explicit DuplicateIndexError(std::int64_t n)
      : Error("duplicate moment index n=" + std::to_string(n)), index(n) {}
  std::int64_t index;
};

struct NonRealC0Error : Error {
  explicit NonRealC0Error(double imag_part)
      : Error("moment c(0) must be real, got imaginary part " +
              std::to_string(imag_part)),
        imag(imag_part) {}
  double imag;
};

// Hermitian symmetry c(-N) = conj(c(N)) violated; carries the worst index.
struct SymmetryViolationError : Error {
  SymmetryViolationError(std::int64_t n, double deviation)
      : Error("moment symmetry violated at N=" + std::to_string(n) +
              " (deviation " + std::to_string(deviation) + ")"),
        index(n),
        dev(deviation) {}
  std::int64_t index;
  double dev;
};

// Weight table fails nonvanishing or conjugate-symmetry requirements.
struct WeightPolicyError : Error {
  using Error::Error;
};

// Model lineal construction requires conj(f0(-N)) == f0(N) exactly.
struct SymmetryHypothesisError : Error {
  using Error::Error;
};

// Optional gauge part of f0 must satisfy conj(g(-N)) == -g(N) exactly.
struct AntisymmetryError : Error {
  using Error::Error;
};

}  // namespace korbit
