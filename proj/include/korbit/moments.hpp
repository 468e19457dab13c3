#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "korbit/bisequence.hpp"

namespace korbit {

/// Per-step exponential growth certificate: |c(N)| <= M_hat * e^{a_hat |N|}
/// holds for every stored index.
struct GrowthEstimate {
  double a_hat = 0.0;
  double M_hat = 1.0;
};

/// Hermitian-symmetric bilateral moment sequence: c(-N) = conj(c(N)) and c(0)
/// real. Values outside the stored window are treated as exactly zero.
class MomentSequence {
 public:
  MomentSequence() = default;

  /// Stores entries as given; symmetry is checked later by validate_moments.
  static MomentSequence from_entries(BiSequence values) {
    MomentSequence c;
    c.values_ = std::move(values);
    return c;
  }

  Complex at(Index n) const { return values_.value(n); }
  const BiSequence& values() const { return values_; }
  Index window() const { return values_.window(); }
  double max_abs() const { return values_.max_abs(); }
  const std::optional<GrowthEstimate>& growth() const { return growth_; }

  /// Copy with growth metadata attached; throws std::invalid_argument if the
  /// bound fails on any stored index.
  MomentSequence with_growth(GrowthEstimate est) const;

  bool operator==(const MomentSequence&) const = default;

 private:
  BiSequence values_;
  std::optional<GrowthEstimate> growth_;
};

/// Builds a full bilateral sequence from data at indices N >= 0, reflecting
/// c(-N) := conj(c(N)). c(0) is forced exactly real when its imaginary part
/// is within 1e-12 * max(1, |c(0)|), otherwise NonRealC0Error. Duplicate or
/// negative indices are rejected.
MomentSequence hermitian_extend(
    const std::vector<std::pair<Index, Complex>>& half);

/// Checks Hermitian symmetry over the support (SymmetryViolationError reports
/// the worst offending index) and returns the least nonnegative slope with
/// M_hat = max(1, |c(0)|) such that the growth bound holds exactly on every
/// stored index.
GrowthEstimate validate_moments(const MomentSequence& c);

/// Parses {"moments": [{"n": int >= 0, "re": number, "im": number}, ...]}.
/// Negative indices are rejected: symmetry is enforced, never trusted.
MomentSequence parse_moments_json(const std::string& text);

/// Reads the file and delegates to parse_moments_json.
MomentSequence load_moments_file(const std::string& path);

}  // namespace korbit
