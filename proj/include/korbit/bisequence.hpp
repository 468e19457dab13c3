#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <utility>

namespace korbit {

using Complex = std::complex<double>;
using Index = std::int64_t;

constexpr Index iabs(Index n) { return n < 0 ? -n : n; }

/// Finitely supported map Z -> C, the coefficient container used throughout:
/// vectors expanded in the bilateral basis, moment sequences, and orbit-space
/// coefficients. Entries that are exactly zero are never stored, so two equal
/// sequences have identical sparse representations and compare bit-exactly.
class BiSequence {
 public:
  using Entries = std::map<Index, Complex>;

  BiSequence() = default;
  BiSequence(std::initializer_list<std::pair<Index, Complex>> init) {
    for (const auto& [n, v] : init) add_term(n, v);
  }

  /// value * delta_n
  static BiSequence unit(Index n, Complex value = Complex(1.0, 0.0)) {
    BiSequence s;
    s.add_term(n, value);
    return s;
  }

  /// Zero outside the support.
  Complex value(Index n) const {
    auto it = entries_.find(n);
    return it == entries_.end() ? Complex(0.0, 0.0) : it->second;
  }

  const Entries& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }

  /// max |n| over the support, 0 for the zero sequence.
  Index window() const;

  double max_abs() const;
  double l1_norm() const;
  double l2_norm() const;

  /// n -> n + by on the support.
  BiSequence shifted(Index by) const;
  BiSequence conjugated() const;

  /// Accumulates v at index n; entries cancelling to exact zero are dropped.
  BiSequence& add_term(Index n, Complex v);

  BiSequence operator-() const;
  friend BiSequence operator+(const BiSequence& a, const BiSequence& b);
  friend BiSequence operator-(const BiSequence& a, const BiSequence& b);
  friend BiSequence operator*(Complex scalar, const BiSequence& a);

  bool operator==(const BiSequence&) const = default;

 private:
  Entries entries_;
};

/// a += scalar * b
void axpy(BiSequence& a, Complex scalar, const BiSequence& b);

/// Canonical pairing <f, g> = sum_n conj(f(n)) g(n); linear in the SECOND
/// argument, conjugate-linear in the first. This convention is fixed project
/// wide and every sesquilinear form below inherits it.
Complex hilbert_inner(const BiSequence& f, const BiSequence& g);

}  // namespace korbit
