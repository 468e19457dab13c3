#include "korbit/bisequence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace korbit {

Index BiSequence::window() const {
  if (entries_.empty()) return 0;
  const Index lo = entries_.begin()->first;
  const Index hi = entries_.rbegin()->first;
  return std::max(iabs(lo), iabs(hi));
}

double BiSequence::max_abs() const {
  double m = 0.0;
  for (const auto& [n, v] : entries_) m = std::max(m, std::abs(v));
  return m;
}

double BiSequence::l1_norm() const {
  double s = 0.0;
  for (const auto& [n, v] : entries_) s += std::abs(v);
  return s;
}

double BiSequence::l2_norm() const {
  double s = 0.0;
  for (const auto& [n, v] : entries_) s += std::norm(v);
  return std::sqrt(s);
}

BiSequence BiSequence::shifted(Index by) const {
  BiSequence out;
  for (const auto& [n, v] : entries_) out.entries_.emplace(n + by, v);
  return out;
}

BiSequence BiSequence::conjugated() const {
  BiSequence out;
  for (const auto& [n, v] : entries_) out.entries_.emplace(n, std::conj(v));
  return out;
}

BiSequence& BiSequence::add_term(Index n, Complex v) {
  if (v == Complex(0.0, 0.0)) return *this;
  auto [it, inserted] = entries_.emplace(n, v);
  if (!inserted) {
    it->second += v;
    if (it->second == Complex(0.0, 0.0)) entries_.erase(it);
  }
  return *this;
}

BiSequence BiSequence::operator-() const {
  BiSequence out;
  for (const auto& [n, v] : entries_) out.entries_.emplace(n, -v);
  return out;
}

BiSequence operator+(const BiSequence& a, const BiSequence& b) {
  BiSequence out = a;
  for (const auto& [n, v] : b.entries_) out.add_term(n, v);
  return out;
}

BiSequence operator-(const BiSequence& a, const BiSequence& b) {
  BiSequence out = a;
  for (const auto& [n, v] : b.entries_) out.add_term(n, -v);
  return out;
}

BiSequence operator*(Complex scalar, const BiSequence& a) {
  BiSequence out;
  for (const auto& [n, v] : a.entries_) out.add_term(n, scalar * v);
  return out;
}

void axpy(BiSequence& a, Complex scalar, const BiSequence& b) {
  for (const auto& [n, v] : b.entries()) a.add_term(n, scalar * v);
}

Complex hilbert_inner(const BiSequence& f, const BiSequence& g) {
  // Iterate the smaller support, look up in the other.
  const BiSequence& small = f.support_size() <= g.support_size() ? f : g;
  const BiSequence& large = f.support_size() <= g.support_size() ? g : f;
  Complex sum(0.0, 0.0);
  for (const auto& [n, v] : small.entries()) {
    const Complex other = large.value(n);
    if (other == Complex(0.0, 0.0)) continue;
    const Complex fv = (&small == &f) ? v : other;
    const Complex gv = (&small == &f) ? other : v;
    sum += std::conj(fv) * gv;
  }
  return sum;
}

}  // namespace korbit
