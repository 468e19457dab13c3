#include "korbit/shift.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace korbit {

Vector shift_power_apply(const WeightSequence& w, Index N, const Vector& v) {
  Vector out;
  for (const auto& [n, val] : v.entries())
    out.add_term(n + N, w.ratio(n + N, n) * val);
  return out;
}

Vector adjoint_inverse_power_apply(const WeightSequence& w, Index N,
                                   const Vector& v) {
  Vector out;
  for (const auto& [n, val] : v.entries())
    out.add_term(n + N, std::conj(w.ratio(n, n + N)) * val);
  return out;
}

PowerNorm power_norm(const WeightSequence& w, Index N, Index window) {
  if (window < iabs(N))
    throw std::invalid_argument("power_norm requires window >= |N|");
  if (N == 0) return {1.0, true};
  if (w.is_geometric()) return {ipow(w.rho(), iabs(N)), true};
  double sup = 0.0;
  for (Index n = -window; n <= window; ++n)
    sup = std::max(sup, std::abs(w.ratio(n + N, n)));
  return {sup, false};
}

}  // namespace korbit
