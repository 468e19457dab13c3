#pragma once

#include "korbit/bisequence.hpp"
#include "korbit/weights.hpp"

namespace korbit {

/// Element of H identified with its coefficient sequence in the fixed
/// bilateral basis {b_n}.
using Vector = BiSequence;

/// U^N: b_n -> (u_{n+N}/u_n) b_{n+N}, evaluated exactly on finite support for
/// any integer N (no truncation).
Vector shift_power_apply(const WeightSequence& w, Index N, const Vector& v);

/// U*^{-N}: b_n -> (conj(u_n)/conj(u_{n+N})) b_{n+N}, exact.
Vector adjoint_inverse_power_apply(const WeightSequence& w, Index N,
                                   const Vector& v);

struct PowerNorm {
  double value = 0.0;
  bool exact = false;  // false: supremum over |n| <= window, a lower bound
};

/// ||U^N|| = sup_n |u_{n+N}/u_n|. Geometric policies admit the closed form
/// rho^{|N|}; table policies report the windowed supremum as a lower bound.
PowerNorm power_norm(const WeightSequence& w, Index N, Index window);

}  // namespace korbit
