#pragma once

#include <cstdint>

#include "korbit/subspaces.hpp"

namespace korbit {

/// x (+) y with both components in the abstract orbit space.
struct DoubledOrbitVector {
  OrbitVector first;
  OrbitVector second;
  bool operator==(const DoubledOrbitVector&) const = default;
};

/// The embedding of the doubled orbit space into the model space:
///   Omega(delta_N (+) delta_M) = hat(U)^N (b_0 (+) f_0) + hat(U)^M (b_0 (+) -f_0),
/// extended linearly. Exact on finite supports.
KreinVector omega_apply(const DoubledOrbitVector& d, const ModelOrbit& m);

/// The difference form {x (+) y, x1 (+) y1}_- = {x, x1}_0 - {y, y1}_0 on the
/// doubled orbit space, built from the Toeplitz form of c.
Complex minus_form_eval(const DoubledOrbitVector& a, const DoubledOrbitVector& b,
                        const MomentSequence& c);

struct IsometryCheck {
  /// max over pairs of |krein_form(Omega a, Omega b) - minus_form(a, b)|
  /// divided by the pair scale (1 + max|c|) * max(1, l1(a) * l1(b)).
  double residual = 0.0;
  int trials = 0;
};

/// Omega carries the difference form to the Krein form; the identity is
/// algebraically exact, so the residual over random sparse pairs is pure
/// rounding.
IsometryCheck omega_isometry_residual(const ModelOrbit& m, int trials,
                                      std::uint64_t seed);

/// Smallest singular value, after column normalization, of Omega restricted
/// to the doubled coefficient basis {delta_N (+) 0, 0 (+) delta_M : |N|, |M|
/// <= K}, expressed in the weight-rescaled doubled shift basis truncated at
/// |n| <= K. Zero exhibits failure of injectivity at this window.
double injectivity_defect(const ModelOrbit& m, Index K);

struct IntertwiningCheck {
  bool structure_exact = false;  // identical supports, both components
  double value_residual = 0.0;   // max entry deviation / max(1, max entry)
  int trials = 0;
};

/// Omega((U_0 (+) U_0) d) = hat(U) Omega(d): simultaneous orbit_shift by one
/// on both components versus hat_u_power after embedding. Index bookkeeping
/// must match exactly; values agree to rounding.
IntertwiningCheck intertwining_check(const ModelOrbit& m, int trials,
                                     std::uint64_t seed);

}  // namespace korbit
