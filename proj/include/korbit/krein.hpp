#pragma once

#include "korbit/shift.hpp"

namespace korbit {

/// x (+) y in the doubled space H (+) H.
struct KreinVector {
  Vector top;
  Vector bottom;
  bool operator==(const KreinVector&) const = default;
};

/// The indefinite inner product {x(+)y, x1(+)y1} = (x, y1) + (y, x1).
/// Sesquilinear, linear in the second argument, Hermitian, and indefinite:
/// b_n (+) 0 is neutral for every n.
Complex krein_form(const KreinVector& a, const KreinVector& b);

/// The doubled operator power: (U (+) U*^{-1})^N applied componentwise.
/// Preserves krein_form for every N; the identity is algebraically exact.
KreinVector hat_u_power(const WeightSequence& w, Index N, const KreinVector& v);

/// (top, sign * i * bottom), sign in {-1, +1}. Complex scalars only; for
/// real-valued data this leaves the real field and has no analogue.
KreinVector symmetric_form_transform(const KreinVector& v, int sign);

/// The equivalent symmetric variant of the form, realized by applying the
/// (+1)-transform to both arguments:
///   {a, b}_s = i * (<a.top, b.bottom> - <a.bottom, b.top>).
/// The diagonal scaling commutes with hat_u_power, so the doubled operator
/// preserves this form as well.
Complex symmetric_form(const KreinVector& a, const KreinVector& b);

}  // namespace korbit
