#include "korbit/krein.hpp"

#include <stdexcept>

namespace korbit {

Complex krein_form(const KreinVector& a, const KreinVector& b) {
  return hilbert_inner(a.top, b.bottom) + hilbert_inner(a.bottom, b.top);
}

KreinVector hat_u_power(const WeightSequence& w, Index N, const KreinVector& v) {
  return {shift_power_apply(w, N, v.top),
          adjoint_inverse_power_apply(w, N, v.bottom)};
}

KreinVector symmetric_form_transform(const KreinVector& v, int sign) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("symmetric_form_transform expects sign +1 or -1");
  return {v.top, Complex(0.0, double(sign)) * v.bottom};
}

Complex symmetric_form(const KreinVector& a, const KreinVector& b) {
  return krein_form(symmetric_form_transform(a, +1),
                    symmetric_form_transform(b, +1));
}

}  // namespace korbit
