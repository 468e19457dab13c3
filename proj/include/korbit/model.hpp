#pragma once

#include <optional>

#include "korbit/krein.hpp"
#include "korbit/moments.hpp"

namespace korbit {

/// The moment-matching model: x1 = b_0 (+) f0 with
///   f0(N) = (1/2) (conj(u_0)/conj(u_N)) conj(c(N))
/// on the support of c. The Krein moments {x1, hat(U)^N x1} then reproduce
/// c(N) on the stored window and vanish exactly beyond it.
struct ModelOrbit {
  MomentSequence c;
  WeightSequence w;
  Vector f0;
  KreinVector x1;
};

/// Builds f0 from the closed-form coefficients. The construction guarantees
/// conj(f0(-N)) == f0(N) bit-exactly. An optional gauge part may be added; it
/// must satisfy conj(g(-N)) == -g(N) exactly, otherwise AntisymmetryError.
Vector build_f0(const MomentSequence& c, const WeightSequence& w,
                const std::optional<Vector>& antisymmetric_part = {});

ModelOrbit model_vector(const MomentSequence& c, const WeightSequence& w,
                        const std::optional<Vector>& antisymmetric_part = {});

/// krein_form(x1, hat(U)^N x1), the model's N-th indefinite moment.
Complex model_moment(const ModelOrbit& m, Index N);

/// N -> model_moment(N) - c(N) for |N| <= range (range >= window of c).
/// Vanishes to rounding on the window and exactly beyond it.
BiSequence moment_residuals(const ModelOrbit& m, Index range);

/// max over the support of |conj(f0(-N)) - f0(N)|; zero for any f0 built by
/// build_f0 without a gauge part.
double f0_symmetry_residual(const Vector& f0);

}  // namespace korbit
