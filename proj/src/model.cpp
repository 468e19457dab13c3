#include "korbit/model.hpp"

#include <cmath>
#include <stdexcept>

#include "korbit/errors.hpp"

namespace korbit {

Vector build_f0(const MomentSequence& c, const WeightSequence& w,
                const std::optional<Vector>& antisymmetric_part) {
  if (antisymmetric_part) {
    for (const auto& [n, v] : antisymmetric_part->entries())
      if (std::conj(antisymmetric_part->value(-n)) != -v)
        throw AntisymmetryError(
            "gauge part must satisfy conj(g(-N)) == -g(N) exactly, fails at N=" +
            std::to_string(n));
  }

  const Complex u0_conj = std::conj(w.at(0));
  Vector f0;
  for (const auto& [n, cv] : c.values().entries())
    f0.add_term(n, 0.5 * (u0_conj / std::conj(w.at(n))) * std::conj(cv));
  if (antisymmetric_part) f0 = f0 + *antisymmetric_part;
  return f0;
}

ModelOrbit model_vector(const MomentSequence& c, const WeightSequence& w,
                        const std::optional<Vector>& antisymmetric_part) {
  Vector f0 = build_f0(c, w, antisymmetric_part);
  KreinVector x1{Vector::unit(0), f0};
  return ModelOrbit{c, w, std::move(f0), std::move(x1)};
}

Complex model_moment(const ModelOrbit& m, Index N) {
  return krein_form(m.x1, hat_u_power(m.w, N, m.x1));
}

BiSequence moment_residuals(const ModelOrbit& m, Index range) {
  if (range < m.c.window())
    throw std::invalid_argument("moment_residuals requires range >= window of c");
  BiSequence residuals;
  for (Index N = -range; N <= range; ++N)
    residuals.add_term(N, model_moment(m, N) - m.c.at(N));
  return residuals;
}

double f0_symmetry_residual(const Vector& f0) {
  double worst = 0.0;
  for (const auto& [n, v] : f0.entries())
    worst = std::max(worst, std::abs(std::conj(f0.value(-n)) - v));
  return worst;
}

}  // namespace korbit
