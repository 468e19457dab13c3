#include "korbit/doubling.hpp"

#include <algorithm>
#include <cmath>

#include "korbit/random.hpp"

namespace korbit {

KreinVector omega_apply(const DoubledOrbitVector& d, const ModelOrbit& m) {
  const Vector b0 = Vector::unit(0);
  const KreinVector plus_seed{b0, m.f0};
  const KreinVector minus_seed{b0, -m.f0};
  KreinVector out;
  for (const auto& [N, v] : d.first.entries()) {
    const KreinVector g = hat_u_power(m.w, N, plus_seed);
    axpy(out.top, v, g.top);
    axpy(out.bottom, v, g.bottom);
  }
  for (const auto& [M, v] : d.second.entries()) {
    const KreinVector g = hat_u_power(m.w, M, minus_seed);
    axpy(out.top, v, g.top);
    axpy(out.bottom, v, g.bottom);
  }
  return out;
}

Complex minus_form_eval(const DoubledOrbitVector& a, const DoubledOrbitVector& b,
                        const MomentSequence& c) {
  return orbit_form(a.first, b.first, c) - orbit_form(a.second, b.second, c);
}

IsometryCheck omega_isometry_residual(const ModelOrbit& m, int trials,
                                      std::uint64_t seed) {
  SparseSampler sampler(seed);
  IsometryCheck check;
  check.trials = trials;
  const double c_scale = 1.0 + m.c.max_abs();
  for (int t = 0; t < trials; ++t) {
    const DoubledOrbitVector a{sampler.sparse_sequence(), sampler.sparse_sequence()};
    const DoubledOrbitVector b{sampler.sparse_sequence(), sampler.sparse_sequence()};
    const Complex lhs = krein_form(omega_apply(a, m), omega_apply(b, m));
    const Complex rhs = minus_form_eval(a, b, m.c);
    const double a_l1 = a.first.l1_norm() + a.second.l1_norm();
    const double b_l1 = b.first.l1_norm() + b.second.l1_norm();
    const double scale = c_scale * std::max(1.0, a_l1 * b_l1);
    check.residual = std::max(check.residual, std::abs(lhs - rhs) / scale);
  }
  return check;
}

double injectivity_defect(const ModelOrbit& m, Index K) {
  // Same matrix as the totality diagnostic at matched truncation: the columns
  // are Omega of the doubled coordinate basis.
  return totality_defect(m, K, K);
}

namespace {

bool same_support(const BiSequence& a, const BiSequence& b) {
  if (a.support_size() != b.support_size()) return false;
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  for (; ia != a.entries().end(); ++ia, ++ib)
    if (ia->first != ib->first) return false;
  return true;
}

double entry_deviation(const BiSequence& a, const BiSequence& b) {
  double dev = 0.0;
  for (const auto& [n, v] : a.entries())
    dev = std::max(dev, std::abs(v - b.value(n)));
  for (const auto& [n, v] : b.entries())
    dev = std::max(dev, std::abs(v - a.value(n)));
  return dev;
}

}  // namespace

IntertwiningCheck intertwining_check(const ModelOrbit& m, int trials,
                                     std::uint64_t seed) {
  SparseSampler sampler(seed);
  IntertwiningCheck check;
  check.trials = trials;
  check.structure_exact = true;
  for (int t = 0; t < trials; ++t) {
    const DoubledOrbitVector d{sampler.sparse_sequence(), sampler.sparse_sequence()};
    const DoubledOrbitVector shifted{orbit_shift(d.first, 1),
                                     orbit_shift(d.second, 1)};
    const KreinVector lhs = omega_apply(shifted, m);
    const KreinVector rhs = hat_u_power(m.w, 1, omega_apply(d, m));
    if (!same_support(lhs.top, rhs.top) || !same_support(lhs.bottom, rhs.bottom))
      check.structure_exact = false;
    const double dev =
        std::max(entry_deviation(lhs.top, rhs.top),
                 entry_deviation(lhs.bottom, rhs.bottom));
    const double scale = std::max(
        {1.0, lhs.top.max_abs(), lhs.bottom.max_abs(), rhs.top.max_abs(),
         rhs.bottom.max_abs()});
    check.value_residual = std::max(check.value_residual, dev / scale);
  }
  return check;
}

}  // namespace korbit
