#include <doctest.h>

#include <cmath>

#include "korbit/doubling.hpp"
#include "korbit/random.hpp"

using namespace korbit;

namespace {

const Complex I(0.0, 1.0);

MomentSequence delta0(double value = 1.0) {
  return hermitian_extend({{0, Complex(value, 0.0)}});
}

MomentSequence ones(Index window) {
  std::vector<std::pair<Index, Complex>> half;
  for (Index n = 0; n <= window; ++n) half.emplace_back(n, Complex(1.0, 0.0));
  return hermitian_extend(half);
}

DoubledOrbitVector doubled_unit(Index N, Index M) {
  return {OrbitVector::unit(N), OrbitVector::unit(M)};
}

}  // namespace

TEST_CASE("embedding of coordinate vectors") {
  const ModelOrbit m = model_vector(delta0(), WeightSequence::geometric(2.0));

  SUBCASE("matched pair cancels the bottom") {
    const KreinVector v = omega_apply(doubled_unit(0, 0), m);
    CHECK(v.top == Vector::unit(0, Complex(2.0, 0.0)));
    CHECK(v.bottom.is_zero());
  }
  SUBCASE("opposed pair cancels the top") {
    const KreinVector v =
        omega_apply({OrbitVector::unit(0), OrbitVector::unit(0, Complex(-1.0, 0.0))}, m);
    CHECK(v.top.is_zero());
    CHECK(v.bottom == 2.0 * m.f0);
  }
  SUBCASE("zero maps to zero") {
    const KreinVector v = omega_apply(DoubledOrbitVector{}, m);
    CHECK(v.top.is_zero());
    CHECK(v.bottom.is_zero());
  }
}

TEST_CASE("difference form on coordinates") {
  const MomentSequence c = delta0();
  CHECK(minus_form_eval(doubled_unit(0, 0), doubled_unit(0, 0), c) ==
        Complex(0.0, 0.0));
  const DoubledOrbitVector first_only{OrbitVector::unit(0), OrbitVector()};
  CHECK(minus_form_eval(first_only, first_only, c) == Complex(1.0, 0.0));
  const DoubledOrbitVector shifted{OrbitVector::unit(3), OrbitVector()};
  CHECK(minus_form_eval(first_only, shifted, c) == c.at(3));
}

TEST_CASE("difference form is sesquilinear in the house convention") {
  SparseSampler sampler(101);
  for (int trial = 0; trial < 25; ++trial) {
    const MomentSequence c = sampler.admissible_moments(8, 2.0);
    const DoubledOrbitVector a{sampler.sparse_sequence(), sampler.sparse_sequence()};
    const DoubledOrbitVector b{sampler.sparse_sequence(), sampler.sparse_sequence()};
    const DoubledOrbitVector d{sampler.sparse_sequence(), sampler.sparse_sequence()};
    const Complex alpha = sampler.unit_disk();

    const DoubledOrbitVector combo{alpha * b.first + d.first,
                                   alpha * b.second + d.second};
    const Complex lhs = minus_form_eval(a, combo, c);
    const Complex rhs = alpha * minus_form_eval(a, b, c) + minus_form_eval(a, d, c);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));

    CHECK(std::abs(minus_form_eval(a, b, c) -
                   std::conj(minus_form_eval(b, a, c))) <=
          1e-12 * (1.0 + std::abs(lhs)));
  }
}

TEST_CASE("embedding carries the difference form to the Krein form") {
  SUBCASE("worked coordinate values") {
    const MomentSequence c = delta0();
    const ModelOrbit m = model_vector(c, WeightSequence::geometric(2.0));

    const DoubledOrbitVector diag = doubled_unit(0, 0);
    CHECK(krein_form(omega_apply(diag, m), omega_apply(diag, m)) ==
          Complex(0.0, 0.0));
    CHECK(minus_form_eval(diag, diag, c) == Complex(0.0, 0.0));

    const DoubledOrbitVector first_only{OrbitVector::unit(0), OrbitVector()};
    CHECK(krein_form(omega_apply(first_only, m), omega_apply(first_only, m)) ==
          c.at(0));

    const DoubledOrbitVector second_only{OrbitVector(), OrbitVector::unit(0)};
    CHECK(krein_form(omega_apply(second_only, m), omega_apply(second_only, m)) ==
          -c.at(0));
    CHECK(minus_form_eval(second_only, second_only, c) == -c.at(0));
  }
  SUBCASE("random instances") {
    SparseSampler sampler(103);
    for (int trial = 0; trial < 20; ++trial) {
      const MomentSequence c = sampler.admissible_moments(12, 4.0);
      const ModelOrbit m = model_vector(c, make_weights(c, 1.0));
      const IsometryCheck check =
          omega_isometry_residual(m, 100, 1000 + std::uint64_t(trial));
      CHECK(check.residual <= 1e-10);
      CHECK(check.trials == 100);
    }
  }
}

TEST_CASE("embedding intertwines the doubled orbit shift") {
  SparseSampler sampler(107);
  for (int trial = 0; trial < 15; ++trial) {
    const MomentSequence c = sampler.admissible_moments(10, 3.0);
    const ModelOrbit m = model_vector(c, make_weights(c, 1.0));
    const IntertwiningCheck check =
        intertwining_check(m, 50, 2000 + std::uint64_t(trial));
    CHECK(check.structure_exact);
    CHECK(check.value_residual <= 1e-13);
  }
}

TEST_CASE("injectivity defect") {
  SUBCASE("identity form: full column rank") {
    const MomentSequence c = delta0();
    const ModelOrbit m = model_vector(c, make_weights(c, 1.0));
    const double defect = injectivity_defect(m, 2);
    CHECK(defect == doctest::Approx(std::sqrt(0.4)).epsilon(1e-12));
    CHECK(defect > 0.05);
  }
  SUBCASE("flat form: rank deficiency at the matched window") {
    const MomentSequence c = ones(4);
    const ModelOrbit m = model_vector(c, make_weights(c, 1.0));
    CHECK(injectivity_defect(m, 2) <= 1e-10);
  }
  SUBCASE("K = 0 separates the two seeds iff f0 is nonzero") {
    const ModelOrbit with_f0 =
        model_vector(delta0(), WeightSequence::geometric(2.0));
    CHECK(injectivity_defect(with_f0, 0) > 0.0);

    const ModelOrbit without_f0 =
        model_vector(MomentSequence(), WeightSequence::geometric(2.0));
    CHECK(injectivity_defect(without_f0, 0) == doctest::Approx(0.0));
  }
}
