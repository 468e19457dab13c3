#include <doctest.h>

#include <cmath>

#include "korbit/krein.hpp"
#include "korbit/random.hpp"

using namespace korbit;

namespace {

const Complex I(0.0, 1.0);

KreinVector diag(Index n, Complex top = Complex(1.0, 0.0),
                 Complex bottom = Complex(1.0, 0.0)) {
  return {Vector::unit(n, top), Vector::unit(n, bottom)};
}

double krein_scale(const KreinVector& v, const KreinVector& x) {
  const double nv = std::hypot(v.top.l2_norm(), v.bottom.l2_norm());
  const double nx = std::hypot(x.top.l2_norm(), x.bottom.l2_norm());
  return std::max(1.0, nv * nx);
}

}  // namespace

TEST_CASE("form values on the canonical seeds") {
  const KreinVector plus = diag(0);
  const KreinVector minus = diag(0, Complex(1.0, 0.0), Complex(-1.0, 0.0));
  CHECK(krein_form(plus, plus) == Complex(2.0, 0.0));
  CHECK(krein_form(minus, minus) == Complex(-2.0, 0.0));

  const KreinVector top_only_a{Vector::unit(0), Vector()};
  const KreinVector top_only_b{Vector::unit(1), Vector()};
  CHECK(krein_form(top_only_a, top_only_b) == Complex(0.0, 0.0));
}

TEST_CASE("the diagonal of the top slot is neutral") {
  for (Index n = -6; n <= 6; ++n) {
    const KreinVector v{Vector::unit(n), Vector()};
    CHECK(krein_form(v, v) == Complex(0.0, 0.0));
  }
}

TEST_CASE("doubled powers act componentwise") {
  const WeightSequence w = WeightSequence::geometric(2.0);
  const KreinVector v = diag(0);
  CHECK(hat_u_power(w, 1, v) ==
        diag(1, Complex(2.0, 0.0), Complex(0.5, 0.0)));
  CHECK(hat_u_power(w, -1, v) ==
        diag(-1, Complex(2.0, 0.0), Complex(0.5, 0.0)));

  SparseSampler sampler(41);
  const KreinVector r = sampler.sparse_krein();
  CHECK(hat_u_power(w, 0, r) == r);
}

TEST_CASE("the doubled operator preserves the form") {
  SparseSampler sampler(43);
  for (int trial = 0; trial < 30; ++trial) {
    const WeightSequence w =
        trial == 0 ? WeightSequence::geometric(2.0)
                   : WeightSequence::geometric(sampler.uniform(1.1, 8.0));
    const KreinVector v = sampler.sparse_krein();
    const KreinVector x = sampler.sparse_krein();
    const Complex base = krein_form(v, x);
    for (Index N = -16; N <= 16; ++N) {
      const Complex moved =
          krein_form(hat_u_power(w, N, v), hat_u_power(w, N, x));
      const double rel =
          std::abs(moved - base) /
          std::max({1.0, std::abs(base), krein_scale(v, x)});
      CHECK(rel <= 1e-12);
    }
  }
}

TEST_CASE("Hermitian symmetry of the form") {
  SparseSampler sampler(47);
  for (int trial = 0; trial < 30; ++trial) {
    const KreinVector v = sampler.sparse_krein();
    const KreinVector x = sampler.sparse_krein();
    CHECK(krein_form(v, x) == std::conj(krein_form(x, v)));
  }
}

TEST_CASE("symmetric variant of the form") {
  SUBCASE("transform scales the bottom slot") {
    const KreinVector v = diag(0);
    const KreinVector t = symmetric_form_transform(v, +1);
    CHECK(t.top == Vector::unit(0));
    CHECK(t.bottom == Vector::unit(0, I));
    CHECK_THROWS_AS(symmetric_form_transform(v, 2), std::invalid_argument);
  }
  SUBCASE("worked value") {
    const KreinVector v = diag(0);
    CHECK(symmetric_form(v, v) == Complex(0.0, 0.0));  // i(1 - 1)
  }
  SUBCASE("matches i(<top,bottom> - <bottom,top>)") {
    SparseSampler sampler(53);
    for (int trial = 0; trial < 25; ++trial) {
      const KreinVector a = sampler.sparse_krein();
      const KreinVector b = sampler.sparse_krein();
      const Complex expected = I * (hilbert_inner(a.top, b.bottom) -
                                    hilbert_inner(a.bottom, b.top));
      CHECK(std::abs(symmetric_form(a, b) - expected) <=
            1e-13 * (1.0 + std::abs(expected)));
      // Hermitian as well
      CHECK(std::abs(symmetric_form(a, b) - std::conj(symmetric_form(b, a))) <=
            1e-13 * (1.0 + std::abs(expected)));
    }
  }
  SUBCASE("transform commutes with the doubled powers") {
    const WeightSequence w = WeightSequence::geometric(2.0);
    SparseSampler sampler(59);
    for (int trial = 0; trial < 10; ++trial) {
      const KreinVector v = sampler.sparse_krein();
      for (Index N : {-5, -1, 0, 2, 7})
        CHECK(symmetric_form_transform(hat_u_power(w, N, v), +1) ==
              hat_u_power(w, N, symmetric_form_transform(v, +1)));
    }
  }
  SUBCASE("doubled operator preserves the symmetric form too") {
    SparseSampler sampler(61);
    const WeightSequence w = WeightSequence::geometric(3.0);
    for (int trial = 0; trial < 10; ++trial) {
      const KreinVector v = sampler.sparse_krein();
      const KreinVector x = sampler.sparse_krein();
      const Complex base = symmetric_form(v, x);
      for (Index N : {-8, -1, 1, 8}) {
        const Complex moved =
            symmetric_form(hat_u_power(w, N, v), hat_u_power(w, N, x));
        CHECK(std::abs(moved - base) <=
              1e-12 * std::max({1.0, std::abs(base), krein_scale(v, x)}));
      }
    }
  }
}
