#include "korbit/random.hpp"

#include <cmath>
#include <utility>
#include <vector>

#include "korbit/weights.hpp"

namespace korbit {

double SparseSampler::uniform(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng_);
}

Index SparseSampler::uniform_index(Index lo, Index hi) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng_);
}

Complex SparseSampler::unit_disk() {
  const double r = std::sqrt(uniform(0.0, 1.0));
  const double theta = uniform(0.0, 2.0 * M_PI);
  return Complex(r * std::cos(theta), r * std::sin(theta));
}

BiSequence SparseSampler::sparse_sequence(int max_support, Index index_range) {
  BiSequence out;
  const Index count = uniform_index(1, max_support);
  for (Index i = 0; i < count; ++i)
    out.add_term(uniform_index(-index_range, index_range), unit_disk());
  return out;
}

KreinVector SparseSampler::sparse_krein(int max_support, Index index_range) {
  return {sparse_sequence(max_support, index_range),
          sparse_sequence(max_support, index_range)};
}

MomentSequence SparseSampler::admissible_moments(Index max_window, double base) {
  const Index window = uniform_index(0, max_window);
  std::vector<std::pair<Index, Complex>> half;
  half.emplace_back(0, Complex(uniform(-1.0, 1.0), 0.0));
  for (Index n = 1; n <= window; ++n)
    half.emplace_back(n, ipow(base, n) * unit_disk());
  return hermitian_extend(half);
}

}  // namespace korbit
