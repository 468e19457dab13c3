#pragma once

#include <cstdint>
#include <random>

#include "korbit/krein.hpp"
#include "korbit/moments.hpp"

namespace korbit {

/// Deterministic generator of the sparse test vectors used by the property
/// checks: support size <= 6, indices in [-8, 8], complex values from the
/// closed unit disk.
class SparseSampler {
 public:
  explicit SparseSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi);
  Index uniform_index(Index lo, Index hi);
  Complex unit_disk();

  BiSequence sparse_sequence(int max_support = 6, Index index_range = 8);
  KreinVector sparse_krein(int max_support = 6, Index index_range = 8);

  /// Hermitian-symmetric moment data with window <= max_window and
  /// |c(N)| <= base^{|N|}.
  MomentSequence admissible_moments(Index max_window, double base);

 private:
  std::mt19937_64 rng_;
};

}  // namespace korbit
