#pragma once

#include <Eigen/Core>
#include <utility>
#include <vector>

#include "korbit/model.hpp"

namespace korbit {

/// Element of the abstract orbit space span{U_0^n x_0}, identified with its
/// finitely supported coefficient sequence g(n). x_0 itself is delta_0.
using OrbitVector = BiSequence;

/// The family {hat(U)^N seed : |N| <= K}, materialized eagerly. Applying
/// hat(U)^{+/-1} to member N yields exactly member N +/- 1, so the family is
/// stable under the doubled shift up to re-indexing.
class GeneratorFamily {
 public:
  GeneratorFamily(WeightSequence w, KreinVector seed, Index K);

  const KreinVector& member(Index N) const;
  Index half_width() const { return K_; }
  const KreinVector& seed() const { return seed_; }
  const WeightSequence& weights() const { return w_; }

 private:
  WeightSequence w_;
  KreinVector seed_;
  Index K_;
  std::vector<KreinVector> members_;
};

/// Seeds b_0 (+) b_0 and b_0 (+) -b_0: the strictly positive and strictly
/// negative generator families. Member N is (u_N/u_0) b_N (+) +/-(conj(u_0)/
/// conj(u_N)) b_N.
std::pair<GeneratorFamily, GeneratorFamily> plus_minus_generators(
    const WeightSequence& w, Index K);

/// Seeds b_0 (+) f_0 and b_0 (+) -f_0. Requires f0_symmetry_residual == 0
/// (SymmetryHypothesisError otherwise); the cross Gram between the two
/// families then vanishes identically.
std::pair<GeneratorFamily, GeneratorFamily> model_lineal_generators(
    const ModelOrbit& m, Index K);

enum class GramClass {
  StrictlyPositive,
  StrictlyNegative,
  Neutral,
  Indefinite,
  Degenerate,
};

const char* to_string(GramClass c);

struct GramReport {
  Eigen::MatrixXcd matrix;
  GramClass classification = GramClass::Neutral;
  double min_eigenvalue = 0.0;  // of the Hermitian part
  double max_eigenvalue = 0.0;
  int kernel_dim = 0;  // eigenvalues with |lambda| <= tol * max|lambda|
  double hermiticity_defect = 0.0;
  double max_abs_entry = 0.0;
  double tol = 0.0;
};

/// Sign classification of a form matrix from the eigenvalues of its Hermitian
/// part, with a relative kernel tolerance.
GramReport classify_gram(const Eigen::MatrixXcd& matrix, double tol);

/// matrix[N, M] = krein_form(member_a(N), member_b(M)). Both families must
/// share the weight policy.
GramReport krein_gram(const GeneratorFamily& a, const GeneratorFamily& b,
                      double tol = 1e-10);

/// The Toeplitz form of the orbit space:
///   sum_{N,n} conj(a(N)) b(n) c(n - N),
/// linear in the second argument, Hermitian, and invariant under simultaneous
/// orbit_shift of both arguments.
Complex orbit_form(const OrbitVector& a, const OrbitVector& b,
                   const MomentSequence& c);

/// Coefficient re-indexing output(n) = a(n - N); realizes U_0^N on the orbit.
OrbitVector orbit_shift(const OrbitVector& a, Index N);

/// Dense Hermitian Toeplitz Gram T[N, n] = c(n - N) on |N|, |n| <= W.
Eigen::MatrixXcd toeplitz_gram(const MomentSequence& c, Index W);

/// Basis of the numerical kernel of toeplitz_gram (singular values below
/// tol * sigma_max). Each returned vector is neutral and window-orthogonal to
/// every delta_N. A zero form yields the full coordinate basis.
std::vector<OrbitVector> neutral_kernel(const MomentSequence& c, Index W,
                                        double tol);

/// Coefficients n -> (u_0/u_n) g1(n): the image of g1 in the orbit space.
OrbitVector tilde_g(const Vector& g1, const WeightSequence& w);

struct ProbeReport {
  double tol = 0.0;
  double scale = 1.0;
  double orthogonality_max = 0.0;  // max |{member_{+/-}(N), candidate}|
  bool orthogonal = false;
  bool evaluated = false;  // conclusions checked only when orthogonal
  double bottom_window_max = 0.0;
  double f0_pairing_max = 0.0;
  double orbit_form_max = 0.0;
  bool bottom_vanishes = false;
  bool f0_orthogonal = false;
  bool orbit_annihilated = false;
  bool conclusions_hold = false;
};

/// Tests the candidate against both model lineals on |N| <= K. When every
/// pairing vanishes, asserts the annihilator structure: the bottom component
/// vanishes on the window, <f0, U^N top> = 0, and the lifted orbit vector
/// tilde_g(top) is window-orthogonal to every delta_N.
ProbeReport annihilator_probe(const ModelOrbit& m, Index K,
                              const KreinVector& candidate, double tol = 1e-10);

/// Smallest singular value, after column normalization, of the 2(2K+1)
/// model-lineal generators expressed in the weight-rescaled doubled basis
/// {u_n b_n (+) 0, 0 (+) b_n / conj(u_n) : |n| <= W}. The rescaling removes
/// the rho^K growth that would otherwise swamp the measurement; in these
/// coordinates the top blocks are coordinate vectors and the bottom blocks
/// are translates of conj(c)/2. Zero defect exhibits rank deficiency of the
/// truncated generator set.
double totality_defect(const ModelOrbit& m, Index K, Index W);

}  // namespace korbit
