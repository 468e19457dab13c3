#include "korbit/subspaces.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "korbit/errors.hpp"

namespace korbit {

GeneratorFamily::GeneratorFamily(WeightSequence w, KreinVector seed, Index K)
    : w_(std::move(w)), seed_(std::move(seed)), K_(K) {
  if (K < 0) throw std::invalid_argument("generator half-width must be >= 0");
  members_.reserve(std::size_t(2 * K + 1));
  for (Index N = -K; N <= K; ++N)
    members_.push_back(hat_u_power(w_, N, seed_));
}

const KreinVector& GeneratorFamily::member(Index N) const {
  if (iabs(N) > K_)
    throw std::out_of_range("generator index outside [-K, K]");
  return members_[std::size_t(N + K_)];
}

std::pair<GeneratorFamily, GeneratorFamily> plus_minus_generators(
    const WeightSequence& w, Index K) {
  const Vector b0 = Vector::unit(0);
  return {GeneratorFamily(w, KreinVector{b0, b0}, K),
          GeneratorFamily(w, KreinVector{b0, -b0}, K)};
}

std::pair<GeneratorFamily, GeneratorFamily> model_lineal_generators(
    const ModelOrbit& m, Index K) {
  if (f0_symmetry_residual(m.f0) != 0.0)
    throw SymmetryHypothesisError(
        "model lineals require conj(f0(-N)) == f0(N) exactly");
  const Vector b0 = Vector::unit(0);
  return {GeneratorFamily(m.w, KreinVector{b0, m.f0}, K),
          GeneratorFamily(m.w, KreinVector{b0, -m.f0}, K)};
}

const char* to_string(GramClass c) {
  switch (c) {
    case GramClass::StrictlyPositive: return "strictly_positive";
    case GramClass::StrictlyNegative: return "strictly_negative";
    case GramClass::Neutral: return "neutral";
    case GramClass::Indefinite: return "indefinite";
    case GramClass::Degenerate: return "degenerate";
  }
  return "unknown";
}

GramReport classify_gram(const Eigen::MatrixXcd& matrix, double tol) {
  GramReport r;
  r.matrix = matrix;
  r.tol = tol;
  r.max_abs_entry = matrix.cwiseAbs().maxCoeff();
  r.hermiticity_defect =
      (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();

  const Eigen::MatrixXcd herm = 0.5 * (matrix + matrix.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(herm);
  const Eigen::VectorXd& lambda = eig.eigenvalues();
  r.min_eigenvalue = lambda.minCoeff();
  r.max_eigenvalue = lambda.maxCoeff();

  const double scale = lambda.cwiseAbs().maxCoeff();
  const double thresh = tol * scale;
  int zeros = 0, positives = 0, negatives = 0;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (std::abs(lambda[i]) <= thresh)
      ++zeros;
    else if (lambda[i] > 0.0)
      ++positives;
    else
      ++negatives;
  }
  r.kernel_dim = zeros;
  if (positives == 0 && negatives == 0)
    r.classification = GramClass::Neutral;
  else if (zeros > 0)
    r.classification = GramClass::Degenerate;
  else if (negatives == 0)
    r.classification = GramClass::StrictlyPositive;
  else if (positives == 0)
    r.classification = GramClass::StrictlyNegative;
  else
    r.classification = GramClass::Indefinite;
  return r;
}

GramReport krein_gram(const GeneratorFamily& a, const GeneratorFamily& b,
                      double tol) {
  if (!(a.weights() == b.weights()))
    throw std::invalid_argument("krein_gram requires matching weight policies");
  const Index Ka = a.half_width(), Kb = b.half_width();
  Eigen::MatrixXcd g(2 * Ka + 1, 2 * Kb + 1);
  for (Index N = -Ka; N <= Ka; ++N)
    for (Index M = -Kb; M <= Kb; ++M)
      g(N + Ka, M + Kb) = krein_form(a.member(N), b.member(M));
  return classify_gram(g, tol);
}

Complex orbit_form(const OrbitVector& a, const OrbitVector& b,
                   const MomentSequence& c) {
  Complex sum(0.0, 0.0);
  for (const auto& [N, av] : a.entries())
    for (const auto& [n, bv] : b.entries())
      sum += std::conj(av) * bv * c.at(n - N);
  return sum;
}

OrbitVector orbit_shift(const OrbitVector& a, Index N) {
  return a.shifted(N);
}

Eigen::MatrixXcd toeplitz_gram(const MomentSequence& c, Index W) {
  if (W < 0) throw std::invalid_argument("toeplitz_gram requires W >= 0");
  const Index n = 2 * W + 1;
  Eigen::MatrixXcd t(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) t(i, j) = c.at(j - i);
  return t;
}

std::vector<OrbitVector> neutral_kernel(const MomentSequence& c, Index W,
                                        double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("kernel tolerance must be > 0");
  const Eigen::MatrixXcd t = toeplitz_gram(c, W);
  const Index n = 2 * W + 1;

  std::vector<OrbitVector> kernel;
  if (t.cwiseAbs().maxCoeff() == 0.0) {
    for (Index i = 0; i < n; ++i) kernel.push_back(OrbitVector::unit(i - W));
    return kernel;
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(t, Eigen::ComputeFullV);
  const Eigen::VectorXd& sigma = svd.singularValues();
  const double thresh = tol * sigma(0);
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) >= thresh) continue;
    OrbitVector g;
    for (Index j = 0; j < n; ++j) g.add_term(j - W, svd.matrixV()(j, i));
    kernel.push_back(std::move(g));
  }
  return kernel;
}

OrbitVector tilde_g(const Vector& g1, const WeightSequence& w) {
  OrbitVector out;
  for (const auto& [n, v] : g1.entries()) out.add_term(n, w.ratio(0, n) * v);
  return out;
}

ProbeReport annihilator_probe(const ModelOrbit& m, Index K,
                              const KreinVector& candidate, double tol) {
  ProbeReport r;
  r.tol = tol;
  const double tn = candidate.top.l2_norm();
  const double bn = candidate.bottom.l2_norm();
  r.scale = (1.0 + m.c.max_abs()) * std::max(1.0, std::sqrt(tn * tn + bn * bn));

  auto [plus, minus] = model_lineal_generators(m, K);
  for (Index N = -K; N <= K; ++N) {
    r.orthogonality_max = std::max(
        r.orthogonality_max, std::abs(krein_form(plus.member(N), candidate)));
    r.orthogonality_max = std::max(
        r.orthogonality_max, std::abs(krein_form(minus.member(N), candidate)));
  }
  r.orthogonal = r.orthogonality_max <= tol * r.scale;
  if (!r.orthogonal) return r;

  r.evaluated = true;
  for (Index n = -K; n <= K; ++n)
    r.bottom_window_max =
        std::max(r.bottom_window_max, std::abs(candidate.bottom.value(n)));
  for (Index N = -K; N <= K; ++N)
    r.f0_pairing_max = std::max(
        r.f0_pairing_max,
        std::abs(hilbert_inner(m.f0, shift_power_apply(m.w, N, candidate.top))));
  const OrbitVector lifted = tilde_g(candidate.top, m.w);
  for (Index N = -K; N <= K; ++N)
    r.orbit_form_max = std::max(
        r.orbit_form_max, std::abs(orbit_form(OrbitVector::unit(N), lifted, m.c)));

  r.bottom_vanishes = r.bottom_window_max <= tol * r.scale;
  r.f0_orthogonal = r.f0_pairing_max <= tol * r.scale;
  r.orbit_annihilated = r.orbit_form_max <= tol * r.scale;
  r.conclusions_hold = r.bottom_vanishes && r.f0_orthogonal && r.orbit_annihilated;
  return r;
}

double totality_defect(const ModelOrbit& m, Index K, Index W) {
  if (W < K) throw std::invalid_argument("totality_defect requires W >= K");
  auto [plus, minus] = model_lineal_generators(m, K);

  const Index rows_half = 2 * W + 1;
  const Index cols_half = 2 * K + 1;
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(2 * rows_half, 2 * cols_half);

  auto fill_column = [&](const KreinVector& g, Index col) {
    for (const auto& [n, v] : g.top.entries())
      if (iabs(n) <= W) mat(n + W, col) = v / m.w.at(n);
    for (const auto& [n, v] : g.bottom.entries())
      if (iabs(n) <= W)
        mat(rows_half + n + W, col) = v * std::conj(m.w.at(n));
  };
  for (Index N = -K; N <= K; ++N) {
    fill_column(plus.member(N), N + K);
    fill_column(minus.member(N), cols_half + N + K);
  }

  for (Index j = 0; j < 2 * cols_half; ++j) {
    const double norm = mat.col(j).norm();
    if (norm > 0.0) mat.col(j) /= norm;
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(mat);
  const Eigen::VectorXd& sigma = svd.singularValues();
  return sigma(sigma.size() - 1);
}

}  // namespace korbit
