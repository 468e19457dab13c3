#pragma once

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "korbit/bisequence.hpp"
#include "korbit/moments.hpp"

namespace korbit {

/// Exact integer power, binary exponentiation; exp < 0 returns 1/base^{-exp}.
double ipow(double base, long long exp);

/// Nonvanishing bilateral weights u_n with conj(u_{-n}) = u_n (so u_0 real),
/// defined by a closed-form policy so that any integer index is evaluable:
///
///   geometric(rho):  u_n = rho^{|n|}, rho > 1, real positive
///   table(entries):  explicit values on a contiguous window 0..K (negative
///                    side derived by conjugation, verified if supplied) with
///                    a geometric tail u_n = u_K * 2^{n-K} for n > K
class WeightSequence {
 public:
  static WeightSequence geometric(double rho);
  static WeightSequence table(const std::vector<std::pair<Index, Complex>>& entries);

  Complex at(Index n) const;

  /// u_num / u_den. For the geometric policy this is rho^{|num|-|den|}
  /// computed as a single integer power, so inverse pairs for dyadic rho
  /// cancel exactly.
  Complex ratio(Index num, Index den) const;

  bool is_geometric() const { return std::holds_alternative<Geometric>(policy_); }
  double rho() const;          // geometric only
  Index table_window() const;  // table only

  bool operator==(const WeightSequence& other) const { return policy_ == other.policy_; }

  std::string to_json() const;
  static WeightSequence from_json(const std::string& text);

 private:
  struct Geometric {
    double rho;
    bool operator==(const Geometric&) const = default;
  };
  struct Table {
    std::vector<Complex> u;  // u[n] for n = 0..K
    bool operator==(const Table&) const = default;
  };
  std::variant<Geometric, Table> policy_;

  explicit WeightSequence(Geometric g) : policy_(g) {}
  explicit WeightSequence(Table t) : policy_(std::move(t)) {}
};

/// Picks geometric weights with rho = max(2, e^{a_hat + margin}) where a_hat
/// comes from validate_moments. The margin guarantees |c(N)/u_N| <=
/// M_hat * e^{-margin |N|}, hence square-summability on any window, while the
/// shift and its inverse stay bounded.
WeightSequence make_weights(const MomentSequence& c, double margin);

}  // namespace korbit
