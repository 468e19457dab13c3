#include "korbit/weights.hpp"

#include <cmath>
#include <cstdlib>
#include <map>

#include <json.hpp>

#include "korbit/errors.hpp"

namespace korbit {

double ipow(double base, long long exp) {
  if (exp < 0) return 1.0 / ipow(base, -exp);
  double result = 1.0;
  double factor = base;
  while (exp > 0) {
    if (exp & 1) result *= factor;
    exp >>= 1;
    if (exp) factor *= factor;
  }
  return result;
}

WeightSequence WeightSequence::geometric(double rho) {
  if (!(rho > 1.0))
    throw WeightPolicyError("geometric policy requires rho > 1");
  return WeightSequence(Geometric{rho});
}

WeightSequence WeightSequence::table(
    const std::vector<std::pair<Index, Complex>>& entries) {
  std::map<Index, Complex> given(entries.begin(), entries.end());
  if (given.size() != entries.size())
    throw WeightPolicyError("duplicate index in weight table");

  Index max_n = 0;
  for (const auto& [n, v] : given) max_n = std::max(max_n, iabs(n));
  if (given.empty() || !given.count(0))
    throw WeightPolicyError("weight table must include n = 0");

  Table t;
  t.u.resize(std::size_t(max_n) + 1);
  for (Index n = 0; n <= max_n; ++n) {
    auto it = given.find(n);
    auto neg = given.find(-n);
    if (it == given.end() && neg == given.end())
      throw WeightPolicyError("weight table window must be contiguous, missing n=" +
                              std::to_string(n));
    Complex v = it != given.end() ? it->second : std::conj(neg->second);
    if (it != given.end() && neg != given.end() && n != 0 &&
        neg->second != std::conj(v))
      throw WeightPolicyError("weight table violates conj(u(-n)) == u(n) at n=" +
                              std::to_string(n));
    if (v == Complex(0.0, 0.0))
      throw WeightPolicyError("weights must not vanish, u(" + std::to_string(n) +
                              ") = 0");
    if (n == 0 && v.imag() != 0.0)
      throw WeightPolicyError("u(0) must be real");
    t.u[std::size_t(n)] = v;
  }
  return WeightSequence(std::move(t));
}

Complex WeightSequence::at(Index n) const {
  if (const auto* g = std::get_if<Geometric>(&policy_))
    return Complex(ipow(g->rho, iabs(n)), 0.0);
  const auto& t = std::get<Table>(policy_);
  const Index a = iabs(n);
  const Index k = Index(t.u.size()) - 1;
  Complex v = a <= k ? t.u[std::size_t(a)]
                     : t.u[std::size_t(k)] * ipow(2.0, a - k);
  return n >= 0 ? v : std::conj(v);
}

Complex WeightSequence::ratio(Index num, Index den) const {
  if (const auto* g = std::get_if<Geometric>(&policy_))
    return Complex(ipow(g->rho, iabs(num) - iabs(den)), 0.0);
  return at(num) / at(den);
}

double WeightSequence::rho() const {
  if (const auto* g = std::get_if<Geometric>(&policy_)) return g->rho;
  throw std::logic_error("rho() called on a table policy");
}

Index WeightSequence::table_window() const {
  if (const auto* t = std::get_if<Table>(&policy_))
    return Index(t->u.size()) - 1;
  throw std::logic_error("table_window() called on a geometric policy");
}

std::string WeightSequence::to_json() const {
  nlohmann::ordered_json j;
  if (const auto* g = std::get_if<Geometric>(&policy_)) {
    j["policy"] = "geometric";
    j["rho"] = g->rho;
  } else {
    const auto& t = std::get<Table>(policy_);
    j["policy"] = "table";
    j["entries"] = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n < t.u.size(); ++n)
      j["entries"].push_back({{"n", n}, {"re", t.u[n].real()}, {"im", t.u[n].imag()}});
    j["extension"] = "geometric_tail";
  }
  return j.dump();
}

WeightSequence WeightSequence::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid weight policy JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("policy"))
    throw ParseError("weight policy JSON needs a \"policy\" field");
  const std::string policy = j["policy"].get<std::string>();
  if (policy == "geometric") {
    if (!j.contains("rho") || !j["rho"].is_number())
      throw ParseError("geometric policy needs numeric \"rho\"");
    return geometric(j["rho"].get<double>());
  }
  if (policy == "table") {
    if (j.value("extension", "") != std::string("geometric_tail"))
      throw ParseError("table policy requires \"extension\": \"geometric_tail\"");
    if (!j.contains("entries") || !j["entries"].is_array())
      throw ParseError("table policy needs an \"entries\" array");
    std::vector<std::pair<Index, Complex>> entries;
    for (const auto& item : j["entries"]) {
      if (!item.contains("n") || !item["n"].is_number_integer())
        throw ParseError("table entry needs integer \"n\"");
      entries.emplace_back(item["n"].get<Index>(),
                           Complex(item.value("re", 0.0), item.value("im", 0.0)));
    }
    return table(entries);
  }
  throw ParseError("unknown weight policy: " + policy);
}

WeightSequence make_weights(const MomentSequence& c, double margin) {
  if (!(margin > 0.0))
    throw std::invalid_argument("make_weights requires margin > 0");
  const GrowthEstimate est = validate_moments(c);
  const double rho = std::max(2.0, std::exp(est.a_hat + margin));
  return WeightSequence::geometric(rho);
}

}  // namespace korbit
