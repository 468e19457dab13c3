#include "korbit/moments.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "korbit/errors.hpp"

namespace korbit {

namespace {

bool growth_bound_holds(const BiSequence& values, const GrowthEstimate& est) {
  for (const auto& [n, v] : values.entries()) {
    const double bound = est.M_hat * std::exp(est.a_hat * double(iabs(n)));
    if (std::abs(v) > bound) return false;
  }
  return true;
}

}  // namespace

MomentSequence MomentSequence::with_growth(GrowthEstimate est) const {
  if (!growth_bound_holds(values_, est))
    throw std::invalid_argument("growth bound fails on a stored index");
  MomentSequence out = *this;
  out.growth_ = est;
  return out;
}

MomentSequence hermitian_extend(
    const std::vector<std::pair<Index, Complex>>& half) {
  std::set<Index> seen;
  BiSequence values;
  for (const auto& [n, v] : half) {
    if (n < 0)
      throw std::invalid_argument("hermitian_extend expects indices N >= 0");
    if (!seen.insert(n).second) throw DuplicateIndexError(n);
    if (n == 0) {
      const double tol_imag = 1e-12 * std::max(1.0, std::abs(v));
      if (std::abs(v.imag()) > tol_imag) throw NonRealC0Error(v.imag());
      values.add_term(0, Complex(v.real(), 0.0));
    } else {
      values.add_term(n, v);
      values.add_term(-n, std::conj(v));
    }
  }
  return MomentSequence::from_entries(std::move(values));
}

GrowthEstimate validate_moments(const MomentSequence& c) {
  const BiSequence& values = c.values();
  const double tol_sym = 1e-12 * std::max(1.0, values.max_abs());

  double worst_dev = 0.0;
  Index worst_idx = 0;
  for (const auto& [n, v] : values.entries()) {
    const double dev = n == 0 ? std::abs(v.imag())
                              : std::abs(c.at(-n) - std::conj(v));
    if (dev > worst_dev) {
      worst_dev = dev;
      worst_idx = n;
    }
  }
  if (worst_dev > tol_sym) throw SymmetryViolationError(worst_idx, worst_dev);

  GrowthEstimate est;
  est.M_hat = std::max(1.0, std::abs(c.at(0)));
  est.a_hat = 0.0;
  const double log_m = std::log(est.M_hat);
  for (const auto& [n, v] : values.entries()) {
    if (n == 0) continue;
    const double slope = (std::log(std::abs(v)) - log_m) / double(iabs(n));
    est.a_hat = std::max(est.a_hat, slope);
  }
  // The slope is derived through logs; nudge it up by ulps until the bound
  // holds verbatim on every stored index.
  for (int i = 0; i < 64 && !growth_bound_holds(values, est); ++i)
    est.a_hat = std::nextafter(est.a_hat, std::numeric_limits<double>::infinity());
  if (!growth_bound_holds(values, est))
    throw std::logic_error("growth estimate failed to stabilize");
  return est;
}

MomentSequence parse_moments_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("moments") || !doc["moments"].is_array())
    throw ParseError("expected an object with a \"moments\" array");

  std::vector<std::pair<Index, Complex>> half;
  for (const auto& item : doc["moments"]) {
    if (!item.is_object() || !item.contains("n") || !item.contains("re"))
      throw ParseError("each moment needs integer \"n\" and numeric \"re\"");
    if (!item["n"].is_number_integer())
      throw ParseError("moment index \"n\" must be an integer");
    const Index n = item["n"].get<Index>();
    if (n < 0)
      throw ParseError("negative moment index n=" + std::to_string(n) +
                       " rejected; supply N >= 0 only");
    if (!item["re"].is_number())
      throw ParseError("moment field \"re\" must be a number");
    double re = item["re"].get<double>();
    double im = 0.0;
    if (item.contains("im")) {
      if (!item["im"].is_number())
        throw ParseError("moment field \"im\" must be a number");
      im = item["im"].get<double>();
    }
    half.emplace_back(n, Complex(re, im));
  }
  return hermitian_extend(half);
}

MomentSequence load_moments_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_moments_json(buf.str());
}

}  // namespace korbit
