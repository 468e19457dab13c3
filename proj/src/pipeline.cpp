#include "korbit/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <stdexcept>

namespace korbit {

namespace {

// Verdict tolerances are pinned constants; cfg.tol governs only the numerical
// rank decisions (kernel detection, totality).
constexpr double kGramTol = 1e-13;
constexpr double kMomentTol = 1e-10;
constexpr double kCrossTol = 1e-12;
constexpr double kIsometryTol = 1e-10;
constexpr double kIntertwineTol = 1e-13;

std::vector<Index> power_sweep(Index lo, Index hi) {
  std::set<Index> ws;
  ws.insert(lo);
  for (Index w = 1; w <= hi; w *= 2)
    if (w >= lo) ws.insert(w);
  ws.insert(hi);
  return {ws.begin(), ws.end()};
}

double gram_structure_deviation(const Eigen::MatrixXcd& g, double diagonal) {
  double dev = 0.0;
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) {
      const Complex expected = i == j ? Complex(diagonal, 0.0) : Complex(0.0, 0.0);
      dev = std::max(dev, std::abs(g(i, j) - expected));
    }
  return dev;
}

GramSummary summarize(const GramReport& r, double diagonal) {
  GramSummary s;
  s.classification = to_string(r.classification);
  s.min_eigenvalue = r.min_eigenvalue;
  s.max_eigenvalue = r.max_eigenvalue;
  s.kernel_dim = r.kernel_dim;
  s.structure_deviation = gram_structure_deviation(r.matrix, diagonal);
  return s;
}

// --- deterministic JSON emission ------------------------------------------

class JsonWriter {
 public:
  std::string take() { return std::move(out_); }

  void begin_object() { open('{'); }
  void end_object() { close('}'); }
  void begin_array() { open('['); }
  void end_array() { close(']'); }

  void key(const std::string& k) {
    separate();
    append_string(k);
    out_ += ": ";
    pending_value_ = true;
  }

  void value(double v) { raw(format_double(v)); }
  void value(Index v) { raw(std::to_string(v)); }
  void value(int v) { raw(std::to_string(v)); }
  void value(std::uint64_t v) { raw(std::to_string(v)); }
  void value(bool v) { raw(v ? "true" : "false"); }
  void value(const std::string& v) {
    separate();
    append_string(v);
  }
  void value(const char* v) { value(std::string(v)); }

  static std::string format_double(double v) {
    if (!std::isfinite(v))
      throw std::logic_error("report fields must be finite");
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
  }

 private:
  void open(char c) {
    separate();
    out_ += c;
    depth_++;
    fresh_ = true;
  }
  void close(char c) {
    depth_--;
    out_ += '\n';
    indent();
    out_ += c;
    fresh_ = false;
  }
  void separate() {
    if (pending_value_) {
      pending_value_ = false;
      return;
    }
    if (out_.empty()) return;
    if (!fresh_) out_ += ',';
    out_ += '\n';
    indent();
    fresh_ = false;
  }
  void raw(const std::string& text) {
    separate();
    out_ += text;
  }
  void indent() {
    for (int i = 0; i < depth_; ++i) out_ += "  ";
  }
  void append_string(const std::string& s) {
    out_ += '"';
    for (char c : s) {
      switch (c) {
        case '"': out_ += "\\\""; break;
        case '\\': out_ += "\\\\"; break;
        case '\n': out_ += "\\n"; break;
        case '\t': out_ += "\\t"; break;
        case '\r': out_ += "\\r"; break;
        default:
          if (static_cast<unsigned char>(c) < 0x20) {
            char buf[8];
            std::snprintf(buf, sizeof(buf), "\\u%04x", c);
            out_ += buf;
          } else {
            out_ += c;
          }
      }
    }
    out_ += '"';
  }

  std::string out_;
  int depth_ = 0;
  bool fresh_ = true;
  bool pending_value_ = false;
};

}  // namespace

Report run_pipeline(const RunConfig& cfg) {
  if (cfg.K < 0 || cfg.W < cfg.K)
    throw std::invalid_argument("config requires W >= K >= 0");
  if (!(cfg.margin > 0.0)) throw std::invalid_argument("margin must be > 0");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument("tol must be > 0");
  if (cfg.trials < 0) throw std::invalid_argument("trials must be >= 0");

  Report rep;
  rep.config = cfg;

  const MomentSequence raw = load_moments_file(cfg.input_path);
  rep.input_window = raw.window();
  rep.input_entries = int(raw.values().support_size());
  rep.input_max_abs = raw.max_abs();

  rep.growth = validate_moments(raw);
  const MomentSequence c = raw.with_growth(rep.growth);
  const double c_scale = 1.0 + c.max_abs();

  const WeightSequence w = make_weights(c, cfg.margin);
  rep.rho = w.rho();

  const ModelOrbit m = model_vector(c, w);
  rep.f0_symmetry_residual = f0_symmetry_residual(m.f0);
  rep.moment_residual_range = std::max(cfg.W, 2 * c.window());
  rep.moment_residual_max =
      moment_residuals(m, rep.moment_residual_range).max_abs();

  auto [plus, minus] = plus_minus_generators(w, cfg.K);
  const GramReport gram_pp = krein_gram(plus, plus, cfg.tol);
  const GramReport gram_mm = krein_gram(minus, minus, cfg.tol);
  const GramReport gram_pm = krein_gram(plus, minus, cfg.tol);
  rep.gram_plus = summarize(gram_pp, 2.0);
  rep.gram_minus = summarize(gram_mm, -2.0);
  rep.gram_cross_max = gram_pm.max_abs_entry;

  auto [model_plus, model_minus] = model_lineal_generators(m, cfg.K);
  rep.cross_gram_max = krein_gram(model_plus, model_minus, cfg.tol).max_abs_entry;

  for (Index kw : power_sweep(std::min<Index>(1, cfg.W), cfg.W)) {
    KernelSweepEntry entry;
    entry.W = kw;
    const auto kernel = neutral_kernel(c, kw, cfg.tol);
    entry.dim = int(kernel.size());
    for (const auto& g : kernel) {
      entry.max_self_form =
          std::max(entry.max_self_form, std::abs(orbit_form(g, g, c)));
      for (Index N = -kw; N <= kw; ++N)
        entry.max_delta_form = std::max(
            entry.max_delta_form,
            std::abs(orbit_form(OrbitVector::unit(N), g, c)));
    }
    rep.neutral_kernel_dim.push_back(entry);
  }

  for (Index tw : power_sweep(cfg.K, cfg.W))
    rep.totality_defect.push_back({tw, totality_defect(m, cfg.K, tw)});

  const IsometryCheck iso = omega_isometry_residual(m, cfg.trials, cfg.seed);
  rep.omega_isometry_residual = iso.residual;
  rep.omega_injectivity_defect = injectivity_defect(m, cfg.K);
  const IntertwiningCheck twine =
      intertwining_check(m, std::max(1, cfg.trials / 10), cfg.seed + 1);
  rep.intertwining_exact = twine.structure_exact;
  rep.intertwining_value_residual = twine.value_residual;

  const double gram_dev =
      std::max({rep.gram_plus.structure_deviation,
                rep.gram_minus.structure_deviation, rep.gram_cross_max});
  rep.verdicts.emplace_back(
      "generator_gram_structure",
      Verdict{gram_dev <= kGramTol, gram_dev, kGramTol, 1.0,
              "plus/minus generator Grams equal +2I, -2I, 0 entrywise"});
  rep.verdicts.emplace_back(
      "moment_reproduction",
      Verdict{rep.moment_residual_max <= kMomentTol * c_scale,
              rep.moment_residual_max, kMomentTol, c_scale,
              "model moments reproduce c on the window and vanish beyond it"});
  rep.verdicts.emplace_back(
      "model_lineal_orthogonality",
      Verdict{rep.cross_gram_max <= kCrossTol * c_scale, rep.cross_gram_max,
              kCrossTol, c_scale,
              "cross Gram of the two model lineals vanishes"});
  rep.verdicts.emplace_back(
      "doubling_isometry",
      Verdict{rep.omega_isometry_residual <= kIsometryTol,
              rep.omega_isometry_residual, kIsometryTol, 1.0,
              "embedding carries the difference form to the Krein form"});
  rep.verdicts.emplace_back(
      "doubling_intertwining",
      Verdict{rep.intertwining_exact &&
                  rep.intertwining_value_residual <= kIntertwineTol,
              rep.intertwining_value_residual, kIntertwineTol, 1.0,
              rep.intertwining_exact ? "index bookkeeping exact"
                                     : "support mismatch"});

  bool neutral_present = false;
  for (const auto& entry : rep.neutral_kernel_dim)
    if (entry.dim > 0) neutral_present = true;
  const double defect_at_k = rep.totality_defect.front().defect;
  if (neutral_present) {
    rep.verdicts.emplace_back(
        "totality",
        Verdict{true, defect_at_k, cfg.tol, 1.0,
                "not applicable (neutral subspace present); defect reported "
                "informationally"});
  } else {
    rep.verdicts.emplace_back(
        "totality",
        Verdict{defect_at_k > cfg.tol, defect_at_k, cfg.tol, 1.0,
                "no neutral kernel: truncated generators must have full rank "
                "at W = K"});
  }

  rep.all_pass = true;
  for (const auto& [name, v] : rep.verdicts) rep.all_pass = rep.all_pass && v.pass;
  return rep;
}

std::string report_to_json(const Report& rep) {
  JsonWriter w;
  w.begin_object();

  w.key("config");
  w.begin_object();
  w.key("input");
  w.value(rep.config.input_path);
  w.key("margin");
  w.value(rep.config.margin);
  w.key("K");
  w.value(rep.config.K);
  w.key("W");
  w.value(rep.config.W);
  w.key("tol");
  w.value(rep.config.tol);
  w.key("trials");
  w.value(rep.config.trials);
  w.key("seed");
  w.value(rep.config.seed);
  w.end_object();

  w.key("input_summary");
  w.begin_object();
  w.key("window");
  w.value(rep.input_window);
  w.key("entries");
  w.value(rep.input_entries);
  w.key("max_abs");
  w.value(rep.input_max_abs);
  w.end_object();

  w.key("growth");
  w.begin_object();
  w.key("a_hat");
  w.value(rep.growth.a_hat);
  w.key("M_hat");
  w.value(rep.growth.M_hat);
  w.end_object();

  w.key("rho");
  w.value(rep.rho);
  w.key("moment_residual_max");
  w.value(rep.moment_residual_max);
  w.key("moment_residual_range");
  w.value(rep.moment_residual_range);
  w.key("f0_symmetry_residual");
  w.value(rep.f0_symmetry_residual);

  auto emit_gram = [&w](const char* name, const GramSummary& g) {
    w.key(name);
    w.begin_object();
    w.key("classification");
    w.value(g.classification);
    w.key("min_eigenvalue");
    w.value(g.min_eigenvalue);
    w.key("max_eigenvalue");
    w.value(g.max_eigenvalue);
    w.key("kernel_dim");
    w.value(g.kernel_dim);
    w.key("structure_deviation");
    w.value(g.structure_deviation);
    w.end_object();
  };
  emit_gram("gram_plus", rep.gram_plus);
  emit_gram("gram_minus", rep.gram_minus);
  w.key("gram_cross_max");
  w.value(rep.gram_cross_max);
  w.key("cross_gram_max");
  w.value(rep.cross_gram_max);

  w.key("neutral_kernel_dim");
  w.begin_array();
  for (const auto& entry : rep.neutral_kernel_dim) {
    w.begin_object();
    w.key("W");
    w.value(entry.W);
    w.key("dim");
    w.value(entry.dim);
    w.key("max_self_form");
    w.value(entry.max_self_form);
    w.key("max_delta_form");
    w.value(entry.max_delta_form);
    w.end_object();
  }
  w.end_array();

  w.key("totality_defect");
  w.begin_array();
  for (const auto& entry : rep.totality_defect) {
    w.begin_object();
    w.key("W");
    w.value(entry.W);
    w.key("defect");
    w.value(entry.defect);
    w.end_object();
  }
  w.end_array();

  w.key("omega_isometry_residual");
  w.value(rep.omega_isometry_residual);
  w.key("omega_injectivity_defect");
  w.value(rep.omega_injectivity_defect);
  w.key("intertwining_exact");
  w.value(rep.intertwining_exact);
  w.key("intertwining_value_residual");
  w.value(rep.intertwining_value_residual);

  w.key("verdicts");
  w.begin_object();
  for (const auto& [name, v] : rep.verdicts) {
    w.key(name);
    w.begin_object();
    w.key("pass");
    w.value(v.pass);
    w.key("value");
    w.value(v.value);
    w.key("tol");
    w.value(v.tol);
    w.key("scale");
    w.value(v.scale);
    w.key("note");
    w.value(v.note);
    w.end_object();
  }
  w.end_object();

  w.key("all_pass");
  w.value(rep.all_pass);
  w.end_object();
  std::string out = w.take();
  out += '\n';
  return out;
}

int exit_status(const Report& report) { return report.all_pass ? 0 : 1; }

}  // namespace korbit
