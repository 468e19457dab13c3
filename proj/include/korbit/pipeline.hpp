#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "korbit/doubling.hpp"

namespace korbit {

struct RunConfig {
  std::string input_path;
  double margin = 1.0;
  Index K = 16;   // generator half-width
  Index W = 32;   // verification window, W >= K
  double tol = 1e-10;  // kernel / rank tolerance
  int trials = 500;
  std::uint64_t seed = 0;
};

struct Verdict {
  bool pass = false;
  double value = 0.0;
  double tol = 0.0;
  double scale = 1.0;
  std::string note;
};

struct KernelSweepEntry {
  Index W = 0;
  int dim = 0;
  double max_self_form = 0.0;   // worst |orbit_form(g, g)| over kernel vectors
  double max_delta_form = 0.0;  // worst |orbit_form(delta_N, g)| over window
};

struct TotalitySweepEntry {
  Index W = 0;
  double defect = 0.0;
};

struct GramSummary {
  std::string classification;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  int kernel_dim = 0;
  double structure_deviation = 0.0;  // entrywise distance from +/-2I or 0
};

struct Report {
  RunConfig config;
  Index input_window = 0;
  int input_entries = 0;
  double input_max_abs = 0.0;
  GrowthEstimate growth;
  double rho = 0.0;

  double moment_residual_max = 0.0;
  Index moment_residual_range = 0;
  double f0_symmetry_residual = 0.0;

  GramSummary gram_plus;
  GramSummary gram_minus;
  double gram_cross_max = 0.0;
  double cross_gram_max = 0.0;  // model lineals

  std::vector<KernelSweepEntry> neutral_kernel_dim;
  std::vector<TotalitySweepEntry> totality_defect;

  double omega_isometry_residual = 0.0;
  double omega_injectivity_defect = 0.0;
  bool intertwining_exact = false;
  double intertwining_value_residual = 0.0;

  std::vector<std::pair<std::string, Verdict>> verdicts;
  bool all_pass = false;
};

/// ingest -> validate -> weights -> model -> residuals -> Gram analysis ->
/// kernel and totality sweeps -> doubling checks -> verdicts. Deterministic
/// for a fixed (input, config).
Report run_pipeline(const RunConfig& cfg);

/// Fixed-format JSON: insertion-ordered keys, floats at 17 significant
/// digits, two-space indent. Byte-identical across runs of the same build.
std::string report_to_json(const Report& report);

/// 0 iff every verdict passes.
int exit_status(const Report& report);

}  // namespace korbit
