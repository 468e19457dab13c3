// Command-line front end: ingest a moment file, run the verification
// pipeline, and emit either a human summary or the deterministic JSON report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "korbit/errors.hpp"
#include "korbit/pipeline.hpp"

namespace {

void add_common_options(CLI::App* cmd, korbit::RunConfig& cfg) {
  cmd->add_option("input", cfg.input_path, "moment input file (JSON)")
      ->required();
  cmd->add_option("--margin", cfg.margin, "weight margin above the growth slope")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--K", cfg.K, "generator half-width");
  cmd->add_option("--W", cfg.W, "verification window (>= K)");
  cmd->add_option("--tol", cfg.tol, "kernel / rank tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--trials", cfg.trials, "random-test count");
  cmd->add_option("--seed", cfg.seed, "random seed");
}

void print_summary(const korbit::Report& rep) {
  std::printf("input:  %s (window %lld, %d entries, max|c| = %.6g)\n",
              rep.config.input_path.c_str(), (long long)rep.input_window,
              rep.input_entries, rep.input_max_abs);
  std::printf("growth: a_hat = %.6g, M_hat = %.6g\n", rep.growth.a_hat,
              rep.growth.M_hat);
  std::printf("weights: geometric rho = %.6g\n", rep.rho);
  std::printf("model:  moment_residual_max = %.3e, f0_symmetry_residual = %.3e\n",
              rep.moment_residual_max, rep.f0_symmetry_residual);
}

void print_verdicts(const korbit::Report& rep) {
  for (const auto& [name, v] : rep.verdicts)
    std::printf("%s %-28s value=%.6e tol=%.1e scale=%.6g  %s\n",
                v.pass ? "PASS" : "FAIL", name.c_str(), v.value, v.tol,
                v.scale, v.note.c_str());
  std::printf("verdict: %s\n", rep.all_pass ? "PASS" : "FAIL");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"models of Z-orbits of Krein-unitary operators via bilateral "
               "weighted shifts"};
  app.require_subcommand(1);

  korbit::RunConfig cfg;
  std::string json_out;

  CLI::App* build = app.add_subcommand("build", "construct the model and print a summary");
  add_common_options(build, cfg);
  CLI::App* verify = app.add_subcommand("verify", "run all checks, print one line per verdict");
  add_common_options(verify, cfg);
  CLI::App* report = app.add_subcommand("report", "run all checks, emit the JSON report");
  add_common_options(report, cfg);
  report->add_option("--json-out", json_out, "write the report here instead of stdout");

  CLI11_PARSE(app, argc, argv);

  try {
    const korbit::Report rep = korbit::run_pipeline(cfg);
    if (build->parsed()) {
      print_summary(rep);
      return 0;
    }
    if (verify->parsed()) {
      print_summary(rep);
      print_verdicts(rep);
      return korbit::exit_status(rep);
    }
    const std::string json = korbit::report_to_json(rep);
    if (json_out.empty()) {
      std::fwrite(json.data(), 1, json.size(), stdout);
    } else {
      std::ofstream out(json_out, std::ios::binary | std::ios::trunc);
      if (!out) {
        std::cerr << "error: cannot write " << json_out << "\n";
        return 2;
      }
      out << json;
    }
    return korbit::exit_status(rep);
  } catch (const korbit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
