#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "korbit/errors.hpp"
#include "korbit/pipeline.hpp"

using namespace korbit;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  const auto dir = std::filesystem::temp_directory_path() / "korbit_tests";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / name).string();
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  return path;
}

RunConfig small_config(const std::string& input) {
  RunConfig cfg;
  cfg.input_path = input;
  cfg.K = 4;
  cfg.W = 8;
  cfg.trials = 50;
  return cfg;
}

}  // namespace

TEST_CASE("pipeline on the point mass") {
  const std::string input =
      write_temp("delta0.json", R"({"moments": [{"n": 0, "re": 1, "im": 0}]})");
  const Report rep = run_pipeline(small_config(input));

  CHECK(rep.all_pass);
  CHECK(exit_status(rep) == 0);
  CHECK(rep.growth.a_hat == 0.0);
  CHECK(rep.growth.M_hat == 1.0);
  CHECK(rep.rho == doctest::Approx(std::exp(1.0)));
  CHECK(rep.moment_residual_max == 0.0);
  CHECK(rep.f0_symmetry_residual == 0.0);
  for (const auto& entry : rep.neutral_kernel_dim) CHECK(entry.dim == 0);
  CHECK(rep.gram_plus.classification == "strictly_positive");
  CHECK(rep.gram_minus.classification == "strictly_negative");
  for (const auto& [name, v] : rep.verdicts) {
    CAPTURE(name);
    CHECK(v.pass);
  }
}

TEST_CASE("pipeline on the flat sequence reports the neutral kernel") {
  const std::string input = write_temp(
      "ones4.json",
      R"({"moments": [{"n": 0, "re": 1}, {"n": 1, "re": 1}, {"n": 2, "re": 1},
                      {"n": 3, "re": 1}, {"n": 4, "re": 1}]})");
  const Report rep = run_pipeline(small_config(input));

  CHECK(rep.all_pass);
  bool any_kernel = false;
  for (const auto& entry : rep.neutral_kernel_dim)
    if (entry.dim > 0) any_kernel = true;
  CHECK(any_kernel);

  bool found_totality = false;
  for (const auto& [name, v] : rep.verdicts)
    if (name == "totality") {
      found_totality = true;
      CHECK(v.pass);
      CHECK(v.note.find("not applicable") != std::string::npos);
    }
  CHECK(found_totality);
}

TEST_CASE("pipeline rejects negative indices") {
  const std::string input = write_temp(
      "negative.json", R"({"moments": [{"n": -1, "re": 1, "im": 0}]})");
  CHECK_THROWS_AS(run_pipeline(small_config(input)), ParseError);
}

TEST_CASE("pipeline config validation") {
  const std::string input =
      write_temp("delta0b.json", R"({"moments": [{"n": 0, "re": 1}]})");
  RunConfig cfg = small_config(input);
  cfg.W = 2;  // < K
  CHECK_THROWS_AS(run_pipeline(cfg), std::invalid_argument);
  cfg = small_config(input);
  cfg.margin = 0.0;
  CHECK_THROWS_AS(run_pipeline(cfg), std::invalid_argument);
  cfg = small_config(input);
  cfg.tol = -1.0;
  CHECK_THROWS_AS(run_pipeline(cfg), std::invalid_argument);
  CHECK_THROWS_AS(run_pipeline(small_config("/nonexistent/path.json")),
                  ParseError);
}

TEST_CASE("report serialization is deterministic and parseable") {
  const std::string input = write_temp(
      "first_i.json",
      R"({"moments": [{"n": 0, "re": 1, "im": 0}, {"n": 1, "re": 0, "im": 1}]})");
  const RunConfig cfg = small_config(input);

  const std::string a = report_to_json(run_pipeline(cfg));
  const std::string b = report_to_json(run_pipeline(cfg));
  CHECK(a == b);

  const nlohmann::json parsed = nlohmann::json::parse(a);
  CHECK(parsed["all_pass"].get<bool>());
  CHECK(parsed["config"]["K"].get<int>() == 4);
  CHECK(parsed["verdicts"].contains("moment_reproduction"));
  CHECK(parsed["verdicts"]["moment_reproduction"]["pass"].get<bool>());
  CHECK(parsed["verdicts"]["moment_reproduction"].contains("value"));
  CHECK(parsed["verdicts"]["moment_reproduction"].contains("tol"));
  CHECK(parsed["neutral_kernel_dim"].is_array());
  CHECK(parsed["totality_defect"].is_array());
  CHECK(parsed["omega_isometry_residual"].is_number());
  CHECK(parsed["intertwining_exact"].get<bool>());
}

TEST_CASE("floats are emitted with 17 significant digits") {
  const std::string input =
      write_temp("delta0c.json", R"({"moments": [{"n": 0, "re": 1}]})");
  const Report rep = run_pipeline(small_config(input));
  const std::string json = report_to_json(rep);
  // rho = e at margin 1; the full-precision value must appear verbatim
  char expected[40];
  std::snprintf(expected, sizeof(expected), "%.17g", std::exp(1.0));
  CHECK(json.find(expected) != std::string::npos);
}

TEST_CASE("exit status is a pure function of the verdicts") {
  Report rep;
  rep.all_pass = true;
  CHECK(exit_status(rep) == 0);
  rep.all_pass = false;
  CHECK(exit_status(rep) == 1);
}
