#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace sdspectra {

struct Check {
  std::string name;
  bool passed = false;
  nlohmann::json measured = nlohmann::json::object();
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no runtime requirement
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  nlohmann::json to_json() const;
};

struct VerifyConfig {
  double tol_slope = 0.1;
  double tol_reversal = 1e-8;
  double tol_reversal_vector = 1e-6;
  double tol_root = 1e-10;
  double tol_companion = 1e-8;
  double tol_boundary = 1e-6;
  double tol_reconstruction = 1e-6;
  double tol_conjugacy = 1e-8;
  double tol_recurrence = 1e-7;
  double tol_vandermonde = 1e-8;
  double tol_vandermonde_u = 1e-12;
  double tol_state = 1e-12;
  double tol_identity = 1e-8;
  std::uint64_t seed = 20240601;
  int trials = 50;
  bool inject_gram_perturbation = false;
  bool enforce_runtime = true;
};

nlohmann::json to_json(const VerifyConfig& cfg);
VerifyConfig verify_config_from_json(const nlohmann::json& j, VerifyConfig base = {});

// One function per acceptance criterion, shared by the CLI and the acceptance binary.
struct Criterion {
  int id;
  std::string title;
  std::string suite;
  double limit_seconds;
  std::function<Check(const VerifyConfig&)> run;
};

const std::vector<Criterion>& criteria();

Check check_gram_exactness(const VerifyConfig& cfg);
Check check_spectral_bounds(const VerifyConfig& cfg);
Check check_reversal_symmetry(const VerifyConfig& cfg);
Check check_flatness(const VerifyConfig& cfg);
Check check_root_suite(const VerifyConfig& cfg);
Check check_reconstruction(const VerifyConfig& cfg);
Check check_small_lambda(const VerifyConfig& cfg);
Check check_vandermonde(const VerifyConfig& cfg);
Check check_sigma_delta(const VerifyConfig& cfg);
Check check_codec(const VerifyConfig& cfg);
Check check_sigma_min(const VerifyConfig& cfg);

// suite: gram | spectral | roots | recurrence | vandermonde | sigmadelta | codec | all
// Runs one criterion with timing; exceptions become failed checks.
Check run_criterion(const Criterion& cr, const VerifyConfig& cfg);
SuiteResult run_suite(const std::string& suite, const VerifyConfig& cfg);
std::vector<std::string> suite_names();

}  // namespace sdspectra
