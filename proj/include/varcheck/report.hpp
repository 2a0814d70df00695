#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "varcheck/scalar_field.hpp"
#include "varcheck/weak_identity.hpp"

namespace varcheck {

using json = nlohmann::ordered_json;

/// Run configuration shared by the CLI commands; serialized into every
/// report for provenance.  The defaults are the ones the acceptance suite
/// pins.
struct RunConfig {
  int level = 4;
  double tol_scale = 1.0;  // multiplies every quadrature/FD tolerance
  std::string bump_name = "quintic-plateau";
  std::string out_dir = "out";
  double window = 4.0;
  std::uint64_t seed = 20240901;

  json to_json() const;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;      // measured quantity (error, residual, ...)
  double threshold = 0.0;  // tolerance it was held against
  std::string detail;
};

struct SuiteResult {
  std::string name;
  std::vector<CheckResult> checks;
  bool pass() const;
  const CheckResult* first_failure() const;
  json to_json() const;
};

/// Residual record of one functional comparison, as emitted to JSON.
struct ResidualRecord {
  std::string selection;
  std::string test_function_id;
  int grid_level = 0;
  Vec3 residual = Vec3::Zero();
  Vec3 closed_form = Vec3::Zero();
  json to_json() const;
};

// --- The verification suites, in the order cmd_verify runs them. -----------

SuiteResult run_identity_suite();
SuiteResult run_bump_suite(const BumpSpec& bump);
/// Closed-form derivatives of g, D^2 g and d_l T against central differences
/// at sampled points with x1 >= 1e-2 (step 1e-4 * x1, error relative to the
/// largest compared magnitude), plus the exact vanishing of D^2 g on
/// {x1 < |x2|}.
SuiteResult run_derivative_suite(const ScalarField& field, int n_points, std::uint64_t seed,
                                 double tol_scale);
SuiteResult run_sheet_boundary_suite(const ScalarField& field, int level, double tol_scale,
                                     std::vector<ResidualRecord>* records = nullptr);
SuiteResult run_cancellation_suite(const ScalarField& field, int level, double tol_scale,
                                   std::vector<ResidualRecord>* records = nullptr);
SuiteResult run_nonzero_boundary_suite(const ScalarField& field, int level, double tol_scale);
SuiteResult run_enumeration_suite(json* exact_report = nullptr);

struct VerifyResult {
  std::vector<SuiteResult> suites;
  bool pass = false;
  std::string first_failure;  // "suite: check" of the first failing check
  json report;
};

VerifyResult verify_all(const RunConfig& config);

struct ConvergenceRow {
  int level = 0;
  double max_residual = 0.0;       // max |B(W_i) - closed| over the battery
  double cancellation = 0.0;       // |B(V)| max over the battery
  double cutoff_norm = 0.0;        // |B(W_1, psi_eps phi)| at eps = 1/2^level
};

struct ConvergenceResult {
  std::vector<ConvergenceRow> rows;
  bool monotone_tail = false;  // improvement on the final two levels
  std::string csv;
};

ConvergenceResult convergence_study(const RunConfig& config, const std::vector<int>& levels);

}  // namespace varcheck
