// varcheck: verification driver for the six-sheet junction varifold.
//
// Subcommands:
//   verify       run the full check pipeline, write a JSON report
//   converge     residual/cutoff table across grid levels, write CSV
//   enumerate    exact boundary-free enumeration and classification
//   export-mesh  sample the six sheets into an OBJ file
//
// Exit codes: 0 pass, 1 check failure, 2 usage/config error, 3 I/O error.

#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "varcheck/decomposition.hpp"
#include "varcheck/mesh_export.hpp"
#include "varcheck/report.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

int write_file(const std::string& dir, const std::string& name, const std::string& body) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) {
    std::cerr << "error: cannot create output directory " << dir << ": " << ec.message()
              << "\n";
    return kExitIo;
  }
  const std::string path = dir + "/" + name;
  std::ofstream os(path, std::ios::binary);
  os << body;
  if (!os) {
    std::cerr << "error: cannot write " << path << "\n";
    return kExitIo;
  }
  std::cout << "wrote " << path << "\n";
  return kExitPass;
}

int cmd_verify(const varcheck::RunConfig& config) {
  const varcheck::VerifyResult result = varcheck::verify_all(config);
  for (const varcheck::SuiteResult& suite : result.suites)
    std::cout << (suite.pass() ? "[pass] " : "[FAIL] ") << suite.name << " ("
              << suite.checks.size() << " checks)\n";
  const int io = write_file(config.out_dir, "verify_report.json", result.report.dump(2) + "\n");
  if (io != kExitPass) return io;
  if (!result.pass) {
    std::cerr << "FAILED: " << result.first_failure << "\n";
    return kExitCheckFailure;
  }
  std::cout << "all suites passed\n";
  return kExitPass;
}

int cmd_converge(const varcheck::RunConfig& config, const std::vector<int>& levels) {
  const varcheck::ConvergenceResult result = varcheck::convergence_study(config, levels);
  std::cout << result.csv;
  const int io = write_file(config.out_dir, "convergence.csv", result.csv);
  if (io != kExitPass) return io;
  if (!result.monotone_tail) {
    std::cerr << "FAILED: residual did not improve on the final two levels\n";
    return kExitCheckFailure;
  }
  return kExitPass;
}

int cmd_enumerate(const varcheck::RunConfig& config) {
  varcheck::json exact;
  const varcheck::SuiteResult suite = varcheck::run_enumeration_suite(&exact);
  const auto sets = varcheck::enumerate_boundary_free();
  std::cout << "boundary-free sets (" << sets.size() << "):";
  for (const auto& s : sets) std::cout << " " << s.str();
  std::cout << "\n" << exact["conclusion"].get<std::string>() << "\n";
  varcheck::json full;
  full["library"] = "varcheck";
  full["version"] = varcheck::library_version();
  full["config"] = config.to_json();
  full["enumeration"] = exact;
  const int io = write_file(config.out_dir, "enumeration.json", full.dump(2) + "\n");
  if (io != kExitPass) return io;
  return suite.pass() ? kExitPass : kExitCheckFailure;
}

int cmd_export_mesh(const varcheck::RunConfig& config) {
  if (!(config.window > 0.0)) {
    std::cerr << "error: --window must be positive for export-mesh\n";
    return kExitUsage;
  }
  varcheck::MeshExportOptions options;
  options.window_radius = config.window;
  std::ostringstream body;
  varcheck::export_sheets_obj(varcheck::ScalarField{varcheck::BumpSpec::by_name(config.bump_name)},
                              body, options);
  return write_file(config.out_dir, "sheets.obj", body.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical and exact checks for the six-sheet junction varifold"};
  app.require_subcommand(1);

  varcheck::RunConfig config;
  app.add_option("--level", config.level, "quadrature refinement level (>= 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", config.tol_scale,
                 "scale factor on every residual tolerance (0 makes all quadrature checks fail)");
  app.add_option("--bump", config.bump_name,
                 "bump id: quintic-plateau | alt | narrow-noncompliant");
  app.add_option("--out", config.out_dir, "output directory for reports");
  app.add_option("--window", config.window, "chart window radius for meshes");
  app.add_option("--seed", config.seed, "seed for sampled-point suites");

  auto* verify = app.add_subcommand("verify", "run the full verification pipeline");
  std::vector<int> levels;
  auto* converge = app.add_subcommand("converge", "grid convergence study");
  converge->add_option("--levels", levels, "grid levels, at least two")->expected(-1);
  auto* enumerate = app.add_subcommand("enumerate", "exact boundary-free enumeration");
  auto* exportm = app.add_subcommand("export-mesh", "write the six sheets as OBJ");
  for (auto* sub : {verify, converge, enumerate, exportm}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    varcheck::BumpSpec::by_name(config.bump_name);  // validate early
    if (verify->parsed()) return cmd_verify(config);
    if (converge->parsed()) {
      if (levels.size() < 2) {
        std::cerr << "error: converge needs at least two --levels\n";
        return kExitUsage;
      }
      return cmd_converge(config, levels);
    }
    if (enumerate->parsed()) return cmd_enumerate(config);
    if (exportm->parsed()) return cmd_export_mesh(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
