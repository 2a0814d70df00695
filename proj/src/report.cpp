#include "varcheck/report.hpp"

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "varcheck/decomposition.hpp"

namespace varcheck {

namespace {

json vec_to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

/// Portable uniform double in [0, 1) from a 64-bit generator state.
struct Sampler {
  std::uint64_t state;
  explicit Sampler(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  std::uint64_t next_u64() {
    // splitmix64; identical on every platform.
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
};

void push(SuiteResult& suite, std::string name, bool pass, double value, double threshold,
          std::string detail = {}) {
  suite.checks.push_back({std::move(name), pass, value, threshold, std::move(detail)});
}

}  // namespace

json RunConfig::to_json() const {
  json j;
  j["level"] = level;
  j["tol_scale"] = tol_scale;
  j["bump"] = bump_name;
  j["out_dir"] = out_dir;
  j["window"] = window;
  j["seed"] = seed;
  return j;
}

bool SuiteResult::pass() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return false;
  return true;
}

const CheckResult* SuiteResult::first_failure() const {
  for (const CheckResult& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

json SuiteResult::to_json() const {
  json j;
  j["name"] = name;
  j["pass"] = pass();
  json arr = json::array();
  for (const CheckResult& c : checks) {
    json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["value"] = c.value;
    cj["threshold"] = c.threshold;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    arr.push_back(cj);
  }
  j["checks"] = arr;
  return j;
}

json ResidualRecord::to_json() const {
  json j;
  j["selection"] = selection;
  j["test_function_id"] = test_function_id;
  j["grid_level"] = grid_level;
  j["residual"] = vec_to_json(residual);
  j["closed_form"] = vec_to_json(closed_form);
  return j;
}

SuiteResult run_identity_suite() {
  SuiteResult suite{"exact-identities", {}};
  const IdentityReport rep = verify_identities();
  push(suite, "conormal identities", rep.ok(), static_cast<double>(rep.failures.size()), 0.0,
       rep.ok() ? std::to_string(rep.checks) + " identities hold exactly"
                : "first failure: " + rep.failures.front());
  return suite;
}

SuiteResult run_bump_suite(const BumpSpec& bump) {
  SuiteResult suite{"bump-properties", {}};
  const BumpCheckReport rep = check_bump_properties(bump);
  push(suite, "bump properties (a)-(f) [" + bump.name() + "]", rep.ok(),
       static_cast<double>(rep.failures.size()), 0.0,
       rep.ok() ? "all properties hold" : "first failure: " + rep.failures.front());
  return suite;
}

SuiteResult run_derivative_suite(const ScalarField& field, int n_points, std::uint64_t seed,
                                 double tol_scale) {
  SuiteResult suite{"derivative-fd", {}};
  Sampler rng(seed);
  const double tol = 1e-5 * tol_scale;

  double worst = 0.0;
  bool hess_zero_ok = true;
  for (int n = 0; n < n_points; ++n) {
    const double x1 = std::exp(rng.uniform(std::log(1e-2), std::log(3.0)));
    const double u = rng.uniform(-2.0, 2.0);
    const double x2 = u * x1;
    // Step proportional to x1 (the chart derivatives are homogeneous along
    // rays), sized to balance truncation against roundoff.
    const double h = 1e-6 * x1;

    const Vec2 grad = field.grad(x1, x2);
    const Mat2 hess = field.hess(x1, x2);
    Mat3 dT[2];
    projection_deriv(grad, hess, dT);

    const Vec2 fd_grad((field.eval(x1 + h, x2) - field.eval(x1 - h, x2)) / (2 * h),
                       (field.eval(x1, x2 + h) - field.eval(x1, x2 - h)) / (2 * h));
    Mat2 fd_hess;
    fd_hess.col(0) = (field.grad(x1 + h, x2) - field.grad(x1 - h, x2)) / (2 * h);
    fd_hess.col(1) = (field.grad(x1, x2 + h) - field.grad(x1, x2 - h)) / (2 * h);
    const Mat3 fd_dT0 = (projection_from_gradient(field.grad(x1 + h, x2)) -
                         projection_from_gradient(field.grad(x1 - h, x2))) /
                        (2 * h);
    const Mat3 fd_dT1 = (projection_from_gradient(field.grad(x1, x2 + h)) -
                         projection_from_gradient(field.grad(x1, x2 - h))) /
                        (2 * h);

    const double scale =
        std::max({1.0, grad.cwiseAbs().maxCoeff(), hess.cwiseAbs().maxCoeff(),
                  dT[0].cwiseAbs().maxCoeff(), dT[1].cwiseAbs().maxCoeff()});
    const double err = std::max({(fd_grad - grad).cwiseAbs().maxCoeff(),
                                 (fd_hess - hess).cwiseAbs().maxCoeff(),
                                 (fd_dT0 - dT[0]).cwiseAbs().maxCoeff(),
                                 (fd_dT1 - dT[1]).cwiseAbs().maxCoeff()});
    worst = std::max(worst, err / scale);

    // Exact vanishing of the Hessian on {x1 < |x2|}.
    const double v = rng.uniform(1.0, 3.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
    if (field.hess(x1, v * x1).cwiseAbs().maxCoeff() != 0.0) hess_zero_ok = false;
  }
  push(suite, "grad/hess/dT vs central differences", worst <= tol, worst, tol,
       std::to_string(n_points) + " points, x1 >= 1e-2");
  push(suite, "D^2 g = 0 on {x1 < |x2|} exactly", hess_zero_ok, hess_zero_ok ? 0.0 : 1.0, 0.0);
  return suite;
}

SuiteResult run_sheet_boundary_suite(const ScalarField& field, int level, double tol_scale,
                                     std::vector<ResidualRecord>* records) {
  SuiteResult suite{"sheet-boundary-residuals", {}};
  const auto battery = standard_battery();
  const QuadratureGrid grid = QuadratureGrid::for_level(level, 4.0);
  for (int i = 1; i <= 6; ++i) {
    const Selection w = HalfSheetSet::full_sheet(i);
    for (const auto& phi : battery) {
      const Vec3 b = curvature_residual(field, w, *phi, grid);
      const Vec3 cf = boundary_closed_form(w, *phi);
      const double err = (b - cf).norm();
      const double tol = 1e-3 * tol_scale * std::max(1.0, cf.norm());
      std::ostringstream name;
      name << "B(W" << i << ", " << phi->id() << ") vs closed form";
      push(suite, name.str(), err <= tol, err, tol);
      if (records)
        records->push_back({"W" + std::to_string(i), phi->id(), level, b, cf});
    }
  }
  return suite;
}

SuiteResult run_cancellation_suite(const ScalarField& field, int level, double tol_scale,
                                   std::vector<ResidualRecord>* records) {
  SuiteResult suite{"full-varifold-cancellation", {}};
  const auto battery = standard_battery();
  const QuadratureGrid grid = QuadratureGrid::for_level(level, 4.0);
  for (const auto& phi : battery) {
    double max_single = 0.0;
    for (int i = 1; i <= 6; ++i)
      max_single =
          std::max(max_single, boundary_closed_form(HalfSheetSet::full_sheet(i), *phi).norm());
    if (max_single == 0.0) continue;  // cancellation bound needs a nonzero single-sheet term
    const Vec3 b = curvature_residual(field, HalfSheetSet::all(), *phi, grid);
    const double tol = 1e-2 * tol_scale * max_single;
    push(suite, "B(V, " + phi->id() + ") cancels", b.norm() <= tol, b.norm(), tol,
         "max single-sheet boundary " + std::to_string(max_single));
    if (records) records->push_back({"V", phi->id(), level, b, Vec3::Zero()});
  }
  return suite;
}

SuiteResult run_nonzero_boundary_suite(const ScalarField& field, int level, double tol_scale) {
  SuiteResult suite{"component-nonzero-boundary", {}};
  const QuadratureGrid grid = QuadratureGrid::for_level(level, 4.0);
  const struct {
    Selection sel;
    int plane_index;
    const char* name;
  } cases[] = {{HalfSheetSet::z1(), 1, "Z1 at P_1^+"}, {HalfSheetSet::z2(), 2, "Z2 at P_2^+"}};
  for (const auto& c : cases) {
    const Mat3 Q = plane_projection(c.plane_index, Side::Plus).to_double();
    const auto phi = make_test_function(Q, 0.5);
    const Vec3 atom = recovered_boundary_atom(field, c.sel, *phi, grid);
    const Vec3 expected = conormal(c.plane_index, Side::Plus).to_double();
    const double err = (atom - expected).norm();
    const double tol = 1e-2 * tol_scale * expected.norm();
    push(suite, std::string("recovered atom ") + c.name, err <= tol && atom.norm() > 0.5, err,
         tol);
  }
  return suite;
}

SuiteResult run_enumeration_suite(json* exact_report) {
  SuiteResult suite{"enumeration-classification", {}};
  const auto free_sets = enumerate_boundary_free();
  const bool four = free_sets.size() == 4;
  bool expected_sets = four;
  if (four) {
    expected_sets = free_sets[0] == HalfSheetSet::empty_set() &&
                    free_sets[1] == HalfSheetSet::z1() && free_sets[2] == HalfSheetSet::z2() &&
                    free_sets[3] == HalfSheetSet::all();
  }
  push(suite, "boundary-free sets = {empty, Z1, Z2, V}", expected_sets,
       static_cast<double>(free_sets.size()), 4.0);

  const ClassificationReport rep = classification_report();
  push(suite, "components = {Z1, Z2}", rep.unique_decomposition,
       static_cast<double>(rep.component_list.size()), 2.0, rep.conclusion);
  bool z_not_curvature = true;
  bool v_curvature = false;
  for (const SetClassification& c : rep.sets) {
    if (c.set == HalfSheetSet::z1() || c.set == HalfSheetSet::z2())
      z_not_curvature = z_not_curvature && !c.curvature_no_boundary && c.grassmann_atoms == 6;
    if (c.set == HalfSheetSet::all()) v_curvature = c.curvature_no_boundary;
  }
  push(suite, "V has empty Grassmann boundary class", v_curvature, v_curvature ? 0.0 : 1.0, 0.0);
  push(suite, "Z1, Z2 have six nonzero Grassmann atoms", z_not_curvature,
       z_not_curvature ? 6.0 : 0.0, 6.0);

  if (exact_report) {
    json sets = json::array();
    for (const SetClassification& c : rep.sets) {
      const BoundarySignature sig = boundary_signature(c.set);
      json sj;
      sj["set"] = c.set.str();
      sj["signature"] = {{"L+", sig.l_plus.str()},
                         {"L-", sig.l_minus.str()},
                         {"T1", sig.ray[0].str()},
                         {"T2", sig.ray[1].str()},
                         {"T3", sig.ray[2].str()}};
      sj["component"] = c.component;
      sj["indecomposable"] = c.indecomposable;
      sj["curvature_without_boundary"] = c.curvature_no_boundary;
      json atoms = json::array();
      if (!c.set.empty())
        for (const GrassmannAtom& a : grassmann_boundary_class(c.set)) {
          json aj;
          aj["line"] = a.line_side == Side::Plus ? "L+" : "L-";
          aj["plane_of_sheets"] = a.plane_sheets;
          aj["conormal_sum"] = a.conormal_sum.str();
          atoms.push_back(aj);
        }
      sj["grassmann_atoms"] = atoms;
      sets.push_back(sj);
    }
    (*exact_report)["boundary_free_sets"] = sets;
    (*exact_report)["conclusion"] = rep.conclusion;
  }
  return suite;
}

VerifyResult verify_all(const RunConfig& config) {
  VerifyResult out;
  const ScalarField field{BumpSpec::by_name(config.bump_name)};

  out.suites.push_back(run_identity_suite());
  out.suites.push_back(run_bump_suite(field.bump()));
  if (out.suites.back().pass()) {
    // The remaining suites assume a compliant bump.
    std::vector<ResidualRecord> records;
    out.suites.push_back(
        run_derivative_suite(field, 1000, config.seed, config.tol_scale));
    out.suites.push_back(
        run_sheet_boundary_suite(field, config.level, config.tol_scale, &records));
    out.suites.push_back(run_cancellation_suite(field, config.level, config.tol_scale, &records));
    out.suites.push_back(run_nonzero_boundary_suite(field, config.level, config.tol_scale));
    json exact;
    out.suites.push_back(run_enumeration_suite(&exact));

    json residuals = json::array();
    for (const ResidualRecord& r : records) residuals.push_back(r.to_json());
    out.report["residual_records"] = std::move(residuals);
    out.report["enumeration"] = std::move(exact);
  }

  out.pass = true;
  json suites = json::array();
  for (const SuiteResult& s : out.suites) {
    suites.push_back(s.to_json());
    if (!s.pass() && out.first_failure.empty())
      out.first_failure = s.name + ": " + s.first_failure()->name;
    out.pass = out.pass && s.pass();
  }
  json full;
  full["library"] = "varcheck";
  full["version"] = library_version();
  full["config"] = config.to_json();
  full["pass"] = out.pass;
  full["suites"] = std::move(suites);
  for (auto& [k, v] : out.report.items()) full[k] = v;
  out.report = std::move(full);
  return out;
}

ConvergenceResult convergence_study(const RunConfig& config, const std::vector<int>& levels) {
  ConvergenceResult out;
  const ScalarField field{BumpSpec::by_name(config.bump_name)};
  const auto battery = standard_battery();
  const auto phi0 = battery.front();

  std::ostringstream csv;
  csv << "level,max_residual,cancellation,cutoff_eps,cutoff_norm\n";
  for (int level : levels) {
    const QuadratureGrid grid = QuadratureGrid::for_level(level, 4.0);
    ConvergenceRow row;
    row.level = level;
    for (int i = 1; i <= 6; ++i) {
      const Selection w = HalfSheetSet::full_sheet(i);
      for (const auto& phi : battery) {
        const Vec3 b = curvature_residual(field, w, *phi, grid);
        const Vec3 cf = boundary_closed_form(w, *phi);
        row.max_residual = std::max(row.max_residual, (b - cf).norm());
      }
    }
    for (const auto& phi : battery)
      row.cancellation = std::max(
          row.cancellation,
          curvature_residual(field, HalfSheetSet::all(), *phi, grid).norm());
    const double eps = std::ldexp(1.0, -level);
    const auto rows = cutoff_study(field, HalfSheetSet::full_sheet(1), *phi0, {eps}, level);
    row.cutoff_norm = rows.front().norm;
    out.rows.push_back(row);
    csv << level << "," << row.max_residual << "," << row.cancellation << "," << eps << ","
        << row.cutoff_norm << "\n";
  }
  out.monotone_tail = true;
  if (out.rows.size() >= 2) {
    const auto& last = out.rows[out.rows.size() - 1];
    const auto& prev = out.rows[out.rows.size() - 2];
    out.monotone_tail = last.max_residual < prev.max_residual;
  }
  out.csv = csv.str();
  return out;
}

}  // namespace varcheck
