#include "varcheck/conormal_table.hpp"

#include <sstream>

namespace varcheck {

namespace {

QSqrt3 half() { return QSqrt3::rational(1, 2); }
QSqrt3 sqrt3_half() { return QSqrt3::sqrt3_times(1, 2); }

ExactVec3 basis(int i) {
  ExactVec3 v;
  v[i] = QSqrt3(1);
  return v;
}

/// Projection onto span{u, e2} for a unit u orthogonal to e2:
/// P = u u^T + e2 e2^T.
ExactMat3 plane_through(const ExactVec3& u) {
  ExactMat3 p;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) p(i, j) = u[i] * u[j];
  p(1, 1) = p(1, 1) + QSqrt3(1);
  return p;
}

}  // namespace

const ExactMat3& rotation_matrix() {
  static const ExactMat3 rho = [] {
    ExactMat3 m;
    m(0, 0) = -half();
    m(0, 2) = -sqrt3_half();
    m(1, 1) = QSqrt3(1);
    m(2, 0) = sqrt3_half();
    m(2, 2) = -half();
    return m;
  }();
  return rho;
}

const ExactMat3& reflection_matrix() {
  static const ExactMat3 sigma = [] {
    ExactMat3 m;
    m(0, 0) = QSqrt3(1);
    m(1, 1) = QSqrt3(-1);
    m(2, 2) = QSqrt3(1);
    return m;
  }();
  return sigma;
}

ExactVec3 rot_apply(const ExactVec3& v) { return rotation_matrix() * v; }
ExactVec3 refl_apply(const ExactVec3& v) { return reflection_matrix() * v; }

ConormalTable::ConormalTable() {
  const int P = side_index(Side::Plus);
  const int M = side_index(Side::Minus);

  nu_[0][P] = ExactVec3(sqrt3_half(), 0, half());
  nu_[0][M] = ExactVec3(sqrt3_half(), 0, -half());
  nu_[1][P] = ExactVec3(sqrt3_half(), 0, -half());
  nu_[1][M] = ExactVec3(sqrt3_half(), 0, half());

  // eta_1^+ = (1/sqrt(7)) (0, sqrt(3), 2), the rewritten form of
  // sqrt(3/7) (0, 1, 2/sqrt(3)).
  eta_[0][P] = ExactVec3(0, QSqrt3::sqrt3_times(1, 1), QSqrt3(2), Scale::InvSqrt7);
  eta_[0][M] = -eta_[0][P];
  eta_[1][P] = ExactVec3(0, QSqrt3::sqrt3_times(1, 1), QSqrt3(-2), Scale::InvSqrt7);
  eta_[1][M] = -eta_[1][P];

  for (int i = 2; i < 6; ++i)
    for (int s : {P, M}) {
      nu_[i][s] = rot_apply(nu_[i - 2][s]);
      eta_[i][s] = rot_apply(eta_[i - 2][s]);
    }

  ray_[0] = basis(0);
  ray_[1] = rot_apply(ray_[0]);
  ray_[2] = rot_apply(ray_[1]);

  for (int i = 0; i < 6; ++i)
    for (int s : {P, M}) plane_[i][s] = plane_through(nu_[i][s]);
}

const ConormalTable& ConormalTable::instance() {
  static const ConormalTable table;
  return table;
}

const ExactVec3& ConormalTable::nu(int i, Side s) const { return nu_[i - 1][side_index(s)]; }
const ExactVec3& ConormalTable::eta(int i, Side s) const { return eta_[i - 1][side_index(s)]; }
const ExactVec3& ConormalTable::ray(int k) const { return ray_[k - 1]; }
const ExactMat3& ConormalTable::plane(int i, Side s) const {
  return plane_[i - 1][side_index(s)];
}

namespace {

void expect(IdentityReport& rep, bool ok, const std::string& name) {
  ++rep.checks;
  if (!ok) rep.failures.push_back(name);
}

}  // namespace

IdentityReport verify_identities() {
  IdentityReport rep;
  const auto& tab = ConormalTable::instance();

  // Pairwise cancellations and the matching plane equalities.
  struct Pair {
    int i, j;
    Side s;
  };
  const Pair pairs[] = {{1, 6, Side::Plus},  {3, 2, Side::Plus},  {5, 4, Side::Plus},
                        {1, 4, Side::Minus}, {3, 6, Side::Minus}, {5, 2, Side::Minus}};
  for (const auto& p : pairs) {
    const char sc = p.s == Side::Plus ? '+' : '-';
    std::ostringstream tag;
    tag << "nu_" << p.i << "^" << sc << " + nu_" << p.j << "^" << sc << " = 0";
    expect(rep, (tab.nu(p.i, p.s) + tab.nu(p.j, p.s)).is_zero(), tag.str());
    std::ostringstream ptag;
    ptag << "P_" << p.i << "^" << sc << " = P_" << p.j << "^" << sc;
    expect(rep, tab.plane(p.i, p.s) == tab.plane(p.j, p.s), ptag.str());
  }

  // Triple sums on both sides.
  for (Side s : {Side::Plus, Side::Minus}) {
    const char sc = s == Side::Plus ? '+' : '-';
    expect(rep, (tab.nu(1, s) + tab.nu(3, s) + tab.nu(5, s)).is_zero(),
           std::string("nu_1+nu_3+nu_5 = 0 on side ") + sc);
    expect(rep, (tab.nu(2, s) + tab.nu(4, s) + tab.nu(6, s)).is_zero(),
           std::string("nu_2+nu_4+nu_6 = 0 on side ") + sc);
  }

  for (int i = 1; i <= 6; ++i) {
    std::ostringstream tag;
    tag << "eta_" << i << "^+ = -eta_" << i << "^-";
    expect(rep, (tab.eta(i, Side::Plus) + tab.eta(i, Side::Minus)).is_zero(), tag.str());
  }

  // Unit norms (exactly, in the field).
  for (int i = 1; i <= 6; ++i)
    for (Side s : {Side::Plus, Side::Minus}) {
      expect(rep, tab.nu(i, s).is_unit(), "nu unit norm");
      expect(rep, tab.eta(i, s).is_unit(), "eta unit norm");
    }
  for (int k = 1; k <= 3; ++k) expect(rep, tab.ray(k).is_unit(), "ray unit norm");

  // Projection algebra: P^2 = P, P^T = P, trace 2.
  for (int i = 1; i <= 6; ++i)
    for (Side s : {Side::Plus, Side::Minus}) {
      const ExactMat3& P = tab.plane(i, s);
      expect(rep, P * P == P, "plane idempotent");
      expect(rep, P.transposed() == P, "plane symmetric");
      expect(rep, P.trace() == QSqrt3(2), "plane trace 2");
    }

  // Rotation structure of the recursive definitions.
  for (int i = 3; i <= 6; ++i)
    for (Side s : {Side::Plus, Side::Minus}) {
      expect(rep, tab.nu(i, s) == rot_apply(tab.nu(i - 2, s)), "nu rotation recursion");
      expect(rep, tab.eta(i, s) == rot_apply(tab.eta(i - 2, s)), "eta rotation recursion");
    }
  expect(rep, tab.ray(2) == rot_apply(tab.ray(1)), "t_2 = rho(t_1)");
  expect(rep, tab.ray(3) == rot_apply(tab.ray(2)), "t_3 = rho(t_2)");
  expect(rep, rot_apply(tab.ray(3)) == tab.ray(1), "rho has order 3 on rays");

  return rep;
}

}  // namespace varcheck
