#include "varcheck/decomposition.hpp"

#include <sstream>
#include <stdexcept>

namespace varcheck {

BoundarySignature::BoundarySignature() {
  l_plus.scale = Scale::One;
  l_minus.scale = Scale::One;
  for (auto& r : ray) r.scale = Scale::InvSqrt7;
}

bool BoundarySignature::is_zero() const {
  return l_plus.is_zero() && l_minus.is_zero() && ray[0].is_zero() && ray[1].is_zero() &&
         ray[2].is_zero();
}

BoundarySignature operator+(const BoundarySignature& a, const BoundarySignature& b) {
  BoundarySignature r;
  r.l_plus = a.l_plus + b.l_plus;
  r.l_minus = a.l_minus + b.l_minus;
  for (int k = 0; k < 3; ++k) r.ray[k] = a.ray[k] + b.ray[k];
  return r;
}

bool operator==(const BoundarySignature& a, const BoundarySignature& b) {
  return a.l_plus == b.l_plus && a.l_minus == b.l_minus && a.ray[0] == b.ray[0] &&
         a.ray[1] == b.ray[1] && a.ray[2] == b.ray[2];
}

BoundarySignature boundary_signature(HalfSheetSet set) {
  const auto& tab = ConormalTable::instance();
  BoundarySignature sig;
  for (int i = 1; i <= 6; ++i) {
    const int k = ConormalTable::ray_of_sheet(i) - 1;
    if (set.contains(i, Side::Plus)) {
      sig.l_plus = sig.l_plus + tab.nu(i, Side::Plus);
      sig.ray[k] = sig.ray[k] + tab.eta(i, Side::Plus);
    }
    if (set.contains(i, Side::Minus)) {
      sig.l_minus = sig.l_minus + tab.nu(i, Side::Minus);
      sig.ray[k] = sig.ray[k] + tab.eta(i, Side::Minus);
    }
  }
  return sig;
}

std::vector<HalfSheetSet> enumerate_boundary_free() {
  std::vector<HalfSheetSet> out;
  for (std::uint16_t mask = 0; mask < 4096; ++mask) {
    const HalfSheetSet set{mask};
    if (boundary_signature(set).is_zero()) out.push_back(set);
  }
  return out;
}

std::vector<HalfSheetSet> components() {
  const std::vector<HalfSheetSet> free_sets = enumerate_boundary_free();
  std::vector<HalfSheetSet> minimal;
  for (const HalfSheetSet& s : free_sets) {
    if (s.empty()) continue;
    bool is_minimal = true;
    for (const HalfSheetSet& t : free_sets) {
      if (t.empty() || t == s) continue;
      if (t.subset_of(s)) {
        is_minimal = false;
        break;
      }
    }
    if (is_minimal) minimal.push_back(s);
  }
  // Partition check: pairwise disjoint and covering.  At the level of
  // half-sheet unions this is exactly the mass / total-variation additivity
  // a decomposition requires.
  std::uint16_t unions = 0;
  for (size_t i = 0; i < minimal.size(); ++i) {
    for (size_t j = i + 1; j < minimal.size(); ++j)
      if ((minimal[i] & minimal[j]).mask != 0)
        throw std::logic_error("components: minimal boundary-free sets overlap");
    unions |= minimal[i].mask;
  }
  if (HalfSheetSet{unions} != HalfSheetSet::all())
    throw std::logic_error("components: minimal boundary-free sets do not cover");
  return minimal;
}

std::vector<GrassmannAtom> grassmann_boundary_class(HalfSheetSet set) {
  if (!set.full_sheets_only())
    throw std::invalid_argument(
        "grassmann_boundary_class: selection contains unmatched half-sheets; its "
        "boundary also charges the rays T_k");
  const auto& tab = ConormalTable::instance();
  std::vector<GrassmannAtom> atoms;
  for (Side side : {Side::Plus, Side::Minus}) {
    for (int i = 1; i <= 6; ++i) {
      if (!set.contains(i, side)) continue;
      const ExactMat3& plane = tab.plane(i, side);
      bool merged = false;
      for (GrassmannAtom& atom : atoms) {
        if (atom.line_side == side && atom.plane == plane) {
          atom.conormal_sum = atom.conormal_sum + tab.nu(i, side);
          atom.plane_sheets.push_back(i);
          merged = true;
          break;
        }
      }
      if (!merged) {
        GrassmannAtom atom;
        atom.line_side = side;
        atom.plane = plane;
        atom.plane_sheets = {i};
        atom.conormal_sum = tab.nu(i, side);
        atoms.push_back(atom);
      }
    }
  }
  std::vector<GrassmannAtom> nonzero;
  for (GrassmannAtom& atom : atoms)
    if (!atom.conormal_sum.is_zero()) nonzero.push_back(std::move(atom));
  return nonzero;
}

ClassificationReport classification_report() {
  ClassificationReport rep;
  const std::vector<HalfSheetSet> free_sets = enumerate_boundary_free();
  rep.component_list = components();

  for (const HalfSheetSet& s : free_sets) {
    SetClassification c;
    c.set = s;
    c.boundary_free = true;
    c.component = false;
    for (const HalfSheetSet& m : rep.component_list)
      if (m == s) c.component = true;
    // Indecomposable iff no proper nonempty boundary-free subset exists.
    c.indecomposable = !s.empty();
    for (const HalfSheetSet& t : free_sets) {
      if (t.empty() || t == s) continue;
      if (t.subset_of(s)) c.indecomposable = false;
    }
    if (!s.empty()) {
      const auto atoms = grassmann_boundary_class(s);
      c.grassmann_atoms = static_cast<int>(atoms.size());
      c.curvature_no_boundary = atoms.empty();
    } else {
      c.curvature_no_boundary = true;
    }
    rep.sets.push_back(c);
  }

  const bool two_triples = rep.component_list.size() == 2 &&
                           ((rep.component_list[0] == HalfSheetSet::z1() &&
                             rep.component_list[1] == HalfSheetSet::z2()) ||
                            (rep.component_list[0] == HalfSheetSet::z2() &&
                             rep.component_list[1] == HalfSheetSet::z1()));
  bool v_clean = false, z_dirty = true;
  for (const SetClassification& c : rep.sets) {
    if (c.set == HalfSheetSet::all()) v_clean = c.curvature_no_boundary;
    if (c.set == HalfSheetSet::z1() || c.set == HalfSheetSet::z2())
      z_dirty = z_dirty && !c.curvature_no_boundary && c.indecomposable;
  }
  rep.unique_decomposition = two_triples;
  std::ostringstream os;
  if (two_triples && v_clean && z_dirty) {
    os << "components: Z1, Z2; unique decomposition. V is a curvature varifold "
          "without boundary; Z1 and Z2 are indecomposable and are not curvature "
          "varifolds without boundary.";
  } else {
    os << "UNEXPECTED classification: " << free_sets.size() << " boundary-free sets, "
       << rep.component_list.size() << " components.";
  }
  rep.conclusion = os.str();
  return rep;
}

}  // namespace varcheck
