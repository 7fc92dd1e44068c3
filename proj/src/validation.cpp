#include "bquant/validation.hpp"

#include "bquant/errors.hpp"
#include "bquant/lattice.hpp"

#include <algorithm>

namespace bquant {

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& r) { return r.passed; });
}

const CheckReport* ValidationReport::find(std::string_view name) const {
  for (const auto& r : checks)
    if (r.name == name) return &r;
  return nullptr;
}

std::string ValidationReport::to_text() const {
  std::string out;
  for (const auto& r : checks) out += to_line(r) + "\n";
  return out;
}

nlohmann::ordered_json ValidationReport::to_json() const {
  nlohmann::ordered_json j;
  j["passed"] = passed();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : checks) j["checks"].push_back(bquant::to_json(r));
  return j;
}

namespace {

bool is_zero(const IntVector& v) { return content(v) == 0; }

std::optional<CheckReport> delzant_failure(const LatticePolyhedron& p, const std::string& what) {
  const char* name = check_names::delzant;
  if (is_empty(p)) return CheckReport::fail(name, what, what + " is empty");
  if (!is_bounded(p)) return CheckReport::fail(name, what, what + " is unbounded");
  if (auto v = delzant_violation(p)) return CheckReport::fail(name, *v, what + " is not Delzant at this vertex");
  return std::nullopt;
}

/// Incidences (hypersurface index) of component j, one entry per side.
std::vector<std::size_t> incidences(const BSpaceDescription& d, std::size_t j) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < d.hypersurfaces.size(); ++i) {
    if (d.hypersurfaces[i].positive_side == j) out.push_back(i);
    if (d.hypersurfaces[i].negative_side == j) out.push_back(i);
  }
  return out;
}

struct EndGeometry {
  LatticePolyhedron tail;
  RatVector translate;  // leaf coordinates
};

/// Analyzes one end; returns the failure message, or the geometry.
std::variant<std::string, EndGeometry> analyze_end(const BSpaceDescription& d, std::size_t i, std::size_t j,
                                                   const Integer& s0) {
  const auto& h = d.hypersurfaces[i];
  const Index n = d.rank;
  const IntVector dir = primitive(h.modular_weight);
  const Integer pairing = dir.dot(h.splitting);
  const LatticePolyhedron& p = d.components[j].polyhedron;
  const std::string where = "hypersurface " + std::to_string(i) + ", component " + std::to_string(j);

  LatticePolyhedron tail = tail_region(p, h.splitting, s0);
  if (is_empty(tail)) return where + ": no tail beyond s0 = " + s0.str();

  // Sweep of the level set <x, X> = -s0 along -dir.
  const RatVector x_vec = h.splitting.cast<Rational>();
  std::vector<std::pair<RatVector, Rational>> sweep_rows;
  std::vector<std::pair<RatVector, Rational>> section_rows;
  const IntMatrix basis = leaf_basis(h.splitting);
  sweep_rows.emplace_back(x_vec, Rational(-s0));
  for (const auto& row : p.inequalities()) {
    const Rational slope = Rational(row.normal.dot(dir)) / Rational(pairing);
    sweep_rows.emplace_back(RatVector(row.normal.cast<Rational>() - slope * x_vec), row.bound + slope * Rational(s0));
    const IntVector leaf_normal = basis.transpose() * row.normal;
    section_rows.emplace_back(leaf_normal.cast<Rational>(), row.bound + slope * Rational(s0));
  }
  if (!equivalent(tail, LatticePolyhedron::from_rational(n, sweep_rows)))
    return where + ": not a product beyond s0 = " + s0.str();

  const auto section = LatticePolyhedron::from_rational(n - 1, section_rows);
  if (is_empty(section) || !is_bounded(section)) return where + ": cross-section is not a polytope";
  if (is_empty(h.leaf) || !is_bounded(h.leaf)) return where + ": leaf polytope is not a polytope";

  const RatVector shift = vertices(section).front() - vertices(h.leaf).front();
  for (Index k = 0; k < shift.size(); ++k)
    if (!is_integer(shift(k))) return where + ": cross-section is a non-lattice translate of the leaf";
  if (!equivalent(section, translate(h.leaf, shift)))
    return where + ": cross-section is not a translate of the leaf polytope";
  return EndGeometry{std::move(tail), shift};
}

}  // namespace

CheckReport check_compactness(const CompactToricSpace& m) {
  const char* name = check_names::compactness;
  if (is_empty(m.polytope)) return CheckReport::fail(name, std::string("empty polytope"), "moment polytope is empty");
  const auto rays = recession_rays(m.polytope);
  if (!rays.empty()) return CheckReport::fail(name, rays.front().direction, "moment polytope is unbounded");
  return CheckReport::pass(name);
}

CheckReport check_delzant(const Description& d) {
  if (const auto* m = std::get_if<CompactToricSpace>(&d)) {
    if (auto f = delzant_failure(m->polytope, "moment polytope")) return *f;
    return CheckReport::pass(check_names::delzant);
  }
  const auto& b = std::get<BSpaceDescription>(d);
  for (std::size_t i = 0; i < b.hypersurfaces.size(); ++i) {
    if (auto f = delzant_failure(b.hypersurfaces[i].leaf, "leaf polytope of hypersurface " + std::to_string(i)))
      return *f;
  }
  for (std::size_t j = 0; j < b.components.size(); ++j) {
    const auto& p = b.components[j].polyhedron;
    if (is_empty(p) || !is_bounded(p)) continue;
    if (auto f = delzant_failure(p, "bounded component " + std::to_string(j))) return *f;
  }
  return CheckReport::pass(check_names::delzant);
}

CheckReport check_orientation(const BSpaceDescription& d) {
  const char* name = check_names::orientation;
  for (std::size_t i = 0; i < d.hypersurfaces.size(); ++i) {
    const auto& h = d.hypersurfaces[i];
    if (h.positive_side == h.negative_side)
      return CheckReport::fail(name, i, "hypersurface " + std::to_string(i) + " has the same component on both sides");
    if (d.components[h.positive_side].sign == d.components[h.negative_side].sign)
      return CheckReport::fail(name, i, "components adjacent across hypersurface " + std::to_string(i) +
                                            " carry the same orientation");
  }
  return CheckReport::pass(name);
}

CheckReport check_end_matching(const BSpaceDescription& d) {
  const char* name = check_names::end_matching;
  for (std::size_t j = 0; j < d.components.size(); ++j) {
    const auto ends = incidences(d, j);
    if (ends.empty()) continue;
    if (is_empty(d.components[j].polyhedron))
      return CheckReport::fail(name, j, "component " + std::to_string(j) + " is empty but adjacent to a hypersurface");
    const auto rays = recession_rays(d.components[j].polyhedron);
    std::vector<IntVector> claimed;
    for (std::size_t i : ends) {
      const auto& v = d.hypersurfaces[i].modular_weight;
      if (is_zero(v)) continue;
      const IntVector expected = -primitive(v);
      const bool present = std::any_of(rays.begin(), rays.end(),
                                       [&](const RecessionRay& r) { return equal(r.direction, expected); });
      if (!present)
        return CheckReport::fail(name, ComponentRay{j, expected},
                                 "hypersurface " + std::to_string(i) + " expects component " + std::to_string(j) +
                                     " to escape along this ray");
      const bool taken = std::any_of(claimed.begin(), claimed.end(),
                                     [&](const IntVector& c) { return equal(c, expected); });
      if (taken)
        return CheckReport::fail(name, ComponentRay{j, expected},
                                 "two hypersurface ends of component " + std::to_string(j) + " claim the same ray");
      claimed.push_back(expected);
    }
  }
  return CheckReport::pass(name);
}

CheckReport check_tail_product(const BSpaceDescription& d) {
  const char* name = check_names::tail_product;
  std::vector<std::vector<std::pair<std::size_t, LatticePolyhedron>>> tails_by_component(d.components.size());

  for (std::size_t i = 0; i < d.hypersurfaces.size(); ++i) {
    const auto& h = d.hypersurfaces[i];
    if (is_zero(h.modular_weight))
      return CheckReport::fail(name, i, "hypersurface " + std::to_string(i) + " has no escape direction");
    if (primitive(h.modular_weight).dot(h.splitting) == 0)
      return CheckReport::fail(name, i, "splitting of hypersurface " + std::to_string(i) +
                                            " is tangent to the leaves");
    const Integer s0 = tail_threshold(d, i);
    std::vector<EndGeometry> sides;
    for (std::size_t j : {h.positive_side, h.negative_side}) {
      auto result = analyze_end(d, i, j, s0);
      if (auto* message = std::get_if<std::string>(&result)) return CheckReport::fail(name, i, *message);
      sides.push_back(std::get<EndGeometry>(std::move(result)));
      tails_by_component[j].emplace_back(i, sides.back().tail);
    }
    if (!equal(sides[0].translate, sides[1].translate) || !equivalent(sides[0].tail, sides[1].tail))
      return CheckReport::fail(name, i, "tails at hypersurface " + std::to_string(i) + " are not the same translate");
  }

  for (std::size_t j = 0; j < tails_by_component.size(); ++j) {
    const auto& tails = tails_by_component[j];
    for (std::size_t a = 0; a < tails.size(); ++a) {
      for (std::size_t b = a + 1; b < tails.size(); ++b) {
        if (!is_empty(intersect(tails[a].second, tails[b].second)))
          return CheckReport::fail(name, ComponentRay{j, IntVector(-primitive(d.hypersurfaces[tails[b].first].modular_weight))},
                                   "tails of component " + std::to_string(j) + " at hypersurfaces " +
                                       std::to_string(tails[a].first) + " and " + std::to_string(tails[b].first) +
                                       " overlap");
      }
    }
  }
  return CheckReport::pass(name);
}

ValidationReport validate_description(const Description& d) {
  ValidationReport report;
  if (const auto* m = std::get_if<CompactToricSpace>(&d)) {
    report.checks.push_back(check_compactness(*m));
    report.checks.push_back(check_gamma_integrality(d));
    report.checks.push_back(check_delzant(d));
    return report;
  }
  const auto& b = std::get<BSpaceDescription>(d);
  report.checks.push_back(check_modular_dichotomy(b));
  report.checks.push_back(check_mu_integrality(b));
  report.checks.push_back(check_gamma_integrality(d));
  report.checks.push_back(check_properness(b));
  report.checks.push_back(check_delzant(d));
  report.checks.push_back(check_orientation(b));
  report.checks.push_back(check_end_matching(b));
  report.checks.push_back(check_tail_product(b));
  return report;
}

void require_valid(const Description& d) {
  const auto report = validate_description(d);
  if (report.passed()) return;
  std::string what = "description failed validation:";
  for (const auto& r : report.checks) {
    if (!r.passed) what += "\n  " + to_line(r) + " (" + r.message + ")";
  }
  throw NotValidated(what);
}

LocalModel local_model(const BSpaceDescription& d, std::size_t hypersurface) {
  if (hypersurface >= d.hypersurfaces.size())
    throw IndexOutOfRange("hypersurface index " + std::to_string(hypersurface) + " out of range (" +
                          std::to_string(d.hypersurfaces.size()) + " hypersurfaces)");
  require_valid(d);
  const auto& h = d.hypersurfaces[hypersurface];
  LocalModel lm;
  lm.hypersurface = hypersurface;
  lm.splitting = h.splitting;
  lm.threshold = tail_threshold(d, hypersurface);
  auto side = [&](std::size_t j) {
    return SignedTail{d.components[j].sign, j, tail_region(d.components[j].polyhedron, h.splitting, lm.threshold)};
  };
  lm.positive = side(h.positive_side);
  lm.negative = side(h.negative_side);
  return lm;
}

}  // namespace bquant
