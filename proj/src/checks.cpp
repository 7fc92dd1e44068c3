#include "bquant/checks.hpp"

#include "bquant/errors.hpp"
#include "bquant/lattice.hpp"

namespace bquant {

CheckReport CheckReport::pass(std::string name, std::string message) {
  return {std::move(name), true, std::nullopt, std::move(message)};
}

CheckReport CheckReport::fail(std::string name, Witness witness, std::string message) {
  return {std::move(name), false, std::move(witness), std::move(message)};
}

std::string witness_text(const Witness& w) {
  struct Visitor {
    std::string operator()(std::size_t i) const { return "index=" + std::to_string(i); }
    std::string operator()(const IntVector& v) const { return to_string(v); }
    std::string operator()(const RatVector& v) const { return to_string(v); }
    std::string operator()(const ComponentRay& cr) const {
      return "component=" + std::to_string(cr.component) + " ray=" + to_string(cr.ray);
    }
    std::string operator()(const std::string& s) const { return s; }
  };
  return std::visit(Visitor{}, w);
}

std::string to_line(const CheckReport& r) {
  std::string line = r.name + (r.passed ? " PASS" : " FAIL");
  if (!r.passed && r.witness) line += " " + witness_text(*r.witness);
  return line;
}

nlohmann::ordered_json to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["check"] = r.name;
  j["passed"] = r.passed;
  if (r.witness) {
    struct Visitor {
      nlohmann::ordered_json operator()(std::size_t i) const { return {{"index", i}}; }
      nlohmann::ordered_json operator()(const IntVector& v) const { return {{"vector", to_string(v)}}; }
      nlohmann::ordered_json operator()(const RatVector& v) const { return {{"point", to_string(v)}}; }
      nlohmann::ordered_json operator()(const ComponentRay& cr) const {
        return {{"component", cr.component}, {"ray", to_string(cr.ray)}};
      }
      nlohmann::ordered_json operator()(const std::string& s) const { return {{"text", s}}; }
    };
    j["witness"] = std::visit(Visitor{}, *r.witness);
  } else {
    j["witness"] = nullptr;
  }
  j["message"] = r.message;
  return j;
}

namespace {

bool is_zero(const IntVector& v) { return content(v) == 0; }

std::optional<RatVector> bounded_non_integral(const LatticePolyhedron& p) {
  if (is_empty(p) || !is_bounded(p)) return std::nullopt;
  return non_integral_vertex(p);
}

}  // namespace

CheckReport check_modular_dichotomy(const BSpaceDescription& d) {
  const char* name = check_names::modular_dichotomy;
  std::size_t zeros = 0;
  std::optional<std::size_t> first_zero;
  for (std::size_t i = 0; i < d.hypersurfaces.size(); ++i) {
    if (is_zero(d.hypersurfaces[i].modular_weight)) {
      ++zeros;
      if (!first_zero) first_zero = i;
    }
  }
  if (zeros == 0) return CheckReport::pass(name, "all modular weights are nonzero");
  if (zeros == d.hypersurfaces.size())
    return CheckReport::fail(name, *first_zero,
                             "all modular weights are zero; by the modular weight dichotomy theorem this is the "
                             "zero case, for which Q(M) is not defined");
  return CheckReport::fail(name, *first_zero,
                           "modular weights are mixed zero/nonzero, which the modular weight dichotomy theorem "
                           "rules out for any b-symplectic manifold");
}

CheckReport check_gamma_integrality(const Description& d) {
  const char* name = check_names::gamma_integrality;
  if (const auto* m = std::get_if<CompactToricSpace>(&d)) {
    if (auto v = bounded_non_integral(m->polytope))
      return CheckReport::fail(name, *v, "moment polytope has a non-integral vertex");
    return CheckReport::pass(name);
  }
  const auto& b = std::get<BSpaceDescription>(d);
  for (std::size_t i = 0; i < b.hypersurfaces.size(); ++i) {
    if (auto v = bounded_non_integral(b.hypersurfaces[i].leaf))
      return CheckReport::fail(name, *v, "leaf polytope of hypersurface " + std::to_string(i) +
                                             " has a non-integral vertex");
  }
  for (std::size_t j = 0; j < b.components.size(); ++j) {
    if (auto v = bounded_non_integral(b.components[j].polyhedron))
      return CheckReport::fail(name, *v, "bounded component " + std::to_string(j) + " has a non-integral vertex");
  }
  return CheckReport::pass(name);
}

CheckReport check_mu_integrality(const BSpaceDescription& d) {
  const char* name = check_names::mu_integrality;
  for (std::size_t i = 0; i < d.hypersurfaces.size(); ++i) {
    const auto& h = d.hypersurfaces[i];
    if (!is_primitive(h.modular_weight))
      return CheckReport::fail(name, h.modular_weight,
                               "modular weight of hypersurface " + std::to_string(i) + " is not primitive");
    const Integer pairing = h.modular_weight.dot(h.splitting);
    if (pairing != 1)
      return CheckReport::fail(name, h.splitting,
                               "splitting of hypersurface " + std::to_string(i) + " pairs to " + pairing.str() +
                                   " with the modular weight");
  }
  return CheckReport::pass(name);
}

CheckReport check_properness(const BSpaceDescription& d) {
  const char* name = check_names::properness;
  for (std::size_t j = 0; j < d.components.size(); ++j) {
    const auto& p = d.components[j].polyhedron;
    if (is_empty(p)) continue;
    for (const auto& ray : recession_rays(p)) {
      bool matched = false;
      for (const auto& h : d.hypersurfaces) {
        if (h.positive_side != j && h.negative_side != j) continue;
        if (is_zero(h.modular_weight)) continue;
        if (equal(IntVector(-primitive(h.modular_weight)), ray.direction)) matched = true;
      }
      if (!matched)
        return CheckReport::fail(name, ComponentRay{j, ray.direction},
                                 "component " + std::to_string(j) + " escapes along " + to_string(ray.direction) +
                                     " with no hypersurface end there");
    }
  }
  return CheckReport::pass(name);
}

}  // namespace bquant
