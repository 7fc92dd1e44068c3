#pragma once

// The integrality and modular-weight hypotheses as named, reportable
// predicates. Each check is pure; a failing report always carries a witness.

#include "bquant/description.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>

namespace bquant {

struct ComponentRay {
  std::size_t component;
  IntVector ray;
};

/// A hypersurface or component index, a lattice vector, a rational point,
/// a (component, ray) pair, or free text.
using Witness = std::variant<std::size_t, IntVector, RatVector, ComponentRay, std::string>;

struct CheckReport {
  std::string name;
  bool passed = false;
  std::optional<Witness> witness;
  std::string message;

  static CheckReport pass(std::string name, std::string message = {});
  static CheckReport fail(std::string name, Witness witness, std::string message);
};

namespace check_names {
inline constexpr const char* modular_dichotomy = "modular-dichotomy";
inline constexpr const char* gamma_integrality = "gamma-integrality";
inline constexpr const char* mu_integrality = "mu-integrality";
inline constexpr const char* properness = "properness";
inline constexpr const char* delzant = "delzant";
inline constexpr const char* orientation = "orientation";
inline constexpr const char* end_matching = "end-matching";
inline constexpr const char* tail_product = "tail-product";
inline constexpr const char* compactness = "compactness";
}  // namespace check_names

std::string witness_text(const Witness& w);
/// "NAME PASS" or "NAME FAIL <witness>".
std::string to_line(const CheckReport& r);
nlohmann::ordered_json to_json(const CheckReport& r);

/// Modular weights must be nonzero for every hypersurface. All-zero input and
/// mixed input fail with distinct messages; the latter cannot come from a
/// b-symplectic manifold at all.
CheckReport check_modular_dichotomy(const BSpaceDescription& d);

/// Every compact polytope (the moment polytope, each leaf polytope, each
/// bounded component) has integer vertices.
CheckReport check_gamma_integrality(const Description& d);

/// Every modular weight is primitive and pairs to 1 with its splitting.
CheckReport check_mu_integrality(const BSpaceDescription& d);

/// Every recession ray of every component is the escape direction -v_i of
/// an adjacent hypersurface with nonzero modular weight.
CheckReport check_properness(const BSpaceDescription& d);

}  // namespace bquant
