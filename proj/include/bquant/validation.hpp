#pragma once

#include "bquant/checks.hpp"
#include "bquant/description.hpp"

#include <string>
#include <vector>

namespace bquant {

struct ValidationReport {
  std::vector<CheckReport> checks;

  bool passed() const;
  /// Null when no check of that name ran.
  const CheckReport* find(std::string_view name) const;
  /// One line per check, in order.
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

/// Runs every check that applies to the description kind. Never throws on
/// geometric failures; they are report entries.
///
/// compact_toric: compactness, gamma-integrality, delzant.
/// b_toric: modular-dichotomy, mu-integrality, gamma-integrality, properness,
///          delzant, orientation, end-matching, tail-product.
ValidationReport validate_description(const Description& d);

/// Throws NotValidated listing the failed checks.
void require_valid(const Description& d);

// Structural checks, also run by validate_description.

/// Moment polytope bounded and nonempty.
CheckReport check_compactness(const CompactToricSpace& m);
/// Every compact polytope of the description (including each leaf) is Delzant.
CheckReport check_delzant(const Description& d);
/// Adjacent components are distinct and carry opposite signs.
CheckReport check_orientation(const BSpaceDescription& d);
/// Each (hypersurface, side) incidence claims one distinct recession ray of
/// its component, namely -v_i.
CheckReport check_end_matching(const BSpaceDescription& d);
/// Beyond the threshold s0 each adjacent component is the product of the
/// half-line along -v_i with a common lattice translate of the leaf polytope,
/// and distinct ends of one component do not overlap.
CheckReport check_tail_product(const BSpaceDescription& d);

struct SignedTail {
  int sign = 1;
  std::size_t component = 0;
  LatticePolyhedron tail = LatticePolyhedron::whole_space(0);
};

/// The two signed tails meeting at one hypersurface, cut at <x, X> <= -s0.
struct LocalModel {
  std::size_t hypersurface = 0;
  IntVector splitting;
  Integer threshold;
  SignedTail positive;
  SignedTail negative;
};

/// Throws IndexOutOfRange, NotValidated.
LocalModel local_model(const BSpaceDescription& d, std::size_t hypersurface);

}  // namespace bquant
