#pragma once

#include "bquant/scalar.hpp"
#include "bquant/weight.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bquant {

/// The closed half-space { x : <normal, x> <= bound }.
struct Inequality {
  IntVector normal;
  Rational bound;
};

/// Primitive integer direction of an unbounded edge of a polyhedron.
struct RecessionRay {
  IntVector direction;

  friend bool operator==(const RecessionRay& a, const RecessionRay& b) {
    return equal(a.direction, b.direction);
  }
  friend bool operator<(const RecessionRay& a, const RecessionRay& b) {
    return lex_less(a.direction, b.direction);
  }
};

/// A closed rational polyhedron in H-representation with primitive integer
/// normals. Construction scales every normal to be primitive, merges
/// inequalities sharing a normal (keeping the tighter bound) and sorts them,
/// so two polyhedra built from reordered or duplicated lists compare equal
/// structurally.
class LatticePolyhedron {
 public:
  /// Throws InvalidPolyhedron on a zero normal or a normal of the wrong length.
  LatticePolyhedron(Index rank, std::vector<Inequality> inequalities);

  /// Rows with rational normals. Zero rows are allowed here: vacuous ones are
  /// dropped and a contradictory one yields the canonical empty polyhedron.
  static LatticePolyhedron from_rational(Index rank,
                                         const std::vector<std::pair<RatVector, Rational>>& rows);
  static LatticePolyhedron whole_space(Index rank) { return LatticePolyhedron(rank, {}); }
  /// The box lo <= x <= hi.
  static LatticePolyhedron box(const IntVector& lo, const IntVector& hi);
  static LatticePolyhedron half_space(const IntVector& normal, const Rational& bound);

  Index rank() const { return rank_; }
  const std::vector<Inequality>& inequalities() const { return inequalities_; }
  /// True when construction met a constraint 0 <= b with b < 0.
  bool trivially_empty() const { return infeasible_; }

  bool contains(const RatVector& x) const;
  bool contains(const Weight& w) const;

  friend bool operator==(const LatticePolyhedron& a, const LatticePolyhedron& b);

 private:
  LatticePolyhedron() = default;
  void canonicalize();

  Index rank_ = 0;
  std::vector<Inequality> inequalities_;
  std::vector<Integer> lattice_bounds_;  // floor(bound), for integer points
  bool infeasible_ = false;
};

/// Minkowski-Weyl data: P = conv(points) + cone(rays) + span(lineality).
/// `points` are the vertices of P intersected with the orthogonal complement
/// of its lineality space; it is empty exactly when P is empty.
struct Generators {
  std::vector<RatVector> points;
  std::vector<RatVector> rays;
  std::vector<RatVector> lineality;
};

Generators generators(const LatticePolyhedron& p);

bool is_empty(const LatticePolyhedron& p);
/// The empty set counts as bounded.
bool is_bounded(const LatticePolyhedron& p);
/// Affine dimension; -1 for the empty set.
Index dimension(const LatticePolyhedron& p);

bool contains_point(const LatticePolyhedron& p, const RatVector& x);

/// Integer points in lexicographic order. Throws UnboundedPolyhedron.
std::vector<Weight> lattice_points(const LatticePolyhedron& p);

/// Vertices in lexicographic order; empty when P contains a line.
/// Throws EmptyPolyhedron.
std::vector<RatVector> vertices(const LatticePolyhedron& p);

/// Extreme rays of the recession cone. A lineality direction l contributes
/// both l and -l. Throws EmptyPolyhedron.
std::vector<RecessionRay> recession_rays(const LatticePolyhedron& p);

/// Every vertex lies on exactly rank() facets whose normals form a basis of
/// Z^n. A single point is accepted as the degenerate case.
/// Throws EmptyPolyhedron, NoVertices.
bool is_delzant(const LatticePolyhedron& p);
/// First vertex violating the Delzant condition, if any.
std::optional<RatVector> delzant_violation(const LatticePolyhedron& p);

/// Throws UnboundedPolyhedron, EmptyPolyhedron.
bool is_lattice_polytope(const LatticePolyhedron& p);
/// First vertex with a non-integer coordinate, if any.
std::optional<RatVector> non_integral_vertex(const LatticePolyhedron& p);

LatticePolyhedron product(const LatticePolyhedron& p, const LatticePolyhedron& q);
LatticePolyhedron translate(const LatticePolyhedron& p, const RatVector& v);
LatticePolyhedron intersect(const LatticePolyhedron& p, const LatticePolyhedron& q);
/// The image { U x + shift : x in P } under a unimodular U.
LatticePolyhedron unimodular_image(const LatticePolyhedron& p, const IntMatrix& u,
                                   const RatVector& shift);

/// inner is a subset of outer.
bool includes(const LatticePolyhedron& outer, const LatticePolyhedron& inner);
/// Set equality, decided by double inclusion.
bool equivalent(const LatticePolyhedron& p, const LatticePolyhedron& q);

/// "{ (1, 0).x <= 2 ; (-1, 0).x <= 0 }"
std::string to_string(const LatticePolyhedron& p);

}  // namespace bquant
