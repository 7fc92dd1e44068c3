#pragma once

// Combinatorial models of toric and b-toric Hamiltonian T-spaces.
//
// A compact toric space is its moment polytope. A b-toric space is described
// by the moment images of the components of M - Z, each with the orientation
// sign induced by the b-symplectic form, together with one record per
// component Z_i of the degeneracy hypersurface. Near Z_i the moment map is
// (log|t|, phi_i): the coordinate <x, X_i> runs to -infinity and the image
// escapes along -v_i, where v_i is the modular weight.

#include "bquant/polyhedron.hpp"
#include "bquant/scalar.hpp"

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace bquant {

struct CompactToricSpace {
  Index rank = 0;
  LatticePolyhedron polytope = LatticePolyhedron::whole_space(0);
};

struct SignedComponent {
  int sign = 1;
  LatticePolyhedron polyhedron = LatticePolyhedron::whole_space(0);
};

struct HypersurfaceRecord {
  IntVector modular_weight;  // v in t*, expected primitive
  IntVector splitting;       // X in t with <v, X> = 1
  /// Moment polytope of the symplectic leaf, in the coordinates given by
  /// leaf_basis(splitting).
  LatticePolyhedron leaf = LatticePolyhedron::whole_space(0);
  std::size_t positive_side = 0;
  std::size_t negative_side = 0;
};

struct BSpaceDescription {
  Index rank = 0;
  std::vector<SignedComponent> components;
  std::vector<HypersurfaceRecord> hypersurfaces;
};

using Description = std::variant<CompactToricSpace, BSpaceDescription>;

inline Index rank_of(const Description& d) {
  return std::visit([](const auto& x) { return x.rank; }, d);
}

/// Reads a "bquant/1" document. Structural only: ranks, lengths, signs and
/// adjacency indices are checked, geometry is not. Throws ParseError.
Description parse_description(std::string_view text);
/// Throws IoError if the file cannot be read, ParseError otherwise.
Description load_description(const std::filesystem::path& path);

/// Canonical representative of X modulo the integer kernel of v: X is reduced
/// against the Hermite basis of ker_Z(v) so that every pivot coordinate lies in
/// [0, pivot). Throws PairingNotOne unless <v, X> = 1.
IntVector normalize_splitting(const IntVector& v, const IntVector& x);

/// Z-basis of the annihilator { x : <x, X> = 0 } as the columns of an
/// n x (n-1) matrix, in Hermite normal form. Leaf polytopes are written in
/// these coordinates: the leaf point u sits at leaf_basis(X) * u.
IntMatrix leaf_basis(const IntVector& splitting);

/// Z_i as S^1 x L. The return map of the mapping torus is recorded
/// explicitly; after normalizing the splitting it is always the identity.
struct MappingTorus {
  IntVector circle_generator;
  LatticePolyhedron leaf = LatticePolyhedron::whole_space(0);
  IntMatrix monodromy;

  std::string describe() const;
};

MappingTorus mapping_torus(const HypersurfaceRecord& h);

/// s0 = ceil(max |<p, X_i>|) + 1 over the generator points of both adjacent
/// components. Throws IndexOutOfRange.
Integer tail_threshold(const BSpaceDescription& d, std::size_t hypersurface);

/// P intersected with { <x, X> <= -s0 }.
LatticePolyhedron tail_region(const LatticePolyhedron& p, const IntVector& splitting, const Integer& threshold);

}  // namespace bquant
