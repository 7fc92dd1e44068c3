#pragma once

// Formal quantization of toric and b-toric descriptions.
//
// For a compact toric space Q(M) is the lattice-point character of the
// closed moment polytope. For a b-toric description the multiplicity of a
// weight is the signed count of component polyhedra containing it; the
// unbounded tails that meet at each hypersurface carry opposite signs and
// cancel, which is what makes the result finite.

#include "bquant/character.hpp"
#include "bquant/description.hpp"
#include "bquant/validation.hpp"

#include <optional>
#include <vector>

namespace bquant {

struct EngineOptions {
  /// Worker threads for box evaluations. Results do not depend on it.
  unsigned threads = 1;
};

/// Signed count of reduced spaces at one weight.
struct ReducedSpaceResult {
  Weight weight;
  Integer count;
  /// Per component: its sign if it contains the weight, else 0. A compact
  /// description has a single entry.
  std::vector<int> contributions;
};

/// Throws NotValidated.
VirtualCharacter quantize_compact_toric(const CompactToricSpace& m);

/// Pointwise evaluation. Assumes a validated description; throws DimensionError.
ReducedSpaceResult reduced_space_quantization(const Description& d, const Weight& alpha);

/// One hypersurface's pair of opposite tails, as indices into a PolyhedralCharacter.
struct MatchedEnd {
  std::size_t hypersurface = 0;
  std::size_t positive_term = 0;
  std::size_t negative_term = 0;
  IntVector splitting;
  Integer threshold;
};

using TailMatching = std::vector<MatchedEnd>;

PolyhedralCharacter polyhedral_character(const BSpaceDescription& d);
TailMatching tail_matching(const BSpaceDescription& d);

/// Removes each matched pair of tails beyond its threshold, enumerates the
/// bounded remainders and checks the result pointwise against `c` on a box
/// twice the extent of the remainders. Throws NotFinite when a term keeps an
/// unmatched tail, a matched pair does not cancel, or the self-check fails.
VirtualCharacter collapse_signed_tails(const PolyhedralCharacter& c, const TailMatching& ends,
                                       const EngineOptions& options = {});

/// Throws ZeroModularWeight, NotValidated, NotFinite.
VirtualCharacter quantize_b(const BSpaceDescription& d, const EngineOptions& options = {});

VirtualCharacter quantize(const Description& d, const EngineOptions& options = {});

/// First weight in [-2R, 2R]^n (R the support extent, at least 1) where `q`
/// differs from reduced_space_quantization.
std::optional<Weight> pointwise_disagreement(const Description& d, const VirtualCharacter& q,
                                             const EngineOptions& options = {});

/// Support weights lying on a facet hyperplane of a polyhedron containing them,
/// where the closed-membership convention decides the multiplicity.
std::vector<Weight> boundary_weights(const Description& d, const VirtualCharacter& q);

struct QrVerification {
  bool verified = false;
  Integer left;   // invariant part of Q(M) (x) Q(N)
  Integer right;  // signed lattice count of the zero fiber of the product moment image
  std::optional<Weight> first_mismatch;
};

/// Compares (Q(M) (x) Q(N))^T with Q((M x N)//_0 T). Throws DimensionError,
/// NotValidated.
QrVerification verify_qr_product(const Description& m, const CompactToricSpace& n,
                                 const EngineOptions& options = {});
/// Same, with Q(M) supplied by the caller (for example a cached result).
QrVerification verify_qr_product(const VirtualCharacter& qm, const Description& m, const CompactToricSpace& n);

/// Signed lattice count of the two tails over the window
/// -2 s0 <= <x, X> <= -s0. Every level of a product tail repeats the first,
/// so the window decides whether the local quantization vanishes.
VirtualCharacter quantize_local_model(const LocalModel& lm);

}  // namespace bquant
