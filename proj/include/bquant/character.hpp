#pragma once

#include "bquant/polyhedron.hpp"
#include "bquant/scalar.hpp"
#include "bquant/weight.hpp"

#include <map>
#include <vector>

namespace bquant {

/// A finite-dimensional virtual T-module: a finitely supported map from
/// weights to integer multiplicities. Zero multiplicities are never stored
/// and the support is kept in lexicographic order, so equality is structural.
class VirtualCharacter {
 public:
  using Map = std::map<Weight, Integer>;

  explicit VirtualCharacter(Index rank = 0) : rank_(rank) {}
  /// Throws DimensionError if a weight has the wrong rank.
  VirtualCharacter(Index rank, const Map& multiplicities);

  /// The trivial one-dimensional module (multiplicity 1 at the zero weight).
  static VirtualCharacter trivial(Index rank);

  Index rank() const { return rank_; }
  const Map& multiplicities() const { return multiplicities_; }
  bool is_zero() const { return multiplicities_.empty(); }
  std::size_t support_size() const { return multiplicities_.size(); }

  /// Adds `mult` to the multiplicity of `w`.
  void accumulate(const Weight& w, const Integer& mult);

  friend bool operator==(const VirtualCharacter& a, const VirtualCharacter& b) {
    return a.rank_ == b.rank_ && a.multiplicities_ == b.multiplicities_;
  }
  friend bool operator!=(const VirtualCharacter& a, const VirtualCharacter& b) { return !(a == b); }

  friend VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b);
  friend VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b);

 private:
  Index rank_;
  Map multiplicities_;
};

struct PolyhedralTerm {
  int sign;  // +1 or -1
  LatticePolyhedron polyhedron;
};

/// Formal signed sum of polyhedron indicator characters. Evaluation at a
/// weight is the signed count of terms containing it; no simplification is
/// performed here.
class PolyhedralCharacter {
 public:
  explicit PolyhedralCharacter(Index rank = 0) : rank_(rank) {}
  PolyhedralCharacter(Index rank, std::vector<PolyhedralTerm> terms);

  Index rank() const { return rank_; }
  const std::vector<PolyhedralTerm>& terms() const { return terms_; }

  /// Throws DimensionError on rank mismatch, std::invalid_argument on a sign
  /// other than +1 or -1.
  void add_term(int sign, LatticePolyhedron polyhedron);

 private:
  Index rank_;
  std::vector<PolyhedralTerm> terms_;
};

Integer weight_multiplicity(const VirtualCharacter& c, const Weight& alpha);
Integer weight_multiplicity(const PolyhedralCharacter& c, const Weight& alpha);

/// Convolution: the multiplicity of g is the sum of a(x) b(y) over x + y = g.
VirtualCharacter tensor_product(const VirtualCharacter& a, const VirtualCharacter& b);

/// Multiplicity of the zero weight.
Integer invariant_part(const VirtualCharacter& a);

/// Signed total dimension.
Integer dimension(const VirtualCharacter& a);

VirtualCharacter negate(const VirtualCharacter& a);

}  // namespace bquant
