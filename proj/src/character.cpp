#include "bquant/character.hpp"

#include "bquant/errors.hpp"

#include <stdexcept>
#include <string>

namespace bquant {

namespace {
void require_rank(Index expected, Index actual, const char* what) {
  if (expected != actual)
    throw DimensionError(std::string(what) + ": rank " + std::to_string(actual) + " does not match rank " +
                         std::to_string(expected));
}
}  // namespace

VirtualCharacter::VirtualCharacter(Index rank, const Map& multiplicities) : rank_(rank) {
  for (const auto& [w, m] : multiplicities) accumulate(w, m);
}

VirtualCharacter VirtualCharacter::trivial(Index rank) {
  VirtualCharacter c(rank);
  c.accumulate(Weight::zero(rank), Integer(1));
  return c;
}

void VirtualCharacter::accumulate(const Weight& w, const Integer& mult) {
  require_rank(rank_, w.rank(), "VirtualCharacter");
  if (mult == 0) return;
  auto [it, inserted] = multiplicities_.try_emplace(w, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) multiplicities_.erase(it);
  }
}

VirtualCharacter operator+(const VirtualCharacter& a, const VirtualCharacter& b) {
  require_rank(a.rank_, b.rank_, "character sum");
  VirtualCharacter out = a;
  for (const auto& [w, m] : b.multiplicities_) out.accumulate(w, m);
  return out;
}

VirtualCharacter operator-(const VirtualCharacter& a, const VirtualCharacter& b) { return a + negate(b); }

PolyhedralCharacter::PolyhedralCharacter(Index rank, std::vector<PolyhedralTerm> terms) : rank_(rank) {
  for (auto& t : terms) add_term(t.sign, std::move(t.polyhedron));
}

void PolyhedralCharacter::add_term(int sign, LatticePolyhedron polyhedron) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("term sign must be +1 or -1");
  require_rank(rank_, polyhedron.rank(), "PolyhedralCharacter term");
  terms_.push_back({sign, std::move(polyhedron)});
}

Integer weight_multiplicity(const VirtualCharacter& c, const Weight& alpha) {
  require_rank(c.rank(), alpha.rank(), "weight_multiplicity");
  auto it = c.multiplicities().find(alpha);
  return it == c.multiplicities().end() ? Integer(0) : it->second;
}

Integer weight_multiplicity(const PolyhedralCharacter& c, const Weight& alpha) {
  require_rank(c.rank(), alpha.rank(), "weight_multiplicity");
  Integer count(0);
  for (const auto& term : c.terms())
    if (term.polyhedron.contains(alpha)) count += term.sign;
  return count;
}

VirtualCharacter tensor_product(const VirtualCharacter& a, const VirtualCharacter& b) {
  require_rank(a.rank(), b.rank(), "tensor_product");
  VirtualCharacter out(a.rank());
  for (const auto& [x, m] : a.multiplicities())
    for (const auto& [y, k] : b.multiplicities()) out.accumulate(x + y, m * k);
  return out;
}

Integer invariant_part(const VirtualCharacter& a) { return weight_multiplicity(a, Weight::zero(a.rank())); }

Integer dimension(const VirtualCharacter& a) {
  Integer total(0);
  for (const auto& [w, m] : a.multiplicities()) total += m;
  return total;
}

VirtualCharacter negate(const VirtualCharacter& a) {
  VirtualCharacter out(a.rank());
  for (const auto& [w, m] : a.multiplicities()) out.accumulate(w, -m);
  return out;
}

}  // namespace bquant
