#pragma once

#include "bquant/scalar.hpp"

#include <initializer_list>
#include <string>

namespace bquant {

/// A character of the rank-n torus, identified with a point of Z^n.
class Weight {
 public:
  Weight() = default;
  explicit Weight(IntVector coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<long> coords) : coords_(vector_of<Integer>(coords)) {}

  static Weight zero(Index rank) { return Weight(IntVector::Zero(rank)); }

  Index rank() const { return coords_.size(); }
  const IntVector& coords() const { return coords_; }
  const Integer& operator[](Index i) const { return coords_(i); }

  RatVector to_rational() const { return coords_.cast<Rational>(); }
  std::string to_string() const { return bquant::to_string(coords_); }

  friend bool operator==(const Weight& a, const Weight& b) { return equal(a.coords_, b.coords_); }
  friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }
  friend bool operator<(const Weight& a, const Weight& b) { return lex_less(a.coords_, b.coords_); }

  friend Weight operator+(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a, const Weight& b);
  friend Weight operator-(const Weight& a);

 private:
  IntVector coords_;
};

}  // namespace bquant
