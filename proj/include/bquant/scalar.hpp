#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <string>
#include <string_view>

namespace bquant {

namespace mp = boost::multiprecision;

// Expression templates are disabled: they do not mix with Eigen's own.
using Integer = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntVector = VectorX<Integer>;
using RatVector = VectorX<Rational>;
using IntMatrix = MatrixX<Integer>;
using RatMatrix = MatrixX<Rational>;

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
bool is_integer(const Rational& q);

/// Exact text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q"; rejects decimal points, exponents and zero
/// denominators with std::invalid_argument.
Rational parse_rational(std::string_view text);

template <typename Scalar>
std::string to_string(const VectorX<Scalar>& v) {
  std::string out = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i > 0) out += ", ";
    out += to_string(v(i));
  }
  return out + ")";
}

template <typename Scalar>
bool lex_less(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(),
                                      b.data() + b.size());
}

template <typename Scalar>
bool equal(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  return a.size() == b.size() && std::equal(a.data(), a.data() + a.size(), b.data());
}

template <typename Scalar>
VectorX<Scalar> vector_of(std::initializer_list<long> values) {
  VectorX<Scalar> v(static_cast<Index>(values.size()));
  Index i = 0;
  for (long x : values) v(i++) = Scalar(x);
  return v;
}

inline RatVector to_rational(const IntVector& v) { return v.cast<Rational>(); }

}  // namespace bquant
