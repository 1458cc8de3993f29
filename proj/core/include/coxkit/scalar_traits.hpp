#pragma once

#include <cstddef>
#include <string>

#include "coxkit/qscalar.hpp"
#include "coxkit/rational.hpp"

namespace coxkit {

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static bool is_zero(const Rational& x) { return x == 0; }
  static std::size_t weight(const Rational& x) { return bit_size(x); }
  static std::string format(const Rational& x) { return to_string(x); }
};

template <>
struct ScalarTraits<QScalar> {
  static bool is_zero(const QScalar& x) { return x.is_zero(); }
  static std::size_t weight(const QScalar& x) { return x.degree_weight(); }
  static std::string format(const QScalar& x) { return x.to_string(); }
};

}  // namespace coxkit
