#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coxkit/rational.hpp"

namespace coxkit {

// Dense univariate polynomial over Q, coefficients stored from degree 0 up.
// No trailing zeros; the zero polynomial has an empty coefficient list.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
  static Polynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  // Index of the lowest nonzero coefficient; 0 for zero.
  std::size_t valuation() const;
  const Rational& leading() const { return c_.back(); }
  Rational coefficient(std::size_t k) const;
  const std::vector<Rational>& coefficients() const { return c_; }

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // Multiply or divide by t^k (the latter requires k <= valuation()).
  Polynomial shifted_up(std::size_t k) const;
  Polynomial shifted_down(std::size_t k) const;
  // p(t) -> p(t^k).
  Polynomial inflate(std::size_t k) const;
  // Inverse of inflate; requires every exponent divisible by k.
  Polynomial deflate(std::size_t k) const;
  // gcd of all exponents with nonzero coefficient (0 for constants/zero).
  std::size_t exponent_gcd() const;

  Polynomial monic() const;
  Rational evaluate(const Rational& x) const;

  // Euclidean division; throws DivisionByZero for a zero divisor.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  // Throws Error if b does not divide a.
  static Polynomial exact_div(const Polynomial& a, const Polynomial& b);
  // Monic gcd; gcd(0, 0) = 0.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace coxkit
