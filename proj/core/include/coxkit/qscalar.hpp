#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coxkit/polynomial.hpp"
#include "coxkit/rational.hpp"

namespace coxkit {

// Element of Q(q^{1/M}): t^shift * num(t) / den(t) with t = q^{1/M}.
//
// Canonical form: num(0) != 0, den(0) != 0, den monic, gcd(num, den) = 1,
// and M is the smallest lattice divisor that can hold the value. Equal
// values therefore have identical members. Mixed-M arithmetic lifts both
// operands to lcm(M1, M2) before combining.
class QScalar {
 public:
  QScalar() = default;
  QScalar(const Rational& c);  // NOLINT: constants convert implicitly
  QScalar(long c) : QScalar(Rational(c)) {}  // NOLINT

  // t^e at lattice divisor M, i.e. q^{e/M}.
  static QScalar t_power(long e, std::uint32_t lattice);
  // q^e for a rational exponent.
  static QScalar q_power(const Rational& e);
  // Symmetric quantum integer [n]_{q^d} = (q^{dn} - q^{-dn}) / (q^d - q^{-d}).
  static QScalar q_integer(long n, long d = 1);
  static QScalar q_factorial(long n, long d = 1);
  // Laurent polynomial from {exponent of q : coefficient}.
  static QScalar from_terms(const std::vector<std::pair<Rational, Rational>>& terms);
  // Ratio of two such Laurent polynomials.
  static QScalar from_ratio(const std::vector<std::pair<Rational, Rational>>& num,
                            const std::vector<std::pair<Rational, Rational>>& den);

  // General constructor; normalizes to canonical form.
  static QScalar from_parts(std::uint32_t lattice, long shift, Polynomial num, Polynomial den);
  // (shift, num, den) of this value written over a multiple of lattice().
  struct Lifted {
    long shift;
    Polynomial num, den;
  };
  Lifted lift(std::uint32_t lattice) const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_constant() const { return shift_ == 0 && num_.degree() <= 0 && den_.is_one(); }
  std::uint32_t lattice() const { return lattice_; }
  long shift() const { return shift_; }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  // Pivot weight: total degree of the reduced fraction.
  std::size_t degree_weight() const;

  QScalar operator-() const;
  QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
  QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
  QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
  QScalar& operator/=(const QScalar& o) { return *this = *this / o; }
  friend QScalar operator+(const QScalar& a, const QScalar& b);
  friend QScalar operator-(const QScalar& a, const QScalar& b) { return a + (-b); }
  friend QScalar operator*(const QScalar& a, const QScalar& b);
  friend QScalar operator/(const QScalar& a, const QScalar& b) { return a * b.inverse(); }
  friend bool operator==(const QScalar& a, const QScalar& b) {
    return a.lattice_ == b.lattice_ && a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  QScalar inverse() const;  // throws DivisionByZero
  QScalar pow(long n) const;

  // Value at q = 1. Throws PoleAtOne if the reduced denominator vanishes there.
  Rational specialize_at_one() const;

  // Terms of num and den as {q-exponent, coefficient}, ascending.
  std::vector<std::pair<Rational, Rational>> numerator_terms() const;
  std::vector<std::pair<Rational, Rational>> denominator_terms() const;

  std::string to_string() const;

 private:
  QScalar(std::uint32_t lattice, long shift, Polynomial num, Polynomial den, bool reduced);
  void normalize(bool reduced);

  std::uint32_t lattice_ = 1;
  long shift_ = 0;
  Polynomial num_;
  Polynomial den_ = Polynomial(Rational(1));
};

std::string to_string(const QScalar& x);

}  // namespace coxkit
