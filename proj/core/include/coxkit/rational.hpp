#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace coxkit {

using Integer = mpz_class;
using Rational = mpq_class;

// mpq_class(a, b) does not canonicalize; this does.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "a", "-a", "a/b". Result is canonicalized. Throws InvalidInput.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Size proxy used by pivot selection.
std::size_t bit_size(const Integer& z);
std::size_t bit_size(const Rational& r);

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

}  // namespace coxkit
