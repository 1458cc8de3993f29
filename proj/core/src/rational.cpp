#include "coxkit/rational.hpp"

#include "coxkit/errors.hpp"

namespace coxkit {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw InvalidInput("empty rational literal");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& p) {
    std::size_t i = (!p.empty() && (p[0] == '-' || p[0] == '+')) ? 1 : 0;
    if (i >= p.size()) return false;
    for (; i < p.size(); ++i)
      if (p[i] < '0' || p[i] > '9') return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw InvalidInput("malformed rational literal: " + s);
  if (num[0] == '+') num.erase(num.begin());
  Rational r;
  r.get_num() = Integer(num, 10);
  r.get_den() = Integer(den, 10);
  if (r.get_den() == 0) throw InvalidInput("zero denominator in literal: " + s);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(10); }
std::string to_string(const Integer& z) { return z.get_str(10); }

std::size_t bit_size(const Integer& z) {
  return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

std::size_t bit_size(const Rational& r) {
  return bit_size(r.get_num()) + bit_size(r.get_den());
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

}  // namespace coxkit
