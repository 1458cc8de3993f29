#include "coxkit/polynomial.hpp"

#include <numeric>
#include <sstream>

#include "coxkit/errors.hpp"

namespace coxkit {

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Polynomial Polynomial::monomial(const Rational& c, std::size_t degree) {
  Polynomial p;
  if (c == 0) return p;
  p.c_.assign(degree + 1, Rational(0));
  p.c_[degree] = c;
  return p;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t Polynomial::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return k;
  return 0;
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < c_.size() ? c_[k] : Rational(0);
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial Polynomial::shifted_up(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  Polynomial r;
  r.c_.assign(k, Rational(0));
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

Polynomial Polynomial::shifted_down(std::size_t k) const {
  if (is_zero() || k == 0) return *this;
  if (k > valuation()) throw Error("shifted_down past the valuation");
  Polynomial r;
  r.c_.assign(c_.begin() + static_cast<long>(k), c_.end());
  return r;
}

Polynomial Polynomial::inflate(std::size_t k) const {
  if (k == 1 || c_.size() <= 1) return *this;
  Polynomial r;
  r.c_.assign((c_.size() - 1) * k + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i * k] = c_[i];
  return r;
}

Polynomial Polynomial::deflate(std::size_t k) const {
  if (k == 1 || c_.size() <= 1) return *this;
  Polynomial r;
  r.c_.assign((c_.size() - 1) / k + 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (i % k != 0) throw Error("deflate: exponent not divisible");
    r.c_[i / k] = c_[i];
  }
  return r;
}

std::size_t Polynomial::exponent_gcd() const {
  std::size_t g = 0;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) g = std::gcd(g, i);
  return g;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading() == 1) return *this;
  Rational inv = 1 / leading();
  return *this * inv;
}

Rational Polynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> quo(a.c_.size() - b.c_.size() + 1, Rational(0));
  const Rational inv_lead = 1 / b.leading();
  const std::size_t db = b.c_.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational& top = rem[k + db];
    if (top == 0) continue;
    Rational f = top * inv_lead;
    quo[k] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b.c_[j];
  }
  rem.resize(db);
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_div(const Polynomial& a, const Polynomial& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error("exact_div: nonzero remainder");
  return q;
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Polynomial(Rational(1));
  Polynomial x = a.monic(), y = b.monic();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    Rational c = c_[k];
    bool neg = c < 0;
    if (neg) c = -c;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (k == 0 || c != 1) os << c.get_str();
    if (k > 0) {
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace coxkit
