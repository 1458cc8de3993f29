#include "coxkit/qscalar.hpp"

#include <numeric>
#include <sstream>

#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

std::uint32_t lattice_lcm(std::uint32_t a, std::uint32_t b) {
  return static_cast<std::uint32_t>(std::lcm<std::uint64_t>(a, b));
}

// Laurent terms in q to (shift, polynomial) at a common lattice.
std::pair<long, Polynomial> laurent_from_terms(
    const std::vector<std::pair<Rational, Rational>>& terms, std::uint32_t lattice) {
  if (terms.empty()) return {0, Polynomial()};
  std::vector<std::pair<long, Rational>> ts;
  long lo = 0;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational scaled = e * lattice;
    if (scaled.get_den() != 1) throw InvalidInput("exponent not on the lattice");
    long k = scaled.get_num().get_si();
    ts.emplace_back(k, c);
    if (first || k < lo) lo = k;
    first = false;
  }
  Polynomial p;
  for (const auto& [k, c] : ts) p += Polynomial::monomial(c, static_cast<std::size_t>(k - lo));
  return {lo, p};
}

std::uint32_t lattice_of(const std::vector<std::pair<Rational, Rational>>& terms) {
  std::uint32_t m = 1;
  for (const auto& t : terms)
    m = lattice_lcm(m, static_cast<std::uint32_t>(t.first.get_den().get_ui()));
  return m;
}

}  // namespace

QScalar::QScalar(const Rational& c) {
  if (c != 0) num_ = Polynomial(c);
}

QScalar::QScalar(std::uint32_t lattice, long shift, Polynomial num, Polynomial den, bool reduced)
    : lattice_(lattice), shift_(shift), num_(std::move(num)), den_(std::move(den)) {
  normalize(reduced);
}

void QScalar::normalize(bool reduced) {
  if (den_.is_zero()) throw DivisionByZero();
  if (num_.is_zero()) {
    *this = QScalar();
    return;
  }
  if (std::size_t v = num_.valuation(); v > 0) {
    num_ = num_.shifted_down(v);
    shift_ += static_cast<long>(v);
  }
  if (std::size_t w = den_.valuation(); w > 0) {
    den_ = den_.shifted_down(w);
    shift_ -= static_cast<long>(w);
  }
  if (!reduced && den_.degree() > 0 && num_.degree() > 0) {
    Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Polynomial::exact_div(num_, g);
      den_ = Polynomial::exact_div(den_, g);
    }
  }
  if (den_.leading() != 1) {
    Rational inv = 1 / den_.leading();
    num_ *= inv;
    den_ *= inv;
  }
  std::size_t g = lattice_;
  g = std::gcd(g, static_cast<std::size_t>(shift_ < 0 ? -shift_ : shift_));
  g = std::gcd(g, num_.exponent_gcd());
  g = std::gcd(g, den_.exponent_gcd());
  if (g > 1) {
    num_ = num_.deflate(g);
    den_ = den_.deflate(g);
    shift_ /= static_cast<long>(g);
    lattice_ /= static_cast<std::uint32_t>(g);
  }
}

QScalar QScalar::from_parts(std::uint32_t lattice, long shift, Polynomial num, Polynomial den) {
  if (lattice == 0) throw InvalidInput("lattice divisor must be positive");
  return QScalar(lattice, shift, std::move(num), std::move(den), false);
}

QScalar::Lifted QScalar::lift(std::uint32_t lattice) const {
  if (lattice % lattice_ != 0) throw InvalidInput("lift to a non-multiple lattice");
  std::uint32_t k = lattice / lattice_;
  return {shift_ * static_cast<long>(k), num_.inflate(k), den_.inflate(k)};
}

QScalar QScalar::t_power(long e, std::uint32_t lattice) {
  if (lattice == 0) throw InvalidInput("lattice divisor must be positive");
  return QScalar(lattice, e, Polynomial(Rational(1)), Polynomial(Rational(1)), true);
}

QScalar QScalar::q_power(const Rational& e) {
  std::uint32_t m = static_cast<std::uint32_t>(e.get_den().get_ui());
  return t_power(e.get_num().get_si(), m);
}

QScalar QScalar::q_integer(long n, long d) {
  if (n == 0) return QScalar();
  bool neg = n < 0;
  long m = neg ? -n : n;
  // q^{d(m-1)} + q^{d(m-3)} + ... + q^{-d(m-1)}
  std::vector<Rational> c(static_cast<std::size_t>(2 * d * (m - 1) + 1), Rational(0));
  for (long k = 0; k < m; ++k) c[static_cast<std::size_t>(2 * d * k)] = 1;
  QScalar r(1, -d * (m - 1), Polynomial(std::move(c)), Polynomial(Rational(1)), true);
  return neg ? -r : r;
}

QScalar QScalar::q_factorial(long n, long d) {
  if (n < 0) throw InvalidInput("negative quantum factorial");
  QScalar r(1);
  for (long k = 2; k <= n; ++k) r *= q_integer(k, d);
  return r;
}

QScalar QScalar::from_terms(const std::vector<std::pair<Rational, Rational>>& terms) {
  std::uint32_t m = lattice_of(terms);
  auto [lo, p] = laurent_from_terms(terms, m);
  return QScalar(m, lo, std::move(p), Polynomial(Rational(1)), true);
}

QScalar QScalar::from_ratio(const std::vector<std::pair<Rational, Rational>>& num,
                            const std::vector<std::pair<Rational, Rational>>& den) {
  std::uint32_t m = lattice_lcm(lattice_of(num), lattice_of(den));
  auto [lo_n, pn] = laurent_from_terms(num, m);
  auto [lo_d, pd] = laurent_from_terms(den, m);
  if (pd.is_zero()) throw DivisionByZero();
  return QScalar(m, lo_n - lo_d, std::move(pn), std::move(pd), false);
}

std::size_t QScalar::degree_weight() const {
  if (is_zero()) return 0;
  return static_cast<std::size_t>(num_.degree() + den_.degree());
}

QScalar QScalar::operator-() const {
  QScalar r(*this);
  r.num_ = -r.num_;
  return r;
}

QScalar operator+(const QScalar& a, const QScalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::uint32_t m = lattice_lcm(a.lattice_, b.lattice_);
  QScalar::Lifted x = a.lift(m), y = b.lift(m);
  long s = std::min(x.shift, y.shift);
  Polynomial xn = x.num.shifted_up(static_cast<std::size_t>(x.shift - s));
  Polynomial yn = y.num.shifted_up(static_cast<std::size_t>(y.shift - s));
  if (x.den.is_one() && y.den.is_one())
    return QScalar(m, s, xn + yn, Polynomial(Rational(1)), true);
  if (x.den == y.den) return QScalar(m, s, xn + yn, x.den, false);
  Polynomial g = Polynomial::gcd(x.den, y.den);
  Polynomial xc = Polynomial::exact_div(y.den, g);  // cofactor for x
  Polynomial yc = Polynomial::exact_div(x.den, g);
  return QScalar(m, s, xn * xc + yn * yc, x.den * xc, false);
}

QScalar operator*(const QScalar& a, const QScalar& b) {
  if (a.is_zero() || b.is_zero()) return QScalar();
  std::uint32_t m = lattice_lcm(a.lattice_, b.lattice_);
  QScalar::Lifted x = a.lift(m), y = b.lift(m);
  if (x.den.is_one() && y.den.is_one())
    return QScalar(m, x.shift + y.shift, x.num * y.num, Polynomial(Rational(1)), true);
  Polynomial g1 = Polynomial::gcd(x.num, y.den);
  Polynomial g2 = Polynomial::gcd(y.num, x.den);
  if (g1.degree() > 0) {
    x.num = Polynomial::exact_div(x.num, g1);
    y.den = Polynomial::exact_div(y.den, g1);
  }
  if (g2.degree() > 0) {
    y.num = Polynomial::exact_div(y.num, g2);
    x.den = Polynomial::exact_div(x.den, g2);
  }
  return QScalar(m, x.shift + y.shift, x.num * y.num, x.den * y.den, true);
}

QScalar QScalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return QScalar(lattice_, -shift_, den_, num_, true);
}

QScalar QScalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  QScalar result(1), base(*this);
  while (n > 0) {
    if (n & 1) result *= base;
    base *= base;
    n >>= 1;
  }
  return result;
}

Rational QScalar::specialize_at_one() const {
  if (is_zero()) return 0;
  Rational d = den_.evaluate(1);
  if (d == 0) throw PoleAtOne("pole at q = 1 in " + to_string());
  return num_.evaluate(1) / d;
}

namespace {

std::vector<std::pair<Rational, Rational>> terms_of(const Polynomial& p, long shift,
                                                    std::uint32_t lattice) {
  std::vector<std::pair<Rational, Rational>> out;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    Rational e(shift + static_cast<long>(k), static_cast<long>(lattice));
    e.canonicalize();
    out.emplace_back(e, c[k]);
  }
  return out;
}

std::string format_terms(const std::vector<std::pair<Rational, Rational>>& ts) {
  if (ts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    Rational c = it->second;
    const Rational& e = it->first;
    bool neg = c < 0;
    if (neg) c = -c;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (e == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << "q";
    if (e != 1) os << "^" << (e.get_den() == 1 && e > 0 ? e.get_str() : "(" + e.get_str() + ")");
  }
  return os.str();
}

}  // namespace

std::vector<std::pair<Rational, Rational>> QScalar::numerator_terms() const {
  return terms_of(num_, shift_, lattice_);
}

std::vector<std::pair<Rational, Rational>> QScalar::denominator_terms() const {
  return terms_of(den_, 0, lattice_);
}

std::string QScalar::to_string() const {
  std::string n = format_terms(numerator_terms());
  if (den_.is_one()) return n;
  return "(" + n + ")/(" + format_terms(denominator_terms()) + ")";
}

std::string to_string(const QScalar& x) { return x.to_string(); }

}  // namespace coxkit
