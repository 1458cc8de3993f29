#include "coxkit/linear_solve.hpp"

#include <numeric>

namespace coxkit {

std::pair<std::vector<Integer>, Rational> RingTraits<Rational>::clear(const Context&,
                                                                      const std::vector<Rational>& row) {
  Integer l = 1;
  for (const auto& x : row)
    if (x != 0) l = lcm(l, x.get_den());
  std::vector<Integer> out;
  out.reserve(row.size());
  for (const auto& x : row) out.push_back(x.get_num() * (l / x.get_den()));
  return {std::move(out), Rational(l)};
}

Integer RingTraits<Rational>::exact_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

RingTraits<QScalar>::Context RingTraits<QScalar>::context(const std::vector<std::vector<QScalar>>& rows) {
  Context ctx;
  for (const auto& row : rows)
    for (const auto& x : row)
      if (!x.is_zero()) ctx.lattice = static_cast<std::uint32_t>(std::lcm<std::uint64_t>(ctx.lattice, x.lattice()));
  return ctx;
}

std::pair<std::vector<Polynomial>, QScalar> RingTraits<QScalar>::clear(const Context& ctx,
                                                                       const std::vector<QScalar>& row) {
  std::vector<QScalar::Lifted> lifted;
  lifted.reserve(row.size());
  Polynomial l(Rational(1));
  long lo = 0;
  bool any = false;
  for (const auto& x : row) {
    if (x.is_zero()) {
      lifted.push_back({0, Polynomial(), Polynomial(Rational(1))});
      continue;
    }
    lifted.push_back(x.lift(ctx.lattice));
    const auto& y = lifted.back();
    if (!any || y.shift < lo) lo = y.shift;
    any = true;
    if (!y.den.is_one()) {
      Polynomial g = Polynomial::gcd(l, y.den);
      l = l * Polynomial::exact_div(y.den, g);
    }
  }
  std::vector<Polynomial> out;
  out.reserve(row.size());
  for (const auto& y : lifted) {
    if (y.num.is_zero()) {
      out.emplace_back();
      continue;
    }
    Polynomial p = y.num * Polynomial::exact_div(l, y.den);
    out.push_back(p.shifted_up(static_cast<std::size_t>(y.shift - lo)));
  }
  QScalar scale = QScalar::from_parts(ctx.lattice, -lo, l, Polynomial(Rational(1)));
  return {std::move(out), scale};
}

}  // namespace coxkit
