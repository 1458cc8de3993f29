#include <gtest/gtest.h>

#include <random>

#include "coxkit/linear_solve.hpp"
#include "coxkit/qscalar.hpp"
#include "coxkit/series.hpp"

using namespace coxkit;

namespace {

QScalar q(const char* e) { return QScalar::q_power(parse_rational(e)); }

// Leibniz expansion; independent of the elimination code.
template <class S>
S leibniz_det(const std::vector<std::vector<S>>& a) {
  std::size_t n = a.size();
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  S total(0);
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) sign = -sign;
    S term(sign);
    for (std::size_t i = 0; i < n; ++i) term *= a[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

RMatrix random_rmatrix(std::mt19937& rng, std::size_t r, std::size_t c, int density_pct = 60) {
  std::uniform_int_distribution<int> val(-4, 4), den(1, 3), coin(0, 99);
  RMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (coin(rng) < density_pct) m.set(i, j, make_rational(val(rng), den(rng)));
  return m;
}

QScalar random_q(std::mt19937& rng) {
  std::uniform_int_distribution<int> val(-3, 3), ex(-4, 4), kind(0, 3);
  std::vector<std::pair<Rational, Rational>> num, den;
  for (int k = 0; k < 2; ++k) num.emplace_back(make_rational(ex(rng), 2), Rational(val(rng)));
  if (kind(rng) == 0) {
    den = {{Rational(0), Rational(1)}, {Rational(ex(rng)), Rational(val(rng))}};
    try {
      return QScalar::from_ratio(num, den);
    } catch (const DivisionByZero&) {
    }
  }
  return QScalar::from_terms(num);
}

}  // namespace

TEST(Rational, ParseAndFormat) {
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(to_string(parse_rational("10/5")), "2");
  EXPECT_THROW(parse_rational("1/0"), InvalidInput);
  EXPECT_THROW(parse_rational("x"), InvalidInput);
  EXPECT_THROW(parse_rational("1/-2"), InvalidInput);
}

TEST(QScalar, QuantumIntegers) {
  EXPECT_EQ(QScalar::q_integer(2), q("1") + q("-1"));
  EXPECT_EQ(QScalar::q_integer(3, 2), q("4") + QScalar(1) + q("-4"));
  // (q - q^-1) [n] = q^n - q^-n
  for (long n = 1; n < 7; ++n)
    EXPECT_EQ((q("1") - q("-1")) * QScalar::q_integer(n), q(std::to_string(n).c_str()) - q(("-" + std::to_string(n)).c_str()));
  EXPECT_EQ(QScalar::q_integer(-2), -QScalar::q_integer(2));
  EXPECT_EQ(QScalar::q_factorial(3).specialize_at_one(), Rational(6));
}

TEST(QScalar, CanonicalFormAcrossLattices) {
  QScalar a = q("1/2") * q("1/2");
  EXPECT_EQ(a, q("1"));
  EXPECT_EQ(a.lattice(), 1u);
  QScalar b = q("1/4") * q("1/4");
  EXPECT_EQ(b, q("1/2"));
  EXPECT_EQ(b.lattice(), 2u);
  // (q^2 - 1) / (q - 1) reduces to q + 1
  QScalar r = (q("2") - QScalar(1)) / (q("1") - QScalar(1));
  EXPECT_TRUE(r.is_laurent());
  EXPECT_EQ(r, q("1") + QScalar(1));
  // mixed lattices combine exactly
  EXPECT_EQ(q("1/3") * q("1/2"), q("5/6"));
}

TEST(QScalar, SpecializeAtOne) {
  EXPECT_EQ(QScalar::q_integer(5).specialize_at_one(), Rational(5));
  QScalar x = (q("1") - QScalar(1)) / (q("2") - QScalar(1));
  EXPECT_EQ(x.specialize_at_one(), Rational(1, 2));
  QScalar pole = QScalar(1) / (q("1/2") - QScalar(1));
  EXPECT_THROW(pole.specialize_at_one(), PoleAtOne);
  EXPECT_THROW(QScalar(0).inverse(), DivisionByZero);
}

TEST(QScalar, FieldAxiomsRandom) {
  std::mt19937 rng(7);
  for (int it = 0; it < 60; ++it) {
    QScalar a = random_q(rng), b = random_q(rng), c = random_q(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, QScalar(0));
    if (!a.is_zero()) EXPECT_EQ(a / a, QScalar(1));
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
  }
}

TEST(QScalar, TermsRoundTrip) {
  QScalar x = (q("3/2") * QScalar(Rational(2, 3)) - q("-1")) / (q("1") + QScalar(2));
  QScalar y = QScalar::from_ratio(x.numerator_terms(), x.denominator_terms());
  EXPECT_EQ(x, y);
}

TEST(SparseMatrix, NoStoredZerosAndProducts) {
  RMatrix a(2, 2);
  a.set(0, 0, 1);
  a.set(0, 1, 2);
  a.set(0, 1, 0);
  EXPECT_EQ(a.nnz(), 1u);
  RMatrix b = RMatrix::from_dense({{Rational(1), Rational(1)}, {Rational(-1), Rational(1)}});
  RMatrix c = b * b;
  EXPECT_EQ(c.at(0, 0), Rational(0));
  EXPECT_EQ(c.nnz(), 2u);
  std::mt19937 rng3(3);
  RMatrix p = flip_matrix<Rational>(2, 3);
  RMatrix x = random_rmatrix(rng3, 2, 2), y = RMatrix::identity(3);
  EXPECT_EQ(p * x.kron(y) * p.transpose(), y.kron(x));
}

TEST(SolveLinear, RationalAgainstIndependentChecks) {
  std::mt19937 rng(11);
  for (int it = 0; it < 80; ++it) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    RMatrix a = random_rmatrix(rng, r, c, 50);
    RMatrix b = random_rmatrix(rng, r, 2, 50);
    auto sol = solve_linear(a, b);
    EXPECT_EQ(sol.rank + sol.kernel.cols(), c);
    EXPECT_TRUE((a * sol.kernel).is_zero());
    EXPECT_EQ(rank(sol.kernel), sol.kernel.cols());
    if (sol.consistent) EXPECT_EQ(a * sol.particular, b);
    // consistency oracle: rank of augmented matrix
    bool consistent = rank(RMatrix::hstack(a, b)) == rank(a);
    EXPECT_EQ(sol.consistent, consistent);
    if (r == c) {
      EXPECT_EQ(determinant(a), leibniz_det(a.to_dense()));
      if (determinant(a) != 0) EXPECT_EQ(a * inverse(a), RMatrix::identity(r));
    }
  }
}

TEST(SolveLinear, QScalarAgainstIndependentChecks) {
  std::mt19937 rng(5);
  for (int it = 0; it < 25; ++it) {
    std::size_t n = 1 + rng() % 3;
    QMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rng() % 3) a.set(i, j, random_q(rng));
    EXPECT_EQ(determinant(a), leibniz_det(a.to_dense()));
    if (!determinant(a).is_zero()) EXPECT_EQ(a * inverse(a), QMatrix::identity(n));
    auto sol = solve_linear(a, QMatrix(n, 0));
    EXPECT_TRUE((a * sol.kernel).is_zero());
  }
  // singular over Q(q) although entries are nonconstant
  QScalar x = q("1"), two = QScalar::q_integer(2);
  QMatrix s = QMatrix::from_dense({{x, two}, {x * x, two * x}});
  EXPECT_EQ(rank(s), 1u);
  EXPECT_THROW(inverse(s), Error);
}

TEST(SolveLinear, Inconsistent) {
  RMatrix a = RMatrix::from_dense({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}});
  RMatrix b = RMatrix::column({Rational(1), Rational(3)});
  auto sol = solve_linear(a, b);
  EXPECT_FALSE(sol.consistent);
  EXPECT_EQ(sol.rank, 1u);
}

TEST(TruncatedSeries, ExpAndInverse) {
  RMatrix x = RMatrix::from_dense({{Rational(0), Rational(1)}, {Rational(2), Rational(0)}});
  auto e = series_exp(x, 1, 4);
  auto em = series_exp(RMatrix(-x), 1, 4);
  EXPECT_EQ(e * em, (TruncatedSeries<Rational>::identity(2, 4)));
  EXPECT_EQ(e.inverse(), em);
  // coefficient of hbar^2 is X^2 / 2
  EXPECT_EQ(e.coefficient(2), x * x * Rational(1, 2));
  auto bad = TruncatedSeries<Rational>::monomial(x, 0, 3);
  EXPECT_THROW(series_exp(bad), InvalidInput);
  EXPECT_THROW(series_exp(x, 0, 3), InvalidInput);
}
