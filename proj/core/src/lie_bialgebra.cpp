#include "coxkit/lie_bialgebra.hpp"

#include <algorithm>
#include <string>

namespace coxkit {

namespace {

std::string triple(std::size_t i, std::size_t j, std::size_t k) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

// Jacobi defect of [x_i,[x_j,x_k]] + cyclic, coefficient of x_m.
Rational jacobi_defect(const LieAlgebra& g, std::size_t i, std::size_t j, std::size_t k, std::size_t m) {
  Rational s = 0;
  for (std::size_t l = 0; l < g.dim(); ++l) {
    if (sgn(g.c(j, k, l)) != 0) s += g.c(j, k, l) * g.c(i, l, m);
    if (sgn(g.c(k, i, l)) != 0) s += g.c(k, i, l) * g.c(j, l, m);
    if (sgn(g.c(i, j, l)) != 0) s += g.c(i, j, l) * g.c(k, l, m);
  }
  return s;
}

LieAlgebra dual_lie(const LieBialgebra& b) {
  LieAlgebra g(b.dim());
  for (std::size_t k = 0; k < b.dim(); ++k)
    for (std::size_t p = 0; p < b.dim(); ++p)
      for (std::size_t q = 0; q < b.dim(); ++q) g.c(p, q, k) = b.d(k, p, q);
  return g;
}

}  // namespace

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim_ || y.size() != dim_) throw DimensionMismatch("bracket: vector length");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < dim_; ++k)
        if (sgn(c(i, j, k)) != 0) out[k] += xy * c(i, j, k);
    }
  }
  return out;
}

RMatrix LieAlgebra::ad(std::size_t i) const {
  RMatrix m(dim_, dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    for (std::size_t k = 0; k < dim_; ++k) m.set(k, j, c(i, j, k));
  return m;
}

RMatrix LieAlgebra::bracket_matrix() const {
  RMatrix m(dim_, dim_ * dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j)
      for (std::size_t k = 0; k < dim_; ++k) m.set(k, i * dim_ + j, c(i, j, k));
  return m;
}

RMatrix LieBialgebra::cobracket_matrix() const {
  const std::size_t n = dim();
  RMatrix m(n * n, n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) m.set(p * n + q, k, d(k, p, q));
  return m;
}

Report verify_lie(const LieAlgebra& g) {
  Report r;
  const std::size_t n = g.dim();
  std::string bad;
  for (std::size_t i = 0; i < n && bad.empty(); ++i)
    for (std::size_t j = i; j < n && bad.empty(); ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (g.c(i, j, k) != -g.c(j, i, k)) {
          bad = "[x_i,x_j] + [x_j,x_i] != 0 at " + triple(i, j, k);
          break;
        }
  r.add("antisymmetry", bad.empty(), bad);
  bad.clear();
  for (std::size_t i = 0; i < n && bad.empty(); ++i)
    for (std::size_t j = i + 1; j < n && bad.empty(); ++j)
      for (std::size_t k = j + 1; k < n && bad.empty(); ++k)
        for (std::size_t m = 0; m < n; ++m)
          if (sgn(jacobi_defect(g, i, j, k, m)) != 0) {
            bad = "Jacobi fails on " + triple(i, j, k);
            break;
          }
  r.add("jacobi", bad.empty(), bad);
  return r;
}

Report verify_bialgebra(const LieBialgebra& b) {
  Report r = verify_lie(b.lie());
  const std::size_t n = b.dim();
  std::string bad;
  for (std::size_t k = 0; k < n && bad.empty(); ++k)
    for (std::size_t p = 0; p < n && bad.empty(); ++p)
      for (std::size_t q = p; q < n; ++q)
        if (b.d(k, p, q) != -b.d(k, q, p)) {
          bad = "delta(x_k) not antisymmetric at " + triple(k, p, q);
          break;
        }
  r.add("co-antisymmetry", bad.empty(), bad);
  Report dual = verify_lie(dual_lie(b));
  r.add("co-jacobi", dual.checks()[1].pass, dual.checks()[1].detail);

  // delta([x_i,x_j]) = x_i . delta(x_j) - x_j . delta(x_i)
  const LieAlgebra& g = b.lie();
  auto act = [&](std::size_t i, std::size_t j, std::size_t a, std::size_t bb) {
    Rational s = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (sgn(b.d(j, p, bb)) != 0) s += b.d(j, p, bb) * g.c(i, p, a);
      if (sgn(b.d(j, a, p)) != 0) s += b.d(j, a, p) * g.c(i, p, bb);
    }
    return s;
  };
  bad.clear();
  for (std::size_t i = 0; i < n && bad.empty(); ++i)
    for (std::size_t j = i + 1; j < n && bad.empty(); ++j)
      for (std::size_t a = 0; a < n && bad.empty(); ++a)
        for (std::size_t bb = 0; bb < n; ++bb) {
          Rational lhs = 0;
          for (std::size_t k = 0; k < n; ++k)
            if (sgn(g.c(i, j, k)) != 0) lhs += g.c(i, j, k) * b.d(k, a, bb);
          if (lhs != act(i, j, a, bb) - act(j, i, a, bb)) {
            bad = "cocycle fails for (x_" + std::to_string(i) + ", x_" + std::to_string(j) + ")";
            break;
          }
        }
  r.add("cocycle", bad.empty(), bad);
  return r;
}

LieBialgebra dual_bialgebra(const LieBialgebra& b) {
  LieBialgebra d(dual_lie(b));
  const std::size_t n = b.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) d.d(k, i, j) = b.lie().c(i, j, k);
  return d;
}

Report lie_morphism_check(const LieAlgebra& a, const LieAlgebra& b, const RMatrix& m) {
  Report r;
  if (m.rows() != b.dim() || m.cols() != a.dim()) throw DimensionMismatch("morphism shape " + m.shape());
  bool ok = m * a.bracket_matrix() == b.bracket_matrix() * m.kron(m);
  r.add("bracket", ok, ok ? "" : "M[x,y] != [Mx,My]");
  return r;
}

Report bialgebra_morphism_check(const LieBialgebra& a, const LieBialgebra& b, const RMatrix& m) {
  Report r = lie_morphism_check(a.lie(), b.lie(), m);
  bool ok = m.kron(m) * a.cobracket_matrix() == b.cobracket_matrix() * m;
  r.add("cobracket", ok, ok ? "" : "(M(x)M) delta != delta M");
  return r;
}

Report invariant_form_check(const LieAlgebra& g, const RMatrix& form) {
  Report r;
  const std::size_t n = g.dim();
  if (form.rows() != n || form.cols() != n) throw DimensionMismatch("form shape " + form.shape());
  r.add("symmetric", form == form.transpose());
  r.add("nondegenerate", rank(form) == n);
  std::string bad;
  for (std::size_t a = 0; a < n && bad.empty(); ++a)
    for (std::size_t b = 0; b < n && bad.empty(); ++b)
      for (std::size_t c = 0; c < n; ++c) {
        Rational lhs = 0, rhs = 0;
        for (std::size_t k = 0; k < n; ++k) {
          if (sgn(g.c(a, b, k)) != 0) lhs += g.c(a, b, k) * form.at(k, c);
          if (sgn(g.c(b, c, k)) != 0) rhs += g.c(b, c, k) * form.at(a, k);
        }
        if (lhs != rhs) {
          bad = "<[x,y],z> != <x,[y,z]> at " + triple(a, b, c);
          break;
        }
      }
  r.add("invariant", bad.empty(), bad);
  return r;
}

DrinfeldDouble drinfeld_double(const LieBialgebra& b) {
  const std::size_t n = b.dim();
  const LieAlgebra& lie = b.lie();
  LieAlgebra g(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        g.c(i, j, k) = lie.c(i, j, k);
        g.c(n + i, n + j, n + k) = b.d(k, i, j);
      }
  // [x_a, x^c] = sum_q d(a, c, q) x_q - sum_k c(a, k, c) x^k
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t k = 0; k < n; ++k) {
        Rational v = b.d(a, c, k);
        g.c(a, n + c, k) = v;
        g.c(n + c, a, k) = -v;
        Rational w = -lie.c(a, k, c);
        g.c(a, n + c, n + k) = w;
        g.c(n + c, a, n + k) = -w;
      }
  LieBialgebra gb(std::move(g));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        gb.d(k, p, q) = b.d(k, p, q);
        gb.d(n + k, n + p, n + q) = -lie.c(p, q, k);
      }
  RMatrix form(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    form.set(i, n + i, Rational(1));
    form.set(n + i, i, Rational(1));
  }
  return {std::move(gb), std::move(form), n};
}

Vector column_of(const RMatrix& m, std::size_t c) { return m.column_vector(c); }

RMatrix column_matrix(const Vector& v) { return RMatrix::column(v); }

LieAlgebra subalgebra(const LieAlgebra& g, const RMatrix& basis) {
  const std::size_t k = basis.cols();
  if (basis.rows() != g.dim()) throw DimensionMismatch("subalgebra basis has wrong row count");
  if (rank(basis) != k) throw InvalidInput("subalgebra: basis is linearly dependent");
  std::vector<Vector> cols;
  for (std::size_t j = 0; j < k; ++j) cols.push_back(basis.column_vector(j));
  RMatrix rhs(g.dim(), k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Vector v = g.bracket(cols[i], cols[j]);
      for (std::size_t t = 0; t < v.size(); ++t) rhs.set(t, i * k + j, v[t]);
    }
  auto sol = solve_linear(basis, rhs);
  if (!sol.consistent) throw InvalidInput("subalgebra: span is not closed under the bracket");
  LieAlgebra s(k);
  for (const auto& [key, v] : sol.particular.entries()) s.c(key.second / k, key.second % k, key.first) = v;
  return s;
}

LieAlgebra lie_algebra_from_matrices(const std::vector<RMatrix>& basis) {
  const std::size_t k = basis.size();
  if (k == 0) return LieAlgebra(0);
  const std::size_t r = basis[0].rows(), c = basis[0].cols();
  RMatrix b(r * c, k);
  for (std::size_t j = 0; j < k; ++j) {
    if (basis[j].rows() != r || basis[j].cols() != c) throw DimensionMismatch("lie_algebra_from_matrices: shape");
    for (const auto& [key, v] : basis[j].entries()) b.set(key.first * c + key.second, j, v);
  }
  // Coordinates are read off k independent matrix positions, then every
  // bracket is rebuilt from them to confirm it lies in the span.
  auto rows = solve_linear(b.transpose(), RMatrix(k, 0)).pivot_columns;
  if (rows.size() != k) throw InvalidInput("lie_algebra_from_matrices: matrices are dependent");
  std::sort(rows.begin(), rows.end());
  const RMatrix reader = inverse(b.select(rows, iota(k)));
  LieAlgebra g(k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      RMatrix br = commutator(basis[i], basis[j]);
      RMatrix picked(k, 1);
      for (std::size_t t = 0; t < k; ++t) picked.set(t, 0, br.at(rows[t] / c, rows[t] % c));
      RMatrix coords = reader * picked;
      RMatrix rebuilt(r, c);
      for (const auto& [key, v] : coords.entries()) rebuilt += basis[key.first] * v;
      if (!(rebuilt == br)) throw InvalidInput("lie_algebra_from_matrices: span is not closed");
      for (const auto& [key, v] : coords.entries()) {
        g.c(i, j, key.first) = v;
        g.c(j, i, key.first) = -v;
      }
    }
  return g;
}

Report manin_triple_check(const ManinTriple& t) {
  Report r = invariant_form_check(t.g, t.form);
  const std::size_t n = t.g.dim();
  if (t.minus.rows() != n || t.plus.rows() != n) throw DimensionMismatch("manin triple basis rows");
  r.add("minus isotropic", (t.minus.transpose() * t.form * t.minus).is_zero());
  r.add("plus isotropic", (t.plus.transpose() * t.form * t.plus).is_zero());
  bool direct = t.minus.cols() + t.plus.cols() == n && rank(RMatrix::hstack(t.minus, t.plus)) == n;
  r.add("direct sum", direct);
  RMatrix pairing = t.minus.transpose() * t.form * t.plus;
  r.add("pairing nondegenerate", pairing.is_square() && rank(pairing) == pairing.rows());
  for (const auto* sub : {&t.minus, &t.plus}) {
    const char* name = sub == &t.minus ? "minus closed" : "plus closed";
    bool closed = true;
    try {
      subalgebra(t.g, *sub);
    } catch (const InvalidInput&) {
      closed = false;
    }
    r.add(name, closed);
  }
  return r;
}

RMatrix dual_basis(const ManinTriple& t) {
  RMatrix pairing = t.minus.transpose() * t.form * t.plus;
  return t.plus * inverse(pairing);
}

LieBialgebra manin_bialgebra(const ManinTriple& t) {
  LieBialgebra b(subalgebra(t.g, t.minus));
  RMatrix y = dual_basis(t);
  const std::size_t k = t.minus.cols();
  std::vector<Vector> ys;
  for (std::size_t p = 0; p < k; ++p) ys.push_back(y.column_vector(p));
  RMatrix lower = t.minus.transpose() * t.form;  // row k gives <x_k, .>
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = p + 1; q < k; ++q) {
      RMatrix val = lower * column_matrix(t.g.bracket(ys[p], ys[q]));
      for (std::size_t m = 0; m < k; ++m) {
        b.d(m, p, q) = val.at(m, 0);
        b.d(m, q, p) = -val.at(m, 0);
      }
    }
  return b;
}

ManinTriple manin_triple_of_double(const DrinfeldDouble& d) {
  const std::size_t n = d.half;
  RMatrix minus(2 * n, n), plus(2 * n, n);
  for (std::size_t i = 0; i < n; ++i) {
    minus.set(i, i, Rational(1));
    plus.set(n + i, i, Rational(1));
  }
  return {d.g.lie(), d.form, std::move(minus), std::move(plus)};
}

}  // namespace coxkit
