#include "coxkit/realization.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace coxkit {

namespace {

RMatrix columns_of(const RMatrix& m, std::size_t from, std::size_t count) {
  std::vector<std::size_t> cols(count);
  std::iota(cols.begin(), cols.end(), from);
  return m.select(iota(m.rows()), cols);
}

RMatrix rows_of(const RMatrix& m, const std::vector<std::size_t>& rows) { return m.select(rows, iota(m.cols())); }

RMatrix unit_column(std::size_t n, std::size_t k) {
  RMatrix e(n, 1);
  e.set(k, 0, Rational(1));
  return e;
}

// Append columns of `pool` that raise the rank, until it reaches `target`.
RMatrix extend_with_units(RMatrix basis, std::size_t target, const RMatrix& pool) {
  std::size_t r = rank(basis);
  for (std::size_t k = 0; k < pool.cols() && r < target; ++k) {
    RMatrix cand = RMatrix::hstack(basis, columns_of(pool, k, 1));
    std::size_t rr = rank(cand);
    if (rr > r) {
      basis = std::move(cand);
      r = rr;
    }
  }
  return basis;
}

}  // namespace

RMatrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::vector<Rational>> d;
  for (const auto& r : rows) {
    d.emplace_back();
    for (const auto& s : r) d.back().push_back(parse_rational(s));
  }
  return RMatrix::from_dense(d);
}

RMatrix integer_matrix(const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<Rational>> d;
  for (const auto& r : rows) {
    d.emplace_back();
    for (long x : r) d.back().emplace_back(x);
  }
  return RMatrix::from_dense(d);
}

Diagram diagram_of(const RMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("Cartan matrix must be square");
  return Diagram::of_matrix([&](unsigned i, unsigned j) { return a.at(i, j); }, static_cast<unsigned>(a.rows()));
}

RMatrix principal_submatrix(const RMatrix& a, VertexSet b) {
  std::vector<std::size_t> idx;
  for (unsigned v : b.vertices()) idx.push_back(v);
  return a.select(idx, idx);
}

std::optional<std::string> realization_violation(const Realization& v) {
  const std::size_t n = v.size();
  if (!v.cartan.is_square()) return "Cartan matrix is not square";
  if (v.coroots.cols() != n || v.roots.rows() != n) return "wrong number of roots or coroots";
  if (v.roots.cols() != v.dim()) return "roots and coroots live in different dimensions";
  if (rank(v.coroots) != n) return "coroots are linearly dependent";
  if (rank(v.roots) != n) return "roots are linearly dependent";
  if (!(v.roots * v.coroots == v.cartan.transpose())) return "alpha_i(h_j) != a_ji";
  return std::nullopt;
}

bool is_realization(const Realization& v) { return !realization_violation(v).has_value(); }

std::size_t minimal_realization_dim(const RMatrix& a) { return 2 * a.rows() - rank(a); }

Realization minimal_realization(const RMatrix& a) {
  const std::size_t n = a.rows(), dim = minimal_realization_dim(a);
  Realization v{a, RMatrix(dim, n), RMatrix(n, dim)};
  for (std::size_t j = 0; j < n; ++j) v.coroots.set(j, j, Rational(1));
  // first block A^T; then unit columns completing the rank to n
  RMatrix block = a.transpose();
  std::size_t r = rank(block);
  for (std::size_t k = 0; k < n && r < n; ++k) {
    RMatrix cand = RMatrix::hstack(block, unit_column(n, k));
    std::size_t rr = rank(cand);
    if (rr > r) {
      block = std::move(cand);
      r = rr;
    }
  }
  for (const auto& [key, x] : block.entries()) v.roots.set(key.first, key.second, x);
  return v;
}

Realization canonical_realization(const RMatrix& a) {
  const std::size_t n = a.rows();
  Realization v{a, RMatrix(2 * n, n), RMatrix(n, 2 * n)};
  for (std::size_t j = 0; j < n; ++j) v.coroots.set(j, j, Rational(1));
  for (const auto& [key, x] : a.entries()) v.roots.set(key.second, key.first, x);
  for (std::size_t i = 0; i < n; ++i) v.roots.set(i, n + i, Rational(1));
  return v;
}

Realization transpose_realization(const Realization& v) {
  return Realization{v.cartan.transpose(), v.roots.transpose(), v.coroots.transpose()};
}

Realization add_null_subspace(const Realization& v, std::size_t extra) {
  const std::size_t dim = v.dim() + extra;
  Realization w{v.cartan, RMatrix(dim, v.size()), RMatrix(v.size(), dim)};
  for (const auto& [k, x] : v.coroots.entries()) w.coroots.set(k.first, k.second, x);
  for (const auto& [k, x] : v.roots.entries()) w.roots.set(k.first, k.second, x);
  return w;
}

Realization change_basis(const Realization& v, const RMatrix& p) {
  return Realization{v.cartan, p * v.coroots, v.roots * inverse(p)};
}

Realization random_realization(const RMatrix& a, std::size_t extra, std::mt19937& rng) {
  Realization v = add_null_subspace(minimal_realization(a), extra);
  std::uniform_int_distribution<int> val(-2, 2);
  const std::size_t dim = v.dim();
  for (;;) {
    RMatrix p(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) p.set(i, j, Rational(val(rng)));
    if (determinant(p) != 0) return change_basis(v, p);
  }
}

MinimalSplitting split_minimal(const Realization& v) {
  const std::size_t dim = v.dim();
  const RMatrix perp = kernel_basis(v.roots);  // Pi^perp
  const RMatrix id = RMatrix::identity(dim);
  // W = V' n Pi^perp, then U0 completes W inside Pi^perp
  RMatrix joint = RMatrix::hstack(v.coroots, -perp);
  RMatrix ker = kernel_basis(joint);
  RMatrix w = v.coroots * ker.select(iota(v.size()), iota(ker.cols()));
  w = column_basis(w);
  RMatrix wplus = w;
  std::size_t r = w.cols();
  RMatrix null(dim, 0);
  for (std::size_t k = 0; k < perp.cols(); ++k) {
    RMatrix cand = RMatrix::hstack(wplus, columns_of(perp, k, 1));
    std::size_t rr = rank(cand);
    if (rr > r) {
      wplus = std::move(cand);
      r = rr;
      null = RMatrix::hstack(null, columns_of(perp, k, 1));
    }
  }
  // U = V' (+) C with C a complement of V' + Pi^perp
  RMatrix span = RMatrix::hstack(v.coroots, perp);
  RMatrix full = extend_with_units(span, dim, id);
  RMatrix sub = v.coroots;
  for (std::size_t k = span.cols(); k < full.cols(); ++k) sub = RMatrix::hstack(sub, columns_of(full, k, 1));
  return MinimalSplitting{sub, null};
}

bool is_morphism(const Realization& v1, const Realization& v2, const RMatrix& t) {
  if (t.rows() != v2.dim() || t.cols() != v1.dim()) return false;
  return t * v1.coroots == v2.coroots && v2.roots * t == v1.roots;
}

std::size_t expected_morphism_dimension(const Realization& v1, const Realization& v2) {
  return (v1.dim() - v1.size()) * (v2.dim() - v2.size());
}

MorphismSpace morphism_space(const Realization& v1, const Realization& v2) {
  if (v1.size() != v2.size() || !(v1.cartan == v2.cartan))
    throw InvalidInput("morphism_space: realizations of different matrices");
  const std::size_t n = v1.size(), d1 = v1.dim(), d2 = v2.dim();
  // unknown T[r][c] at index r * d1 + c
  RMatrix sys(d2 * n + n * d1, d2 * d1), rhs(d2 * n + n * d1, 1);
  std::size_t row = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < d2; ++r, ++row) {
      for (std::size_t c = 0; c < d1; ++c) sys.set(row, r * d1 + c, v1.coroots.at(c, i));
      rhs.set(row, 0, v2.coroots.at(r, i));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t c = 0; c < d1; ++c, ++row) {
      for (std::size_t r = 0; r < d2; ++r) sys.set(row, r * d1 + c, v2.roots.at(i, r));
      rhs.set(row, 0, v1.roots.at(i, c));
    }
  auto sol = solve_linear(sys, rhs);
  MorphismSpace ms;
  ms.nonempty = sol.consistent;
  auto unflatten = [&](const RMatrix& col, std::size_t k) {
    RMatrix t(d2, d1);
    for (const auto& [key, x] : col.entries())
      if (key.second == k) t.set(key.first / d1, key.first % d1, x);
    return t;
  };
  ms.particular = sol.consistent ? unflatten(sol.particular, 0) : RMatrix(d2, d1);
  for (std::size_t k = 0; k < sol.kernel.cols(); ++k) ms.directions.push_back(unflatten(sol.kernel, k));
  return ms;
}

std::vector<Rational> symmetrizer(const RMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("symmetrizer needs a square matrix");
  const unsigned n = static_cast<unsigned>(a.rows());
  Diagram dg = diagram_of(a);
  std::vector<Rational> d(n, Rational(0));
  std::vector<unsigned> parent(n, n);
  for (auto comp : dg.components(dg.all())) {
    unsigned root = comp.lowest();
    d[root] = 1;
    std::vector<unsigned> queue{root};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      unsigned i = queue[q];
      for (unsigned j : dg.neighbors(i).vertices()) {
        if (d[j] != 0) continue;
        if (a.at(i, j) == 0 || a.at(j, i) == 0)
          throw NotSymmetrizable("a_" + std::to_string(i) + std::to_string(j) + " and a_" + std::to_string(j) +
                                 std::to_string(i) + " are not both nonzero");
        d[j] = d[i] * a.at(j, i) / a.at(i, j);
        parent[j] = i;
        queue.push_back(j);
      }
    }
    // normalize to coprime integers, positive at the root
    Integer l = 1, g = 0;
    for (unsigned v : comp.vertices()) l = lcm(l, d[v].get_den());
    for (unsigned v : comp.vertices()) g = gcd(g, Rational(d[v] * l).get_num());
    for (unsigned v : comp.vertices()) d[v] = d[v] * l / g;
  }
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (a.at(i, j) * d[j] != a.at(j, i) * d[i]) {
        // report the tree paths closing the cycle through edge i -- j
        auto path = [&](unsigned v) {
          std::string s = std::to_string(v);
          while (parent[v] != n) {
            v = parent[v];
            s += "-" + std::to_string(v);
          }
          return s;
        };
        throw NotSymmetrizable("cycle condition fails on edge " + std::to_string(i) + "--" + std::to_string(j) +
                               " (tree paths " + path(i) + " and " + path(j) + ")");
      }
  return d;
}

bool is_symmetrizable(const RMatrix& a) {
  try {
    symmetrizer(a);
    return true;
  } catch (const NotSymmetrizable&) {
    return false;
  }
}

RMatrix invariant_form(const Realization& v, const std::vector<Rational>& d) {
  const std::size_t n = v.size(), dim = v.dim();
  MinimalSplitting sp = split_minimal(v);
  RMatrix basis = RMatrix::hstack(sp.sub, sp.null);
  const std::size_t u = sp.sub.cols();
  // Gram matrix in the adapted basis: (h_i, x) = d_i alpha_i(x) on U,
  // zero on the complement block of U, identity on U0.
  RMatrix g(dim, dim);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < u; ++k) {
      Rational val = d[i] * (v.roots * columns_of(sp.sub, k, 1)).at(i, 0);
      g.set(i, k, val);
      g.set(k, i, val);
    }
  for (std::size_t k = u; k < dim; ++k) g.set(k, k, Rational(1));
  RMatrix pinv = inverse(basis);
  return pinv.transpose() * g * pinv;
}

std::optional<std::string> invariant_form_violation(const Realization& v, const std::vector<Rational>& d,
                                                    const RMatrix& gram) {
  if (!(gram == gram.transpose())) return "form is not symmetric";
  if (determinant(gram) == 0) return "form is degenerate";
  for (std::size_t i = 0; i < v.size(); ++i) {
    RMatrix lhs = (gram * columns_of(v.coroots, i, 1)).transpose();
    RMatrix rhs = rows_of(v.roots, {i}) * d[i];
    if (!(lhs == rhs)) return "(h_" + std::to_string(i) + ", .) != d_i alpha_i";
  }
  return std::nullopt;
}

bool is_gcm(const RMatrix& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.rows(); ++j) {
      const Rational x = a.at(i, j);
      if (x.get_den() != 1) return false;
      if (i == j && x != 2) return false;
      if (i != j && (x > 0 || ((x == 0) != (a.at(j, i) == 0)))) return false;
    }
  return true;
}

CartanType cartan_type(const RMatrix& a) {
  if (!is_gcm(a)) return CartanType::NotGcm;
  Diagram dg = diagram_of(a);
  bool any_affine = false;
  for (auto comp : dg.components(dg.all())) {
    RMatrix c = principal_submatrix(a, comp);
    if (!is_symmetrizable(c)) return CartanType::Indefinite;
    auto d = symmetrizer(c);
    // a_ij d_j symmetric; its signature is the type
    RMatrix s = c;
    for (const auto& [k, x] : c.entries()) s.set(k.first, k.second, x * d[k.second]);
    const unsigned m = comp.size();
    bool pd = true, psd = true;
    for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << m); ++sub) {
      Rational det = determinant(principal_submatrix(s, VertexSet(sub)));
      if (det < 0) psd = false;
      if (det <= 0) pd = false;
    }
    std::size_t r = rank(c);
    if (pd) continue;
    if (psd && r + 1 == m) {
      any_affine = true;
      continue;
    }
    return CartanType::Indefinite;
  }
  return any_affine ? CartanType::Affine : CartanType::Finite;
}

std::string to_string(CartanType t) {
  switch (t) {
    case CartanType::Finite: return "finite";
    case CartanType::Affine: return "affine";
    case CartanType::Indefinite: return "indefinite";
    case CartanType::NotGcm: return "not-gcm";
  }
  return "?";
}

}  // namespace coxkit
