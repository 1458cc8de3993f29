#include "coxkit/km_models.hpp"

#include <algorithm>
#include <map>

namespace coxkit {

namespace {

RMatrix unit(std::size_t n, std::size_t r, std::size_t c, long v = 1) {
  RMatrix m(n, n);
  m.set(r, c, Rational(v));
  return m;
}

long entry(const RMatrix& a, std::size_t i, std::size_t j) { return a.at(i, j).get_num().get_si(); }

// Path order of a connected simply-laced component, or empty if it is not a path.
std::vector<unsigned> path_order(const RMatrix& a, VertexSet comp) {
  auto vs = comp.vertices();
  Diagram d = diagram_of(a);
  unsigned start = vs[0];
  for (unsigned v : vs) {
    unsigned deg = 0;
    for (unsigned w : vs)
      if (w != v && d.adjacent(v, w)) ++deg;
    if (deg > 2) return {};
    if (deg <= 1) {
      start = v;
      break;
    }
  }
  std::vector<unsigned> order{start};
  VertexSet seen = VertexSet::single(start);
  while (order.size() < vs.size()) {
    bool moved = false;
    for (unsigned w : vs)
      if (!seen.contains(w) && d.adjacent(order.back(), w)) {
        order.push_back(w);
        seen = seen | VertexSet::single(w);
        moved = true;
        break;
      }
    if (!moved) return {};
  }
  return order;
}

struct Block {
  std::vector<unsigned> vertices;
  std::vector<RMatrix> e, f, h;  // indexed like `vertices`
};

Block sl_block(const std::vector<unsigned>& order) {
  const std::size_t n = order.size() + 1;
  Block b{order, {}, {}, {}};
  for (std::size_t t = 0; t < order.size(); ++t) {
    b.e.push_back(unit(n, t, t + 1));
    b.f.push_back(unit(n, t + 1, t));
    b.h.push_back(unit(n, t, t) - unit(n, t + 1, t + 1));
  }
  return b;
}

// 4-dim model of B2/C2. `shortv` has a_{short,long} = -2.
Block rank2_block(unsigned shortv, unsigned longv) {
  Block b{{shortv, longv}, {}, {}, {}};
  b.e = {unit(4, 0, 1) - unit(4, 2, 3), unit(4, 1, 2)};
  b.f = {unit(4, 1, 0) - unit(4, 3, 2), unit(4, 2, 1)};
  b.h = {unit(4, 0, 0) - unit(4, 1, 1) + unit(4, 2, 2) - unit(4, 3, 3), unit(4, 1, 1) - unit(4, 2, 2)};
  return b;
}

RMatrix embed(const RMatrix& m, std::size_t offset, std::size_t total) {
  RMatrix out(total, total);
  for (const auto& [k, v] : m.entries()) out.set(k.first + offset, k.second + offset, v);
  return out;
}

bool in_span(const RMatrix& basis, const RMatrix& v) { return coordinates_in(basis, v).has_value(); }

RMatrix generator(const std::vector<RMatrix>& e, const std::vector<RMatrix>& f, const std::vector<RMatrix>& h,
                  const RMatrix& ainv, std::size_t g) {
  const std::size_t n = h.size();
  if (g < n) return h[g];
  if (g < 2 * n) {
    RMatrix out(h[0].rows(), h[0].cols());
    for (std::size_t j = 0; j < n; ++j)
      if (sgn(ainv.at(g - n, j)) != 0) out += h[j] * ainv.at(g - n, j);
    return out;
  }
  if (g < 3 * n) return e[g - 2 * n];
  return f[g - 3 * n];
}

}  // namespace

Report chevalley_check(const ChevalleyModule& m) {
  Report r;
  const std::size_t n = m.rank();
  if (m.e.size() != n || m.f.size() != n || m.h.size() != n) throw DimensionMismatch("chevalley module: generator count");
  std::string bad;
  for (std::size_t i = 0; i < n && bad.empty(); ++i)
    for (std::size_t j = 0; j < n && bad.empty(); ++j) {
      const Rational& aji = m.cartan.at(j, i);
      if (!commutator(m.h[i], m.h[j]).is_zero()) bad = "[h,h] != 0";
      else if (!(commutator(m.h[j], m.e[i]) == m.e[i] * aji)) bad = "[h_j,e_i] != a_ji e_i";
      else if (!(commutator(m.h[j], m.f[i]) == m.f[i] * (-aji))) bad = "[h_j,f_i] != -a_ji f_i";
      else if (!(commutator(m.e[i], m.f[j]) == (i == j ? m.h[i] : RMatrix(m.dim(), m.dim()))))
        bad = "[e_i,f_j] != delta_ij h_i";
      if (!bad.empty()) bad += " at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  r.add("cartan relations", bad.empty(), bad);
  bad.clear();
  for (std::size_t i = 0; i < n && bad.empty(); ++i)
    for (std::size_t j = 0; j < n && bad.empty(); ++j) {
      if (i == j) continue;
      long k = 1 - entry(m.cartan, i, j);
      RMatrix x = m.e[j], y = m.f[j];
      for (long t = 0; t < k; ++t) {
        x = commutator(m.e[i], x);
        y = commutator(m.f[i], y);
      }
      if (!x.is_zero() || !y.is_zero()) bad = "Serre fails for (" + std::to_string(i) + "," + std::to_string(j) + ")";
    }
  r.add("serre", bad.empty(), bad);
  return r;
}

ChevalleyModule defining_module(const RMatrix& a) {
  const std::size_t n = a.rows();
  if (cartan_type(a) != CartanType::Finite) throw InvalidInput("defining_module: A must be of finite type");
  Diagram d = diagram_of(a);
  std::vector<Block> blocks;
  for (VertexSet comp : d.components(VertexSet::range(static_cast<unsigned>(n)))) {
    auto vs = comp.vertices();
    if (vs.size() == 2 && entry(a, vs[0], vs[1]) * entry(a, vs[1], vs[0]) == 2) {
      bool first_short = entry(a, vs[0], vs[1]) == -2;
      blocks.push_back(first_short ? rank2_block(vs[0], vs[1]) : rank2_block(vs[1], vs[0]));
      continue;
    }
    bool laced = true;
    for (unsigned i : vs)
      for (unsigned j : vs)
        if (i != j && entry(a, i, j) != 0 && entry(a, i, j) != -1) laced = false;
    auto order = laced ? path_order(a, comp) : std::vector<unsigned>{};
    if (order.empty()) throw InvalidInput("defining_module: only types A_n and B2/C2 have matrix models");
    blocks.push_back(sl_block(order));
  }
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.e[0].rows();
  ChevalleyModule m{a, std::vector<RMatrix>(n), std::vector<RMatrix>(n), std::vector<RMatrix>(n)};
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::size_t t = 0; t < b.vertices.size(); ++t) {
      m.e[b.vertices[t]] = embed(b.e[t], offset, total);
      m.f[b.vertices[t]] = embed(b.f[t], offset, total);
      m.h[b.vertices[t]] = embed(b.h[t], offset, total);
    }
    offset += b.e[0].rows();
  }
  return m;
}

ChevalleyModule trivial_module(const RMatrix& a, std::size_t dim) {
  const std::size_t n = a.rows();
  return {a, std::vector<RMatrix>(n, RMatrix(dim, dim)), std::vector<RMatrix>(n, RMatrix(dim, dim)),
          std::vector<RMatrix>(n, RMatrix(dim, dim))};
}

ChevalleyModule dual_module(const ChevalleyModule& m) {
  ChevalleyModule out{m.cartan, {}, {}, {}};
  for (std::size_t i = 0; i < m.rank(); ++i) {
    out.e.push_back(-m.e[i].transpose());
    out.f.push_back(-m.f[i].transpose());
    out.h.push_back(-m.h[i].transpose());
  }
  return out;
}

ChevalleyModule tensor_module(const ChevalleyModule& v, const ChevalleyModule& w) {
  if (!(v.cartan == w.cartan)) throw InvalidInput("tensor_module: different Cartan matrices");
  const RMatrix iv = RMatrix::identity(v.dim()), iw = RMatrix::identity(w.dim());
  ChevalleyModule out{v.cartan, {}, {}, {}};
  for (std::size_t i = 0; i < v.rank(); ++i) {
    out.e.push_back(v.e[i].kron(iw) + iv.kron(w.e[i]));
    out.f.push_back(v.f[i].kron(iw) + iv.kron(w.f[i]));
    out.h.push_back(v.h[i].kron(iw) + iv.kron(w.h[i]));
  }
  return out;
}

ChevalleyModule adjoint_module(const RMatrix& a) {
  KMModel model = build_km_model(a, false);
  const std::size_t n = a.rows();
  ChevalleyModule out{a, std::vector<RMatrix>(n), std::vector<RMatrix>(n), std::vector<RMatrix>(n)};
  for (std::size_t j = 0; j < model.dim(); ++j) {
    auto [op, g] = model.recipe[j];
    if (op != -1) continue;
    if (g < n) out.h[g] = model.lie.ad(j);
    else if (g >= 2 * n && g < 3 * n) out.e[g - 2 * n] = model.lie.ad(j);
    else if (g >= 3 * n) out.f[g - 3 * n] = model.lie.ad(j);
  }
  return out;
}

ChevalleyModule restrict_module(const ChevalleyModule& m, const RMatrix& basis) {
  auto restrict_one = [&](const RMatrix& x) {
    auto sol = solve_linear(basis, x * basis);
    if (!sol.consistent) throw InvalidInput("restrict_module: subspace is not invariant");
    return sol.particular;
  };
  ChevalleyModule out{m.cartan, {}, {}, {}};
  for (std::size_t i = 0; i < m.rank(); ++i) {
    out.e.push_back(restrict_one(m.e[i]));
    out.f.push_back(restrict_one(m.f[i]));
    out.h.push_back(restrict_one(m.h[i]));
  }
  return out;
}

ChevalleyModule highest_weight_submodule(const ChevalleyModule& m, const std::vector<long>& weight) {
  const std::size_t n = m.rank(), dim = m.dim();
  if (weight.size() != n) throw DimensionMismatch("highest_weight_submodule: weight length");
  RMatrix conditions(0, dim);
  for (std::size_t i = 0; i < n; ++i) {
    conditions = RMatrix::vstack(conditions, m.h[i] - RMatrix::identity(dim) * Rational(weight[i]));
    conditions = RMatrix::vstack(conditions, m.e[i]);
  }
  RMatrix ker = kernel_basis(conditions);
  if (ker.cols() == 0) throw InvalidInput("highest_weight_submodule: no highest-weight vector of that weight");
  RMatrix span = ker.select(iota(dim), {0});
  std::vector<RMatrix> queue{span};
  for (std::size_t q = 0; q < queue.size(); ++q)
    for (std::size_t i = 0; i < n; ++i) {
      RMatrix y = m.f[i] * queue[q];
      if (y.is_zero() || in_span(span, y)) continue;
      span = RMatrix::hstack(span, y);
      queue.push_back(y);
    }
  return restrict_module(m, span);
}

RMatrix nilpotent_exp(const RMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("nilpotent_exp: non-square matrix");
  RMatrix result = RMatrix::identity(m.rows()), term = result;
  for (std::size_t k = 1; k <= m.rows() + 1; ++k) {
    term = term * m * make_rational(1, static_cast<long>(k));
    if (term.is_zero()) return result;
    result += term;
  }
  throw InvalidInput("nilpotent_exp: matrix is not nilpotent");
}

RMatrix tits_operator(const ChevalleyModule& m, std::size_t i) {
  if (i >= m.rank()) throw InvalidInput("tits_operator: vertex out of range");
  RMatrix ee = nilpotent_exp(m.e[i]);
  return ee * nilpotent_exp(-m.f[i]) * ee;
}

KMModel build_km_model(const RMatrix& a, bool extended) {
  const std::size_t n = a.rows();
  ChevalleyModule def = defining_module(a);
  const RMatrix ainv = inverse(a);
  std::vector<RMatrix> e = def.e, f = def.f, h = def.h;
  if (extended) {
    const std::size_t base = def.dim(), total = base + n;
    for (std::size_t i = 0; i < n; ++i) {
      e[i] = embed(e[i], 0, total);
      f[i] = embed(f[i], 0, total);
      h[i] = embed(h[i], 0, total);
    }
  }
  auto gen = [&](std::size_t g) {
    RMatrix x = generator(e, f, h, ainv, g);
    if (extended && g >= n && g < 2 * n) x.set(def.dim() + (g - n), def.dim() + (g - n), Rational(1));
    return x;
  };

  KMModel model;
  model.cartan = a;
  model.extended = extended;
  model.d = symmetrizer(a);
  for (std::size_t i = 0; i < n; ++i) {
    model.basis.push_back(gen(i));
    model.recipe.push_back({-1, i});
  }
  if (extended)
    for (std::size_t i = 0; i < n; ++i) {
      model.basis.push_back(gen(n + i));
      model.recipe.push_back({-1, n + i});
    }
  model.cartan_dim = model.basis.size();

  // Root vectors layer by height; root spaces of finite type are lines.
  std::vector<std::vector<long>> roots;
  for (int sign : {1, -1}) {
    const std::size_t gen_offset = sign > 0 ? 2 * n : 3 * n;
    std::vector<std::pair<std::vector<long>, std::size_t>> layer;
    std::map<std::vector<long>, std::size_t> seen;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<long> root(n, 0);
      root[i] = 1;
      model.basis.push_back(gen(gen_offset + i));
      model.recipe.push_back({-1, gen_offset + i});
      seen[root] = model.basis.size() - 1;
      layer.push_back({root, model.basis.size() - 1});
    }
    auto& out = sign > 0 ? model.positive : model.negative;
    for (auto& [root, idx] : layer) {
      out.push_back(idx);
      if (sign > 0) roots.push_back(root);
    }
    while (!layer.empty()) {
      std::map<std::vector<long>, std::pair<RMatrix, std::pair<long, std::size_t>>> next;
      for (const auto& [root, idx] : layer)
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<long> r = root;
          ++r[i];
          if (seen.count(r) || next.count(r)) continue;
          RMatrix y = commutator(gen(gen_offset + i), model.basis[idx]);
          if (!y.is_zero()) next.emplace(r, std::make_pair(y, std::make_pair(static_cast<long>(gen_offset + i), idx)));
        }
      layer.clear();
      for (auto& [r, payload] : next) {
        model.basis.push_back(payload.first);
        model.recipe.push_back(payload.second);
        seen[r] = model.basis.size() - 1;
        layer.push_back({r, model.basis.size() - 1});
        out.push_back(model.basis.size() - 1);
        if (sign > 0) roots.push_back(r);
      }
    }
  }
  model.positive_roots = roots;
  model.lie = lie_algebra_from_matrices(model.basis);

  // Invariant form: unknown symmetric Gram matrix with the Cartan block
  // prescribed. Pairings between non-opposite weights vanish, and ad-skewness
  // for the generators e_i, f_i implies it for everything.
  const std::size_t dim = model.dim();
  std::vector<std::vector<long>> weight(dim, std::vector<long>(n, 0));
  for (std::size_t r = 0; r < model.positive.size(); ++r) {
    weight[model.positive[r]] = model.positive_roots[r];
    for (std::size_t i = 0; i < n; ++i) weight[model.negative[r]][i] = -model.positive_roots[r][i];
  }
  auto opposite = [&](std::size_t i, std::size_t j) {
    for (std::size_t t = 0; t < n; ++t)
      if (weight[i][t] + weight[j][t] != 0) return false;
    return true;
  };
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> var;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j)
      if (opposite(i, j)) var[{i, j}] = var.size();
  auto idx = [&](std::size_t i, std::size_t j) -> std::optional<std::size_t> {
    auto it = var.find({std::min(i, j), std::max(i, j)});
    if (it == var.end()) return std::nullopt;
    return it->second;
  };
  std::vector<std::pair<std::map<std::size_t, Rational>, Rational>> eqs;
  const LieAlgebra& g = model.lie;
  for (std::size_t x = 0; x < dim; ++x) {
    if (model.recipe[x].first != -1 || model.recipe[x].second < 2 * n) continue;
    for (std::size_t y = 0; y < dim; ++y)
      for (std::size_t z = 0; z < dim; ++z) {
        std::map<std::size_t, Rational> row;
        for (std::size_t k = 0; k < dim; ++k) {
          if (sgn(g.c(x, y, k)) != 0)
            if (auto v = idx(k, z)) row[*v] += g.c(x, y, k);
          if (sgn(g.c(x, z, k)) != 0)
            if (auto v = idx(y, k)) row[*v] += g.c(x, z, k);
        }
        std::erase_if(row, [](const auto& kv) { return sgn(kv.second) == 0; });
        if (!row.empty()) eqs.push_back({std::move(row), Rational(0)});
      }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      eqs.push_back({{{*idx(i, j), Rational(1)}}, model.d[i] * a.at(j, i)});
      if (extended) {
        eqs.push_back({{{*idx(i, n + j), Rational(1)}}, i == j ? model.d[i] : Rational(0)});
        eqs.push_back({{{*idx(n + i, n + j), Rational(1)}}, Rational(0)});
      }
    }
  RMatrix lhs(eqs.size(), var.size()), rhs(eqs.size(), 1);
  for (std::size_t r = 0; r < eqs.size(); ++r) {
    for (const auto& [c, v] : eqs[r].first) lhs.add_to(r, c, v);
    rhs.set(r, 0, eqs[r].second);
  }
  auto sol = solve_linear(lhs, rhs);
  if (!sol.consistent || sol.kernel.cols() != 0) throw Error("build_km_model: invariant form is not unique");
  model.form = RMatrix(dim, dim);
  for (const auto& [key, c] : var) {
    model.form.set(key.first, key.second, sol.particular.at(c, 0));
    model.form.set(key.second, key.first, sol.particular.at(c, 0));
  }
  return model;
}

std::vector<RMatrix> represent(const KMModel& model, const ChevalleyModule& m) {
  if (!(m.cartan == model.cartan)) throw InvalidInput("represent: module over a different Cartan matrix");
  const RMatrix ainv = inverse(model.cartan);
  std::vector<RMatrix> out;
  for (const auto& [op, g] : model.recipe) {
    if (op == -1) out.push_back(generator(m.e, m.f, m.h, ainv, g));
    else out.push_back(commutator(generator(m.e, m.f, m.h, ainv, static_cast<std::size_t>(op)), out.at(g)));
  }
  return out;
}

ManinTriple manin_triple_of_model(const KMModel& model) {
  const std::size_t dim = model.dim(), m = model.cartan_dim, total = dim + m;
  ManinTriple t;
  t.g = LieAlgebra(total);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k) t.g.c(i, j, k) = model.lie.c(i, j, k);
  t.form = RMatrix(total, total);
  for (const auto& [k, v] : model.form.entries()) {
    t.form.set(k.first, k.second, v);
    if (k.first < m && k.second < m) t.form.set(dim + k.first, dim + k.second, -v);
  }
  t.minus = RMatrix(total, m + model.negative.size());
  t.plus = RMatrix(total, m + model.positive.size());
  for (std::size_t c = 0; c < m; ++c) {
    t.minus.set(c, c, Rational(1));
    t.minus.set(dim + c, c, Rational(-1));
    t.plus.set(c, c, Rational(1));
    t.plus.set(dim + c, c, Rational(1));
  }
  for (std::size_t r = 0; r < model.negative.size(); ++r) t.minus.set(model.negative[r], m + r, Rational(1));
  for (std::size_t r = 0; r < model.positive.size(); ++r) t.plus.set(model.positive[r], m + r, Rational(1));
  return t;
}

DYModule dy_module_of(const KMModel& model, const ManinTriple& triple, const ChevalleyModule& m) {
  std::vector<RMatrix> rho = represent(model, m);
  for (std::size_t c = 0; c < model.cartan_dim; ++c) rho.emplace_back(m.dim(), m.dim());
  return dy_from_manin(triple, rho);
}

BorelPiece extended_borel(const KMModel& model, VertexSet b) {
  if (!model.extended) throw InvalidInput("extended_borel: model must be extended");
  const std::size_t n = model.rank(), dim = model.dim(), m = model.cartan_dim;
  BorelPiece piece;
  for (unsigned i : b.vertices()) {
    piece.indices.push_back(i);
    piece.roots.push_back(std::vector<long>(n, 0));
  }
  for (unsigned i : b.vertices()) {
    piece.indices.push_back(n + i);
    piece.roots.push_back(std::vector<long>(n, 0));
  }
  std::vector<std::size_t> plus_idx;
  for (std::size_t r = 0; r < model.negative.size(); ++r) {
    const auto& root = model.positive_roots[r];
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i)
      if (root[i] != 0 && !b.contains(static_cast<unsigned>(i))) inside = false;
    if (!inside) continue;
    piece.indices.push_back(model.negative[r]);
    plus_idx.push_back(model.positive[r]);
    std::vector<long> neg = root;
    for (auto& x : neg) x = -x;
    piece.roots.push_back(neg);
  }
  ManinTriple full = manin_triple_of_model(model);
  const std::size_t k = piece.indices.size(), cart = 2 * b.size();
  ManinTriple t{full.g, full.form, RMatrix(dim + m, k), RMatrix(dim + m, k)};
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t j = piece.indices[c];
    if (c < cart) {
      for (std::size_t row = 0; row < dim + m; ++row) {
        t.minus.set(row, c, full.minus.at(row, j));
        t.plus.set(row, c, full.plus.at(row, j));
      }
    } else {
      t.minus.set(j, c, Rational(1));
      t.plus.set(plus_idx[c - cart], c, Rational(1));
    }
  }
  piece.bialgebra = manin_bialgebra(t);
  return piece;
}

SplitPair split_borel_fixture(const RMatrix& a, VertexSet b, VertexSet b_prime) {
  if (!b_prime.subset_of(b)) throw InvalidInput("split_borel_fixture: B' must be contained in B");
  KMModel model = build_km_model(a, true);
  BorelPiece big = extended_borel(model, b), small = extended_borel(model, b_prime);
  const std::size_t nb = big.indices.size(), ns = small.indices.size();
  SplitPair s{small.bialgebra, big.bialgebra, RMatrix(nb, ns), RMatrix(ns, nb), big.roots};
  std::map<std::size_t, std::size_t> pos_big, pos_small;
  for (std::size_t c = 0; c < nb; ++c) pos_big[big.indices[c]] = c;
  for (std::size_t c = 0; c < ns; ++c) pos_small[small.indices[c]] = c;
  for (std::size_t c = 0; c < ns; ++c) s.i.set(pos_big.at(small.indices[c]), c, Rational(1));

  // Cartan part: orthogonal projection onto hbar_{B'} along its complement.
  std::vector<std::size_t> small_cartan;
  for (std::size_t c = 0; c < 2 * b_prime.size(); ++c) small_cartan.push_back(small.indices[c]);
  RMatrix gram = model.form.select(small_cartan, small_cartan);
  RMatrix gram_inv = small_cartan.empty() ? RMatrix(0, 0) : inverse(gram);
  for (std::size_t c = 0; c < nb; ++c) {
    std::size_t j = big.indices[c];
    if (c < 2 * b.size()) {
      if (small_cartan.empty()) continue;
      RMatrix coords = gram_inv * model.form.select(small_cartan, {j});
      for (std::size_t r = 0; r < small_cartan.size(); ++r) s.p.set(r, c, coords.at(r, 0));
    } else if (auto it = pos_small.find(j); it != pos_small.end()) {
      s.p.set(it->second, c, Rational(1));
    }
  }
  return s;
}

Report split_pair_check(const SplitPair& s) {
  Report r;
  r.merge("small: ", verify_bialgebra(s.small));
  r.merge("big: ", verify_bialgebra(s.big));
  r.merge("i: ", bialgebra_morphism_check(s.small, s.big, s.i));
  r.merge("p: ", bialgebra_morphism_check(s.big, s.small, s.p));
  r.add("p o i = id", s.p * s.i == RMatrix::identity(s.small.dim()));
  return r;
}

}  // namespace coxkit
