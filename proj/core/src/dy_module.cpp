#include "coxkit/dy_module.hpp"

#include <string>

namespace coxkit {

namespace {

void check_shapes(const DYModule& v) {
  const std::size_t n = v.base.dim();
  if (v.action.size() != n || v.coaction.size() != n)
    throw DimensionMismatch("DY module: expected " + std::to_string(n) + " action and coaction matrices");
  for (const auto* family : {&v.action, &v.coaction})
    for (const auto& m : *family)
      if (m.rows() != v.dim || m.cols() != v.dim) throw DimensionMismatch("DY module: operator shape " + m.shape());
}

void same_base(const DYModule& v, const DYModule& w) {
  if (!(v.base == w.base)) throw InvalidInput("DY modules over different Lie bialgebras");
}

RMatrix stacked(const std::vector<RMatrix>& ms, bool horizontal, std::size_t dim) {
  RMatrix out = horizontal ? RMatrix(dim, 0) : RMatrix(0, dim);
  for (const auto& m : ms) out = horizontal ? RMatrix::hstack(out, m) : RMatrix::vstack(out, m);
  return out;
}

std::string degree_note(std::optional<std::size_t> k) {
  return k ? "differs at hbar^" + std::to_string(*k) : "";
}

}  // namespace

Report verify_dy(const DYModule& v) {
  check_shapes(v);
  Report r;
  const std::size_t n = v.base.dim();
  const LieAlgebra& g = v.base.lie();
  std::string bad;
  for (std::size_t a = 0; a < n && bad.empty(); ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      RMatrix rhs(v.dim, v.dim);
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(g.c(a, b, k)) != 0) rhs += v.action[k] * g.c(a, b, k);
      if (!(commutator(v.action[a], v.action[b]) == rhs)) {
        bad = "[pi(x_" + std::to_string(a) + "), pi(x_" + std::to_string(b) + ")] != pi([x_a,x_b])";
        break;
      }
    }
  r.add("action", bad.empty(), bad);
  bad.clear();
  for (std::size_t p = 0; p < n && bad.empty(); ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      RMatrix rhs(v.dim, v.dim);
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(v.base.d(k, p, q)) != 0) rhs += v.coaction[k] * v.base.d(k, p, q);
      if (!(commutator(v.coaction[p], v.coaction[q]) == rhs)) {
        bad = "coaction fails on (x^" + std::to_string(p) + ", x^" + std::to_string(q) + ")";
        break;
      }
    }
  r.add("coaction", bad.empty(), bad);

  // pi* pi - (id (x) pi)(12)(id (x) pi*) = ([,] (x) id)(id (x) pi*) - (id (x) pi)(delta (x) id)
  const RMatrix pi = stacked(v.action, true, v.dim);
  const RMatrix co = stacked(v.coaction, false, v.dim);
  const RMatrix in = RMatrix::identity(n), iv = RMatrix::identity(v.dim);
  const RMatrix id_pi = in.kron(pi), id_co = in.kron(co);
  RMatrix lhs = co * pi - id_pi * flip_matrix<Rational>(n, n).kron(iv) * id_co;
  RMatrix rhs = g.bracket_matrix().kron(iv) * id_co - id_pi * v.base.cobracket_matrix().kron(iv);
  bool ok = lhs == rhs;
  r.add("compatibility", ok, ok ? "" : "action/coaction compatibility fails in End(b (x) V)");
  return r;
}

DYModule dy_trivial(const LieBialgebra& base, std::size_t dim) {
  return {base, dim, std::vector<RMatrix>(base.dim(), RMatrix(dim, dim)),
          std::vector<RMatrix>(base.dim(), RMatrix(dim, dim))};
}

DYModule dy_from_double_rep(const LieBialgebra& base, const std::vector<RMatrix>& rho) {
  const std::size_t n = base.dim();
  if (rho.size() != 2 * n) throw DimensionMismatch("dy_from_double_rep: need 2n matrices");
  DYModule v{base, rho.empty() ? 0 : rho[0].rows(), {}, {}};
  v.action.assign(rho.begin(), rho.begin() + n);
  v.coaction.assign(rho.begin() + n, rho.end());
  check_shapes(v);
  return v;
}

DYModule dy_adjoint_of_double(const LieBialgebra& base) {
  DrinfeldDouble d = drinfeld_double(base);
  std::vector<RMatrix> rho;
  for (std::size_t j = 0; j < d.g.dim(); ++j) rho.push_back(d.g.lie().ad(j));
  return dy_from_double_rep(base, rho);
}

DYModule dy_from_manin(const ManinTriple& t, const std::vector<RMatrix>& rho) {
  if (rho.size() != t.g.dim()) throw DimensionMismatch("dy_from_manin: one matrix per basis vector of g");
  const std::size_t dim = rho.empty() ? 0 : rho[0].rows();
  auto combine = [&](const RMatrix& coords, std::size_t col) {
    RMatrix m(dim, dim);
    for (std::size_t j = 0; j < coords.rows(); ++j) {
      Rational c = coords.at(j, col);
      if (sgn(c) != 0) m += rho[j] * c;
    }
    return m;
  };
  DYModule v{manin_bialgebra(t), dim, {}, {}};
  RMatrix y = dual_basis(t);
  for (std::size_t k = 0; k < t.minus.cols(); ++k) {
    v.action.push_back(combine(t.minus, k));
    v.coaction.push_back(combine(y, k));
  }
  return v;
}

DYModule dy_tensor(const DYModule& v, const DYModule& w) {
  same_base(v, w);
  check_shapes(v);
  check_shapes(w);
  const RMatrix iv = RMatrix::identity(v.dim), iw = RMatrix::identity(w.dim);
  DYModule t{v.base, v.dim * w.dim, {}, {}};
  for (std::size_t k = 0; k < v.base.dim(); ++k) {
    t.action.push_back(v.action[k].kron(iw) + iv.kron(w.action[k]));
    t.coaction.push_back(v.coaction[k].kron(iw) + iv.kron(w.coaction[k]));
  }
  return t;
}

RPair dy_r_matrix(const DYModule& v, const DYModule& w) {
  same_base(v, w);
  RMatrix r(v.dim * w.dim, v.dim * w.dim), r21 = r;
  for (std::size_t k = 0; k < v.base.dim(); ++k) {
    r += v.action[k].kron(w.coaction[k]);
    r21 += v.coaction[k].kron(w.action[k]);
  }
  return {r, r + r21};
}

RMatrix double_casimir(const DYModule& v, const DYModule& w) {
  same_base(v, w);
  DrinfeldDouble d = drinfeld_double(v.base);
  RMatrix ginv = inverse(d.form);
  const std::size_t n = d.half;
  auto rho = [n](const DYModule& m, std::size_t i) -> const RMatrix& {
    return i < n ? m.action[i] : m.coaction[i - n];
  };
  RMatrix c(v.dim * w.dim, v.dim * w.dim);
  for (const auto& [key, g] : ginv.entries()) c += rho(v, key.first).kron(rho(w, key.second)) * g;
  return c;
}

Report omega_morphism_check(const DYModule& v, const DYModule& w) {
  Report r;
  const RMatrix omega = dy_r_matrix(v, w).omega;
  const DYModule t = dy_tensor(v, w);
  bool act = true, coact = true;
  for (std::size_t k = 0; k < t.base.dim(); ++k) {
    act = act && commutator(omega, t.action[k]).is_zero();
    coact = coact && commutator(omega, t.coaction[k]).is_zero();
  }
  r.add("omega commutes with action", act);
  r.add("omega intertwines coaction", coact);
  r.add("omega equals double casimir", omega == double_casimir(v, w));
  return r;
}

RMatrix leg_operator(const std::vector<std::size_t>& dims, std::size_t leg, const RMatrix& m) {
  if (leg >= dims.size()) throw DimensionMismatch("leg_operator: leg out of range");
  RMatrix out = RMatrix::identity(1);
  for (std::size_t i = 0; i < dims.size(); ++i) out = out.kron(i == leg ? m : RMatrix::identity(dims[i]));
  return out;
}

RMatrix cybe_defect(const DYModule& a, const DYModule& b, const DYModule& c) {
  same_base(a, b);
  same_base(a, c);
  const std::vector<std::size_t> dims{a.dim, b.dim, c.dim};
  const std::size_t total = a.dim * b.dim * c.dim;
  RMatrix r12(total, total), r13(total, total), r23(total, total);
  for (std::size_t k = 0; k < a.base.dim(); ++k) {
    r12 += leg_operator(dims, 0, a.action[k]) * leg_operator(dims, 1, b.coaction[k]);
    r13 += leg_operator(dims, 0, a.action[k]) * leg_operator(dims, 2, c.coaction[k]);
    r23 += leg_operator(dims, 1, b.action[k]) * leg_operator(dims, 2, c.coaction[k]);
  }
  return commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23);
}

RMatrix omega_between(const std::vector<DYModule>& legs, const std::vector<std::size_t>& a,
                      const std::vector<std::size_t>& b) {
  std::vector<std::size_t> dims;
  std::size_t total = 1;
  for (const auto& m : legs) {
    same_base(legs[0], m);
    dims.push_back(m.dim);
    total *= m.dim;
  }
  RMatrix out(total, total);
  for (auto i : a)
    for (auto j : b)
      for (std::size_t k = 0; k < legs[0].base.dim(); ++k) {
        out += leg_operator(dims, i, legs[i].action[k]) * leg_operator(dims, j, legs[j].coaction[k]);
        out += leg_operator(dims, i, legs[i].coaction[k]) * leg_operator(dims, j, legs[j].action[k]);
      }
  return out;
}

Report check_associator_axioms_truncated(const std::vector<DYModule>& modules, std::size_t order,
                                         const Rational& coefficient) {
  if (modules.size() != 4) throw InvalidInput("associator check needs four modules");
  if (order > 2) throw InvalidInput("associator check supports truncation order at most 2");
  using Series = TruncatedSeries<Rational>;
  using Legs = std::vector<std::size_t>;

  auto phi = [&](const std::vector<DYModule>& legs, const Legs& a, const Legs& b, const Legs& c) {
    RMatrix x = commutator(omega_between(legs, a, b), omega_between(legs, b, c)) * coefficient;
    return Series::identity(x.rows(), order) + Series::monomial(x, 2, order);
  };
  auto r = [&](const std::vector<DYModule>& legs, const Legs& a, const Legs& b) {
    return series_exp(omega_between(legs, a, b) * make_rational(1, 2), 1, order);
  };

  Report rep;
  const std::vector<DYModule> four = modules;
  const std::vector<DYModule> three(modules.begin(), modules.begin() + 3);

  Series lhs = phi(four, {0}, {1}, {2, 3}) * phi(four, {0, 1}, {2}, {3});
  Series rhs = phi(four, {1}, {2}, {3}) * phi(four, {0}, {1, 2}, {3}) * phi(four, {0}, {1}, {2});
  auto diff = lhs.first_difference(rhs);
  rep.add("pentagon", !diff, degree_note(diff));

  Series p123 = phi(three, {0}, {1}, {2});
  lhs = r(three, {0, 1}, {2});
  rhs = phi(three, {2}, {0}, {1}) * r(three, {0}, {2}) * phi(three, {0}, {2}, {1}).inverse() * r(three, {1}, {2}) *
        p123;
  diff = lhs.first_difference(rhs);
  rep.add("hexagon 1", !diff, degree_note(diff));

  lhs = r(three, {0}, {1, 2});
  rhs = phi(three, {1}, {2}, {0}).inverse() * r(three, {0}, {2}) * phi(three, {1}, {0}, {2}) * r(three, {0}, {1}) *
        p123.inverse();
  diff = lhs.first_difference(rhs);
  rep.add("hexagon 2", !diff, degree_note(diff));

  diff = phi(three, {2}, {1}, {0}).first_difference(p123.inverse());
  rep.add("duality", !diff, degree_note(diff));
  return rep;
}

}  // namespace coxkit
