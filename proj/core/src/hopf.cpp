#include "coxkit/hopf.hpp"

#include <map>
#include <string>

#include "coxkit/linear_solve.hpp"

namespace coxkit {

namespace {

using Element = std::map<std::size_t, Rational>;

// prod[i * d + j] lists the nonzero coefficients of e_i e_j.
struct Table {
  std::size_t d = 0;
  std::vector<std::vector<std::pair<std::size_t, Rational>>> prod;
};

Table table_of(const HopfAlgebra& h) {
  Table t{h.dim, std::vector<std::vector<std::pair<std::size_t, Rational>>>(h.dim * h.dim)};
  for (const auto& [key, v] : h.mult.entries()) t.prod[key.second].push_back({key.first, v});
  return t;
}

std::size_t ipow(std::size_t d, std::size_t k) {
  std::size_t r = 1;
  while (k--) r *= d;
  return r;
}

Element to_element(const RMatrix& column) {
  Element e;
  for (const auto& [key, v] : column.entries()) e.emplace(key.first, v);
  return e;
}

RMatrix to_column(const Element& e, std::size_t size) {
  RMatrix c(size, 1);
  for (const auto& [i, v] : e)
    if (sgn(v) != 0) c.set(i, 0, v);
  return c;
}

Element multiply(const Table& t, const Element& x, const Element& y, std::size_t legs) {
  const std::size_t d = t.d;
  Element out;
  std::vector<std::pair<std::size_t, Rational>> terms, next;
  for (const auto& [ix, cx] : x)
    for (const auto& [iy, cy] : y) {
      terms.assign(1, {0, cx * cy});
      std::size_t scale = ipow(d, legs);
      for (std::size_t l = 0; l < legs; ++l) {
        scale /= d;
        std::size_t a = (ix / scale) % d, b = (iy / scale) % d;
        next.clear();
        for (const auto& [idx, c] : terms)
          for (const auto& [r, v] : t.prod[a * d + b]) next.push_back({idx * d + r, c * v});
        terms.swap(next);
      }
      for (auto& [idx, c] : terms) out[idx] += c;
    }
  for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
  return out;
}

Element basis_elt(std::size_t i) { return Element{{i, Rational(1)}}; }

Element column_elt(const RMatrix& m, std::size_t c) {
  Element e;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational v = m.at(r, c);
    if (sgn(v) != 0) e.emplace(r, v);
  }
  return e;
}

// Nonzero entries of column j of an (d^k x d) structure matrix, decoded.
std::vector<std::pair<std::vector<std::size_t>, Rational>> column_terms(const RMatrix& m, std::size_t j,
                                                                        std::size_t d, std::size_t legs) {
  std::vector<std::pair<std::vector<std::size_t>, Rational>> out;
  const RMatrix t = m.transpose();
  for (auto it = t.row_begin(j), end = t.row_end(j); it != end; ++it) {
    std::vector<std::size_t> idx(legs);
    std::size_t r = it->first.second;
    for (std::size_t l = legs; l-- > 0;) {
      idx[l] = r % d;
      r /= d;
    }
    out.push_back({idx, it->second});
  }
  return out;
}

RMatrix iterated_comult(const HopfAlgebra& h) {
  return h.comult.kron(RMatrix::identity(h.dim)) * h.comult;
}

void check_shapes(const HopfAlgebra& h) {
  const std::size_t d = h.dim;
  auto need = [](const RMatrix& m, std::size_t r, std::size_t c, const char* what) {
    if (m.rows() != r || m.cols() != c) throw DimensionMismatch(std::string("Hopf algebra: ") + what + " has shape " + m.shape());
  };
  need(h.mult, d, d * d, "multiplication");
  need(h.unit, d, 1, "unit");
  need(h.comult, d * d, d, "comultiplication");
  need(h.counit, 1, d, "counit");
  need(h.antipode, d, d, "antipode");
  need(h.antipode_inv, d, d, "antipode inverse");
}

void check_module_shapes(const HopfDYModule& v) {
  check_shapes(v.base);
  if (v.action.size() != v.base.dim || v.coaction.size() != v.base.dim)
    throw DimensionMismatch("Hopf DY module: one action and one coaction matrix per basis vector");
  for (const auto* family : {&v.action, &v.coaction})
    for (const auto& m : *family)
      if (m.rows() != v.dim || m.cols() != v.dim) throw DimensionMismatch("Hopf DY module: operator shape " + m.shape());
}

void same_base(const HopfDYModule& v, const HopfDYModule& w) {
  if (!(v.base.mult == w.base.mult && v.base.comult == w.base.comult))
    throw InvalidInput("Hopf DY modules over different Hopf algebras");
}

RMatrix combine(const std::vector<RMatrix>& ms, const RMatrix& coords, std::size_t col, std::size_t dim) {
  RMatrix out(dim, dim);
  for (std::size_t j = 0; j < coords.rows(); ++j) {
    Rational c = coords.at(j, col);
    if (sgn(c) != 0) out += ms[j] * c;
  }
  return out;
}

}  // namespace

RMatrix basis_element(std::size_t dim, std::size_t i) {
  RMatrix c(dim, 1);
  c.set(i, 0, Rational(1));
  return c;
}

RMatrix tensor_multiply(const HopfAlgebra& h, const RMatrix& x, const RMatrix& y, std::size_t legs) {
  const std::size_t size = ipow(h.dim, legs);
  if (x.rows() != size || y.rows() != size || x.cols() != 1 || y.cols() != 1)
    throw DimensionMismatch("tensor_multiply: elements must be columns of length d^legs");
  return to_column(multiply(table_of(h), to_element(x), to_element(y), legs), size);
}

Report verify_hopf(const HopfAlgebra& h) {
  check_shapes(h);
  const std::size_t d = h.dim;
  const RMatrix id = RMatrix::identity(d);
  const RMatrix& m = h.mult;
  const RMatrix& c = h.comult;
  Report r;
  r.add("associativity", m * m.kron(id) == m * id.kron(m));
  r.add("coassociativity", c.kron(id) * c == id.kron(c) * c);
  r.add("unit", m * h.unit.kron(id) == id && m * id.kron(h.unit) == id);
  r.add("counit", h.counit.kron(id) * c == id && id.kron(h.counit) * c == id);
  const RMatrix ue = h.unit * h.counit;
  r.add("antipode", m * h.antipode.kron(id) * c == ue && m * id.kron(h.antipode) * c == ue);
  r.add("antipode inverse", h.antipode * h.antipode_inv == id && h.antipode_inv * h.antipode == id);

  const Table t = table_of(h);
  std::string bad;
  for (std::size_t i = 0; i < d && bad.empty(); ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Element lhs;
      for (const auto& [k, v] : t.prod[i * d + j])
        for (const auto& [p, w] : column_elt(c, k)) lhs[p] += v * w;
      for (auto it = lhs.begin(); it != lhs.end();) it = sgn(it->second) == 0 ? lhs.erase(it) : std::next(it);
      if (lhs != multiply(t, column_elt(c, i), column_elt(c, j), 2)) {
        bad = "Delta(e_" + std::to_string(i) + " e_" + std::to_string(j) + ") != Delta(e_i) Delta(e_j)";
        break;
      }
    }
  r.add("comultiplication multiplicative", bad.empty(), bad);
  r.add("counit multiplicative", h.counit * m == h.counit.kron(h.counit));
  r.add("unit group-like", c * h.unit == h.unit.kron(h.unit) && h.counit * h.unit == RMatrix::identity(1));
  return r;
}

Report hopf_morphism_check(const HopfAlgebra& a, const HopfAlgebra& b, const RMatrix& m) {
  if (m.rows() != b.dim || m.cols() != a.dim) throw DimensionMismatch("hopf_morphism_check: map shape " + m.shape());
  Report r;
  const RMatrix mm = m.kron(m);
  r.add("multiplicative", m * a.mult == b.mult * mm);
  r.add("unital", m * a.unit == b.unit);
  r.add("comultiplicative", b.comult * m == mm * a.comult);
  r.add("counital", b.counit * m == a.counit);
  r.add("antipode", b.antipode * m == m * a.antipode);
  return r;
}

HopfAlgebra cyclic_group_algebra(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic_group_algebra: n must be positive");
  HopfAlgebra h{n, RMatrix(n, n * n), RMatrix(n, 1), RMatrix(n * n, n), RMatrix(1, n), RMatrix(n, n), RMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h.mult.set((i + j) % n, i * n + j, Rational(1));
    h.comult.set(i * n + i, i, Rational(1));
    h.counit.set(0, i, Rational(1));
    h.antipode.set((n - i) % n, i, Rational(1));
  }
  h.unit.set(0, 0, Rational(1));
  h.antipode_inv = h.antipode;
  return h;
}

HopfAlgebra sweedler_algebra() {
  // g^a x^b has index a + 2b.
  HopfAlgebra h{4, RMatrix(4, 16), RMatrix(4, 1), RMatrix(16, 4), RMatrix(1, 4), RMatrix(4, 4), RMatrix(4, 4)};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      std::size_t a = i % 2, b = i / 2, c = j % 2, e = j / 2;
      if (b + e > 1) continue;
      h.mult.set((a + c) % 2 + 2 * (b + e), i * 4 + j, Rational(b * c == 1 ? -1 : 1));
    }
  h.unit.set(0, 0, Rational(1));
  h.counit.set(0, 0, Rational(1));
  h.counit.set(0, 1, Rational(1));

  const Table t = table_of(h);
  const Element one = basis_elt(0);
  const Element dg{{1 * 4 + 1, Rational(1)}};
  const Element dx{{2 * 4 + 0, Rational(1)}, {1 * 4 + 2, Rational(1)}};
  const Element sg = basis_elt(1), sx{{3, Rational(-1)}};
  for (std::size_t i = 0; i < 4; ++i) {
    std::size_t a = i % 2, b = i / 2;
    Element delta{{0, Rational(1)}}, s = one;
    if (a) {
      delta = multiply(t, delta, dg, 2);
      s = sg;
    }
    if (b) {
      delta = multiply(t, delta, dx, 2);
      s = multiply(t, sx, s, 1);  // antipode reverses products
    }
    for (const auto& [k, v] : delta) h.comult.set(k, i, v);
    for (const auto& [k, v] : s) h.antipode.set(k, i, v);
  }
  h.antipode_inv = inverse(h.antipode);
  return h;
}

HopfAlgebra dual_hopf_cop(const HopfAlgebra& h) {
  check_shapes(h);
  const std::size_t d = h.dim;
  return {d,
          h.comult.transpose(),
          h.counit.transpose(),
          flip_matrix<Rational>(d, d) * h.mult.transpose(),
          h.unit.transpose(),
          h.antipode_inv.transpose(),
          h.antipode.transpose()};
}

QuantumDouble quantum_double(const HopfAlgebra& h) {
  Report hr = verify_hopf(h);
  if (!hr.ok()) throw InvalidInput("quantum_double: not a Hopf algebra (" + hr.failures().front() + ")");
  const std::size_t d = h.dim, n = d * d;
  QuantumDouble q;
  q.b = h;
  q.b_dual = dual_hopf_cop(h);
  const HopfAlgebra& bd = q.b_dual;
  const Table tb = table_of(h), tf = table_of(bd);
  const RMatrix d3 = iterated_comult(h), f3 = iterated_comult(bd);

  // (e_i phi^a)(e_j phi^b) = <S^-1(e_j1), phi^a_1><e_j3, phi^a_3> e_i e_j2 (x) phi^a_2 phi^b
  std::vector<std::vector<std::map<std::pair<std::size_t, std::size_t>, Rational>>> w(
      d, std::vector<std::map<std::pair<std::size_t, std::size_t>, Rational>>(d));
  std::vector<std::vector<std::pair<std::vector<std::size_t>, Rational>>> bj(d), fa(d);
  for (std::size_t j = 0; j < d; ++j) {
    bj[j] = column_terms(d3, j, d, 3);
    fa[j] = column_terms(f3, j, d, 3);
  }
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t a = 0; a < d; ++a) {
      auto& acc = w[j][a];
      for (const auto& [pqr, c] : bj[j])
        for (const auto& [stu, c2] : fa[a]) {
          if (stu[2] != pqr[2]) continue;
          Rational s = h.antipode_inv.at(stu[0], pqr[0]);
          if (sgn(s) == 0) continue;
          acc[{pqr[1], stu[1]}] += c * c2 * s;
        }
    }

  HopfAlgebra db{n, RMatrix(n, n * n), RMatrix(n, 1), RMatrix(n * n, n), RMatrix(1, n), RMatrix(n, n), RMatrix(n, n)};
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t b = 0; b < d; ++b) {
          Element out;
          for (const auto& [qt, c] : w[j][a]) {
            if (sgn(c) == 0) continue;
            for (const auto& [x, v] : tb.prod[i * d + qt.first])
              for (const auto& [y, u] : tf.prod[qt.second * d + b]) out[x * d + y] += c * v * u;
          }
          for (const auto& [k, v] : out)
            if (sgn(v) != 0) db.mult.set(k, (i * d + a) * n + j * d + b, v);
        }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < d; ++a)
      for (const auto& [pq, c] : column_terms(h.comult, i, d, 2))
        for (const auto& [st, c2] : column_terms(bd.comult, a, d, 2))
          db.comult.add_to((pq[0] * d + st[0]) * n + pq[1] * d + st[1], i * d + a, c * c2);
  db.unit = h.unit.kron(bd.unit);
  db.counit = h.counit.kron(bd.counit);

  q.include_b = RMatrix::identity(d).kron(bd.unit);
  q.include_b_dual = h.unit.kron(RMatrix::identity(d));
  q.db = db;
  const Table td = table_of(q.db);
  // S(b phi) = (1 phi_S)(S(b) eps)
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < d; ++a) {
      Element x = to_element(q.include_b_dual * bd.antipode * basis_element(d, a));
      Element y = to_element(q.include_b * h.antipode * basis_element(d, i));
      for (const auto& [k, v] : multiply(td, x, y, 1)) q.db.antipode.set(k, i * d + a, v);
    }
  q.db.antipode_inv = inverse(q.db.antipode);

  q.r = RMatrix(n * n, 1);
  for (std::size_t i = 0; i < d; ++i)
    q.r += (q.include_b * basis_element(d, i)).kron(q.include_b_dual * basis_element(d, i));
  return q;
}

Report quasitriangular_check(const QuantumDouble& q) {
  Report rep;
  rep.merge("double ", verify_hopf(q.db));
  rep.add("B is a Hopf subalgebra", hopf_morphism_check(q.b, q.db, q.include_b).ok());
  rep.add("B° is a Hopf subalgebra", hopf_morphism_check(q.b_dual, q.db, q.include_b_dual).ok());

  const std::size_t n = q.db.dim;
  const Table t = table_of(q.db);
  const RMatrix id = RMatrix::identity(n);
  const Element r = to_element(q.r);
  const Element rinv = to_element(q.db.antipode.kron(id) * q.r);
  const Element one2 = to_element(q.db.unit.kron(q.db.unit));
  rep.add("R invertible", multiply(t, r, rinv, 2) == one2 && multiply(t, rinv, r, 2) == one2);

  const RMatrix flip = flip_matrix<Rational>(n, n);
  std::string bad;
  for (std::size_t x = 0; x < n; ++x) {
    Element dx = column_elt(q.db.comult, x), dop = column_elt(flip * q.db.comult, x);
    if (multiply(t, r, dx, 2) != multiply(t, dop, r, 2)) {
      bad = "fails on basis vector " + std::to_string(x);
      break;
    }
  }
  rep.add("R Delta R^-1 = Delta^op", bad.empty(), bad);

  const Element r12 = to_element(q.r.kron(q.db.unit));
  const Element r23 = to_element(q.db.unit.kron(q.r));
  const Element r13 = to_element(id.kron(q.db.unit).kron(id) * q.r);
  rep.add("(Delta x id) R = R13 R23", to_element(q.db.comult.kron(id) * q.r) == multiply(t, r13, r23, 3));
  rep.add("(id x Delta) R = R13 R12", to_element(id.kron(q.db.comult) * q.r) == multiply(t, r13, r12, 3));
  return rep;
}

Report verify_hopf_dy(const HopfDYModule& v) {
  check_module_shapes(v);
  const HopfAlgebra& h = v.base;
  const std::size_t d = h.dim;
  const RMatrix iv = RMatrix::identity(v.dim);
  Report rep;

  std::string bad;
  for (std::size_t i = 0; i < d && bad.empty(); ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!(v.action[i] * v.action[j] == combine(v.action, h.mult, i * d + j, v.dim))) {
        bad = "pi(e_" + std::to_string(i) + ") pi(e_" + std::to_string(j) + ") != pi(e_i e_j)";
        break;
      }
  if (bad.empty() && !(combine(v.action, h.unit, 0, v.dim) == iv)) bad = "unit does not act by the identity";
  rep.add("module", bad.empty(), bad);

  bad.clear();
  const RMatrix ct = h.comult.transpose();
  for (std::size_t p = 0; p < d && bad.empty(); ++p)
    for (std::size_t q = 0; q < d; ++q)
      if (!(combine(v.coaction, ct, p * d + q, v.dim) == v.coaction[p] * v.coaction[q])) {
        bad = "coassociativity fails on (" + std::to_string(p) + ", " + std::to_string(q) + ")";
        break;
      }
  if (bad.empty() && !(combine(v.coaction, h.counit.transpose(), 0, v.dim) == iv)) bad = "counit fails";
  rep.add("comodule", bad.empty(), bad);

  // pi*(e_j v) = sum e_r c S^-1(e_p) (x) e_q v over Delta3(e_j) = e_p (x) e_q (x) e_r, pi*(v) = c (x) v'.
  const Table t = table_of(h);
  const RMatrix d3 = iterated_comult(h);
  bad.clear();
  for (std::size_t j = 0; j < d && bad.empty(); ++j) {
    std::vector<RMatrix> rhs(d, RMatrix(v.dim, v.dim));
    for (const auto& [pqr, c] : column_terms(d3, j, d, 3)) {
      const Element sp = column_elt(h.antipode_inv, pqr[0]);
      for (std::size_t l = 0; l < d; ++l) {
        Element tri = multiply(t, multiply(t, basis_elt(pqr[2]), basis_elt(l), 1), sp, 1);
        if (tri.empty()) continue;
        const RMatrix op = v.action[pqr[1]] * v.coaction[l];
        for (const auto& [k, x] : tri) rhs[k] += op * (c * x);
      }
    }
    for (std::size_t k = 0; k < d; ++k)
      if (!(v.coaction[k] * v.action[j] == rhs[k])) {
        bad = "compatibility fails on e_" + std::to_string(j);
        break;
      }
  }
  rep.add("compatibility", bad.empty(), bad);
  return rep;
}

HopfDYModule hopf_dy_trivial(const HopfAlgebra& h, std::size_t dim) {
  HopfDYModule v{h, dim, {}, {}};
  const RMatrix id = RMatrix::identity(dim);
  for (std::size_t k = 0; k < h.dim; ++k) {
    v.action.push_back(id * h.counit.at(0, k));
    v.coaction.push_back(id * h.unit.at(k, 0));
  }
  return v;
}

HopfDYModule hopf_dy_adjoint(const HopfAlgebra& h) {
  const std::size_t d = h.dim;
  const Table t = table_of(h);
  HopfDYModule v{h, d, std::vector<RMatrix>(d, RMatrix(d, d)), std::vector<RMatrix>(d, RMatrix(d, d))};
  for (std::size_t i = 0; i < d; ++i)
    for (const auto& [pq, c] : column_terms(h.comult, i, d, 2)) {
      const Element sp = column_elt(h.antipode_inv, pq[0]);
      for (std::size_t x = 0; x < d; ++x)
        for (const auto& [k, u] : multiply(t, multiply(t, basis_elt(pq[1]), basis_elt(x), 1), sp, 1))
          v.action[i].add_to(k, x, c * u);
    }
  for (const auto& [key, c] : h.comult.entries()) v.coaction[key.first % d].add_to(key.first / d, key.second, c);
  return v;
}

HopfDYModule hopf_dy_regular(const HopfAlgebra& h) {
  const std::size_t d = h.dim;
  const Table t = table_of(h);
  HopfDYModule v{h, d, std::vector<RMatrix>(d, RMatrix(d, d)), std::vector<RMatrix>(d, RMatrix(d, d))};
  for (const auto& [key, c] : h.mult.entries()) v.action[key.second / d].add_to(key.first, key.second % d, c);
  const RMatrix d3 = iterated_comult(h);
  for (std::size_t x = 0; x < d; ++x)
    for (const auto& [pqr, c] : column_terms(d3, x, d, 3))
      for (const auto& [k, u] : multiply(t, basis_elt(pqr[2]), column_elt(h.antipode_inv, pqr[0]), 1))
        v.coaction[k].add_to(pqr[1], x, c * u);
  return v;
}

HopfDYModule hopf_dy_tensor(const HopfDYModule& v, const HopfDYModule& w) {
  same_base(v, w);
  check_module_shapes(v);
  check_module_shapes(w);
  const HopfAlgebra& h = v.base;
  const std::size_t d = h.dim, n = v.dim * w.dim;
  HopfDYModule t{h, n, std::vector<RMatrix>(d, RMatrix(n, n)), std::vector<RMatrix>(d, RMatrix(n, n))};
  for (const auto& [key, c] : h.comult.entries())
    t.action[key.second] += v.action[key.first / d].kron(w.action[key.first % d]) * c;
  // pi*(v (x) w) = d c (x) v' (x) w' for pi*(v) = c (x) v', pi*(w) = d (x) w'.
  for (const auto& [key, c] : h.mult.entries()) {
    std::size_t l = key.second / d, k = key.second % d;
    t.coaction[key.first] += v.coaction[k].kron(w.coaction[l]) * c;
  }
  return t;
}

Report double_module_check(const QuantumDouble& q, const std::vector<RMatrix>& rho) {
  const std::size_t n = q.db.dim;
  if (rho.size() != n) throw DimensionMismatch("double_module_check: one matrix per basis vector of DB");
  const std::size_t dim = rho.empty() ? 0 : rho[0].rows();
  Report rep;
  std::string bad;
  for (std::size_t x = 0; x < n && bad.empty(); ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (!(rho[x] * rho[y] == combine(rho, q.db.mult, x * n + y, dim))) {
        bad = "rho(x_" + std::to_string(x) + ") rho(x_" + std::to_string(y) + ") != rho(x y)";
        break;
      }
  if (bad.empty() && !(combine(rho, q.db.unit, 0, dim) == RMatrix::identity(dim))) bad = "unit does not act by 1";
  rep.add("module", bad.empty(), bad);
  return rep;
}

std::vector<RMatrix> double_regular_module(const QuantumDouble& q) {
  const std::size_t n = q.db.dim;
  std::vector<RMatrix> rho(n, RMatrix(n, n));
  for (const auto& [key, c] : q.db.mult.entries()) rho[key.second / n].set(key.first, key.second % n, c);
  return rho;
}

HopfDYModule hopf_dy_from_double_module(const QuantumDouble& q, const std::vector<RMatrix>& rho) {
  if (rho.size() != q.db.dim) throw DimensionMismatch("hopf_dy_from_double_module: one matrix per basis vector of DB");
  const std::size_t dim = rho.empty() ? 0 : rho[0].rows();
  HopfDYModule v{q.b, dim, {}, {}};
  for (std::size_t k = 0; k < q.b.dim; ++k) {
    v.action.push_back(combine(rho, q.include_b, k, dim));
    v.coaction.push_back(combine(rho, q.include_b_dual, k, dim));
  }
  return v;
}

std::vector<RMatrix> double_module_of(const QuantumDouble& q, const HopfDYModule& v) {
  check_module_shapes(v);
  const std::size_t d = q.b.dim;
  std::vector<RMatrix> rho;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t a = 0; a < d; ++a) rho.push_back(v.action[i] * v.coaction[a]);
  return rho;
}

std::pair<RMatrix, RMatrix> hopf_dy_braiding(const HopfDYModule& v, const HopfDYModule& w) {
  same_base(v, w);
  check_module_shapes(v);
  check_module_shapes(w);
  const std::size_t n = v.dim * w.dim;
  RMatrix r(n, n), rinv(n, n);
  for (std::size_t k = 0; k < v.base.dim; ++k) {
    r += v.action[k].kron(w.coaction[k]);
    rinv += combine(v.action, v.base.antipode, k, v.dim).kron(w.coaction[k]);
  }
  return {r, rinv};
}

RMatrix hopf_dy_beta(const HopfDYModule& v, const HopfDYModule& w) {
  return flip_matrix<Rational>(v.dim, w.dim) * hopf_dy_braiding(v, w).first;
}

std::vector<RMatrix> hopf_dy_morphisms(const HopfDYModule& v, const HopfDYModule& w) {
  same_base(v, w);
  const std::size_t m = v.dim, n = w.dim, d = v.base.dim;
  // unknown f is n x m, entry (r, c) at r * m + c
  RMatrix eqs(2 * d * n * m, n * m);
  std::size_t block = 0;
  for (std::size_t k = 0; k < d; ++k)
    for (const auto& [a, b] : {std::pair{&v.action[k], &w.action[k]}, std::pair{&v.coaction[k], &w.coaction[k]}}) {
      const std::size_t base = block++ * n * m;
      for (const auto& [key, x] : a->entries())  // (f a)(r, c) += f(r, s) a(s, c)
        for (std::size_t r = 0; r < n; ++r) eqs.add_to(base + r * m + key.second, r * m + key.first, x);
      for (const auto& [key, x] : b->entries())  // (b f)(r, c) += b(r, s) f(s, c)
        for (std::size_t c = 0; c < m; ++c) eqs.add_to(base + key.first * m + c, key.second * m + c, -x);
    }
  const RMatrix ker = kernel_basis(eqs);
  std::vector<RMatrix> out;
  for (std::size_t j = 0; j < ker.cols(); ++j) {
    RMatrix f(n, m);
    for (std::size_t i = 0; i < n * m; ++i) {
      Rational x = ker.at(i, j);
      if (sgn(x) != 0) f.set(i / m, i % m, x);
    }
    out.push_back(f);
  }
  return out;
}

Report hopf_braiding_check(const HopfDYModule& u, const HopfDYModule& v, const HopfDYModule& w) {
  Report rep;
  bool inv = true;
  for (const auto& [a, b] : {std::pair{&u, &v}, std::pair{&v, &w}, std::pair{&u, &w}}) {
    auto [r, ri] = hopf_dy_braiding(*a, *b);
    const RMatrix id = RMatrix::identity(r.rows());
    inv = inv && r * ri == id && ri * r == id;
  }
  rep.add("R inverse", inv);

  const HopfDYModule uv = hopf_dy_tensor(u, v), vu = hopf_dy_tensor(v, u);
  const RMatrix buv = hopf_dy_beta(u, v);
  bool morph = true;
  for (std::size_t k = 0; k < u.base.dim; ++k)
    morph = morph && buv * uv.action[k] == vu.action[k] * buv && buv * uv.coaction[k] == vu.coaction[k] * buv;
  rep.add("beta is a DY morphism", morph);

  const RMatrix iu = RMatrix::identity(u.dim), iv = RMatrix::identity(v.dim), iw = RMatrix::identity(w.dim);
  const RMatrix buw = hopf_dy_beta(u, w), bvw = hopf_dy_beta(v, w);
  rep.add("hexagon 1", hopf_dy_beta(uv, w) == buw.kron(iv) * iu.kron(bvw));
  rep.add("hexagon 2", hopf_dy_beta(u, hopf_dy_tensor(v, w)) == iv.kron(buw) * buv.kron(iw));
  rep.add("yang-baxter", bvw.kron(iu) * iv.kron(buw) * buv.kron(iw) == iw.kron(buv) * buw.kron(iv) * iu.kron(bvw));
  return rep;
}

}  // namespace coxkit
