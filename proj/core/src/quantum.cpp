#include "coxkit/quantum.hpp"

#include <algorithm>
#include <map>

#include "coxkit/linear_solve.hpp"
#include "coxkit/realization.hpp"

namespace coxkit {

namespace {

long entry(const RMatrix& a, std::size_t i, std::size_t j) { return a.at(i, j).get_num().get_si(); }

QMatrix diagonal(const std::vector<QScalar>& d) {
  QMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d[i].is_zero()) m.set(i, i, d[i]);
  return m;
}

// Smallest k with x^k = 0, or dim + 1 if none.
std::size_t nilpotency(const QMatrix& x) {
  QMatrix p = QMatrix::identity(x.rows());
  for (std::size_t k = 0; k <= x.rows(); ++k) {
    if (p.is_zero()) return k;
    p = p * x;
  }
  return p.is_zero() ? x.rows() + 1 : x.rows() + 2;
}

void require_same(const WeightModule& v, const WeightModule& w) {
  if (!(v.data == w.data)) throw InvalidInput("weight modules over different quantum group data");
}

std::string where(std::size_t module, std::size_t vertex) {
  return "module " + std::to_string(module) + ", vertex " + std::to_string(vertex);
}

std::string first_entry(const QMatrix& m) {
  if (m.is_zero()) return "";
  const auto& [key, v] = *m.entries().begin();
  return "entry (" + std::to_string(key.first) + ", " + std::to_string(key.second) + ") = " + v.to_string();
}

}  // namespace

QuantumGroupData quantum_group_data(const RMatrix& a) {
  if (!is_gcm(a)) throw InvalidInput("quantum_group_data: not a generalized Cartan matrix");
  std::vector<Rational> d;
  try {
    d = symmetrizer(a.transpose());
  } catch (const NotSymmetrizable& e) {
    throw InvalidInput(std::string("quantum_group_data: ") + e.what());
  }
  QuantumGroupData data{a, {}, coxeter_labels_from_gcm(a), 4};
  Integer l = 1;
  for (const auto& x : d) {
    data.d.push_back(x.get_num().get_si());
    l = lcm(l, x.get_num());
  }
  data.lattice = static_cast<std::uint32_t>(4 * l.get_ui());
  return data;
}

QScalar q_i_power(const QuantumGroupData& data, std::size_t i, const Rational& e) {
  return QScalar::q_power(e * data.d.at(i));
}

Report weight_module_check(const WeightModule& v) {
  const std::size_t n = v.data.rank(), dim = v.dim();
  if (v.e.size() != n || v.f.size() != n) throw DimensionMismatch("weight module: one E and one F per vertex");
  for (const auto* family : {&v.e, &v.f})
    for (const auto& m : *family)
      if (m.rows() != dim || m.cols() != dim) throw DimensionMismatch("weight module: operator shape " + m.shape());
  const RMatrix& a = v.data.cartan;
  Report r;

  std::string bad;
  for (std::size_t i = 0; i < n && bad.empty(); ++i)
    for (int sign : {1, -1}) {
      const QMatrix& x = sign > 0 ? v.e[i] : v.f[i];
      for (const auto& [key, val] : x.entries()) {
        bool ok = true;
        for (std::size_t j = 0; j < n; ++j)
          ok = ok && v.weights[key.first][j] == v.weights[key.second][j] + sign * entry(a, j, i);
        if (!ok) {
          bad = std::string(sign > 0 ? "E_" : "F_") + std::to_string(i) + " breaks the grading at (" +
                std::to_string(key.first) + ", " + std::to_string(key.second) + ")";
          break;
        }
      }
      if (!bad.empty()) break;
    }
  r.add("weight grading", bad.empty(), bad);

  bad.clear();
  for (std::size_t i = 0; i < n && bad.empty(); ++i)
    for (std::size_t j = 0; j < n; ++j) {
      QMatrix rhs(dim, dim);
      if (i == j) {
        std::vector<QScalar> diag;
        for (const auto& w : v.weights) diag.push_back(QScalar::q_integer(w[i], v.data.d[i]));
        rhs = diagonal(diag);
      }
      QMatrix diff = commutator(v.e[i], v.f[j]) - rhs;
      if (!diff.is_zero()) {
        bad = "[E_" + std::to_string(i) + ", F_" + std::to_string(j) + "] " + first_entry(diff);
        break;
      }
    }
  r.add("commutator", bad.empty(), bad);

  bad.clear();
  for (std::size_t i = 0; i < n && bad.empty(); ++i)
    for (std::size_t j = 0; j < n && bad.empty(); ++j) {
      if (i == j) continue;
      const long top = 1 - entry(a, i, j);
      for (const auto* family : {&v.e, &v.f}) {
        const QMatrix& xi = (*family)[i];
        const QMatrix& xj = (*family)[j];
        QMatrix sum(dim, dim);
        for (long m = 0; m <= top; ++m) {
          QScalar c = QScalar(m % 2 == 0 ? 1 : -1) /
                      (QScalar::q_factorial(m, v.data.d[i]) * QScalar::q_factorial(top - m, v.data.d[i]));
          sum += matrix_power(xi, static_cast<unsigned>(top - m)) * xj * matrix_power(xi, static_cast<unsigned>(m)) * c;
        }
        if (!sum.is_zero()) {
          bad = std::string(family == &v.e ? "E" : "F") + " Serre relation (" + std::to_string(i) + ", " +
                std::to_string(j) + ") " + first_entry(sum);
          break;
        }
      }
    }
  r.add("serre", bad.empty(), bad);

  bad.clear();
  for (std::size_t i = 0; i < n && bad.empty(); ++i)
    if (nilpotency(v.e[i]) > dim || nilpotency(v.f[i]) > dim) bad = "E_i or F_i not nilpotent at vertex " + std::to_string(i);
  r.add("nilpotent", bad.empty(), bad);
  return r;
}

WeightModule trivial_weight_module(const QuantumGroupData& data, std::size_t dim) {
  return {data, std::vector<std::vector<long>>(dim, std::vector<long>(data.rank(), 0)),
          std::vector<QMatrix>(data.rank(), QMatrix(dim, dim)), std::vector<QMatrix>(data.rank(), QMatrix(dim, dim))};
}

WeightModule build_sl2_module(long m) {
  if (m < 0) throw InvalidInput("build_sl2_module: highest weight must be non-negative");
  const std::size_t dim = static_cast<std::size_t>(m) + 1;
  WeightModule v{quantum_group_data(integer_matrix({{2}})), {}, {QMatrix(dim, dim)}, {QMatrix(dim, dim)}};
  for (long k = 0; k <= m; ++k) {
    v.weights.push_back({m - 2 * k});
    auto ks = static_cast<std::size_t>(k);
    if (k < m) v.f[0].set(ks + 1, ks, QScalar::q_integer(k + 1));
    if (k > 0) v.e[0].set(ks - 1, ks, QScalar::q_integer(m - k + 1));
  }
  return v;
}

WeightModule quantum_defining_module(const QuantumGroupData& data) {
  ChevalleyModule c = defining_module(data.cartan);
  WeightModule v{data, {}, {}, {}};
  for (std::size_t r = 0; r < c.dim(); ++r) {
    std::vector<long> w;
    for (const auto& h : c.h) w.push_back(h.at(r, r).get_num().get_si());
    v.weights.push_back(w);
  }
  for (const auto& h : c.h)
    for (const auto& [key, x] : h.entries())
      if (key.first != key.second) throw InvalidInput("quantum_defining_module: Cartan action is not diagonal");
  for (std::size_t i = 0; i < c.rank(); ++i) {
    v.e.push_back(to_qmatrix(c.e[i]));
    v.f.push_back(to_qmatrix(c.f[i]));
  }
  Report r = weight_module_check(v);
  if (!r.ok()) throw InvalidInput("quantum_defining_module: seed fails " + r.failures().front());
  return v;
}

WeightModule twist_module(const WeightModule& v, const std::vector<std::size_t>& sigma) {
  const std::size_t n = v.data.rank();
  if (sigma.size() != n) throw InvalidInput("twist_module: sigma has the wrong length");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (sigma[i] >= n || v.data.cartan.at(sigma[i], sigma[j]) != v.data.cartan.at(i, j))
        throw InvalidInput("twist_module: not a diagram automorphism");
  WeightModule t{v.data, {}, {}, {}};
  for (const auto& w : v.weights) {
    std::vector<long> tw(n);
    for (std::size_t i = 0; i < n; ++i) tw[i] = w[sigma[i]];
    t.weights.push_back(tw);
  }
  for (std::size_t i = 0; i < n; ++i) {
    t.e.push_back(v.e[sigma[i]]);
    t.f.push_back(v.f[sigma[i]]);
  }
  return t;
}

QMatrix k_operator(const WeightModule& v, std::size_t i, long power) {
  std::vector<QScalar> d;
  for (const auto& w : v.weights) d.push_back(q_i_power(v.data, i, Rational(power * w[i])));
  return diagonal(d);
}

WeightModule coproduct_action(const WeightModule& v, const WeightModule& w) {
  require_same(v, w);
  WeightModule t{v.data, {}, {}, {}};
  for (const auto& a : v.weights)
    for (const auto& b : w.weights) {
      std::vector<long> s(a.size());
      for (std::size_t j = 0; j < a.size(); ++j) s[j] = a[j] + b[j];
      t.weights.push_back(s);
    }
  const QMatrix iv = QMatrix::identity(v.dim()), iw = QMatrix::identity(w.dim());
  for (std::size_t i = 0; i < v.data.rank(); ++i) {
    t.e.push_back(v.e[i].kron(k_operator(w, i, 1)) + iv.kron(w.e[i]));
    t.f.push_back(v.f[i].kron(iw) + k_operator(v, i, -1).kron(w.f[i]));
  }
  return t;
}

WeightSubmodule quantum_highest_weight_submodule(const WeightModule& v, const std::vector<long>& weight) {
  const std::size_t n = v.data.rank();
  std::vector<std::size_t> cols;
  for (std::size_t c = 0; c < v.dim(); ++c)
    if (v.weights[c] == weight) cols.push_back(c);
  if (cols.empty()) throw InvalidInput("highest weight submodule: weight does not occur");
  QMatrix stack(0, cols.size());
  for (const auto& e : v.e) stack = QMatrix::vstack(stack, e.select(iota(v.dim()), cols));
  QMatrix ker = kernel_basis(stack);
  if (ker.cols() == 0) throw InvalidInput("highest weight submodule: no highest weight vector of that weight");
  QMatrix top(v.dim(), 1);
  for (std::size_t k = 0; k < cols.size(); ++k) {
    QScalar x = ker.at(k, 0);
    if (!x.is_zero()) top.set(cols[k], 0, x);
  }

  // Close under the F_i, keeping one independent set per weight.
  std::vector<QMatrix> basis{top};
  std::vector<std::vector<long>> weights{weight};
  std::map<std::vector<long>, std::vector<std::size_t>> by_weight{{weight, {0}}};
  auto span_of = [&](const std::vector<long>& w) {
    QMatrix m(v.dim(), 0);
    for (auto k : by_weight[w]) m = QMatrix::hstack(m, basis[k]);
    return m;
  };
  for (std::size_t q = 0; q < basis.size(); ++q)
    for (std::size_t i = 0; i < n; ++i) {
      QMatrix x = v.f[i] * basis[q];
      if (x.is_zero()) continue;
      std::vector<long> w = weights[q];
      for (std::size_t j = 0; j < n; ++j) w[j] -= entry(v.data.cartan, j, i);
      QMatrix s = span_of(w);
      if (rank(QMatrix::hstack(s, x)) == s.cols()) continue;
      by_weight[w].push_back(basis.size());
      basis.push_back(x);
      weights.push_back(w);
    }

  const std::size_t dim = basis.size();
  WeightSubmodule sub{{v.data, weights, std::vector<QMatrix>(n, QMatrix(dim, dim)), std::vector<QMatrix>(n, QMatrix(dim, dim))},
                      QMatrix(v.dim(), 0)};
  for (const auto& b : basis) sub.inclusion = QMatrix::hstack(sub.inclusion, b);
  for (std::size_t b = 0; b < dim; ++b)
    for (std::size_t i = 0; i < n; ++i)
      for (int sign : {1, -1}) {
        QMatrix x = (sign > 0 ? v.e[i] : v.f[i]) * basis[b];
        if (x.is_zero()) continue;
        std::vector<long> w = weights[b];
        for (std::size_t j = 0; j < n; ++j) w[j] += sign * entry(v.data.cartan, j, i);
        auto coords = coordinates_in(span_of(w), x);
        if (!coords) throw Error("highest weight submodule: span is not closed");
        const auto& idx = by_weight[w];
        for (std::size_t k = 0; k < idx.size(); ++k) {
          QScalar c = coords->at(k, 0);
          if (!c.is_zero()) (sign > 0 ? sub.module.e[i] : sub.module.f[i]).set(idx[k], b, c);
        }
      }
  return sub;
}

WeightModule build_rank2_module(const RMatrix& a, const std::vector<long>& weight) {
  QuantumGroupData data = quantum_group_data(a);
  const std::size_t n = data.rank();
  if (n > 2) throw InvalidInput("build_rank2_module: rank at most 2");
  if (weight.size() != n) throw InvalidInput("build_rank2_module: weight has the wrong length");
  for (long x : weight)
    if (x < 0) throw InvalidInput("build_rank2_module: weight must be dominant");
  const WeightModule def = quantum_defining_module(data);

  auto fundamental = [&](std::size_t j) {
    std::vector<long> w(n, 0);
    w[j] = 1;
    std::vector<WeightModule> sources{def};
    if (n == 2 && a.at(0, 1) == a.at(1, 0)) sources.push_back(twist_module(def, {1, 0}));
    for (const auto& s : sources) try {
        return quantum_highest_weight_submodule(s, w).module;
      } catch (const InvalidInput&) {
      }
    return quantum_highest_weight_submodule(coproduct_action(def, def), w).module;
  };

  WeightModule cur = trivial_weight_module(data);
  std::vector<long> w(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    if (weight[j] == 0) continue;
    const WeightModule fj = fundamental(j);
    for (long k = 0; k < weight[j]; ++k) {
      ++w[j];
      cur = quantum_highest_weight_submodule(coproduct_action(cur, fj), w).module;
    }
  }
  Report r = weight_module_check(cur);
  if (!r.ok()) throw Error("build_rank2_module: extracted module fails " + r.failures().front());
  return cur;
}

QMatrix divided_power(const QMatrix& x, long a, const QuantumGroupData& data, std::size_t i) {
  if (a < 0) return QMatrix(x.rows(), x.cols());
  return matrix_power(x, static_cast<unsigned>(a)) * QScalar::q_factorial(a, data.d[i]).inverse();
}

QMatrix quantum_weyl_operator(const WeightModule& v, std::size_t i) {
  const std::size_t dim = v.dim();
  const long ne = static_cast<long>(nilpotency(v.e[i])), nf = static_cast<long>(nilpotency(v.f[i]));
  std::vector<QMatrix> ediv, fdiv;
  for (long a = 0; a < ne; ++a) ediv.push_back(divided_power(v.e[i], a, v.data, i));
  for (long b = 0; b < nf; ++b) fdiv.push_back(divided_power(v.f[i], b, v.data, i));

  std::map<long, std::vector<std::size_t>> by_level;
  for (std::size_t c = 0; c < dim; ++c) by_level[v.weights[c][i]].push_back(c);
  QMatrix s(dim, dim);
  for (const auto& [l, cols] : by_level) {
    QMatrix proj(dim, dim);
    for (auto c : cols) proj.set(c, c, QScalar(1));
    for (long c = 0; c < ne; ++c) {
      const QMatrix ec = ediv[static_cast<std::size_t>(c)] * proj;
      if (ec.is_zero()) continue;
      for (long b = 0; b < nf; ++b) {
        const long a = -l - c + b;
        if (a < 0 || a >= ne) continue;
        QMatrix term = ediv[static_cast<std::size_t>(a)] * fdiv[static_cast<std::size_t>(b)] * ec;
        if (term.is_zero()) continue;
        QScalar coef = q_i_power(v.data, i, Rational(l * l, 4) + Rational(b - a * c));
        s += term * (b % 2 == 0 ? coef : -coef);
      }
    }
  }
  return s;
}

QMatrix rank1_r_matrix(const WeightModule& v, const WeightModule& w, std::size_t i) {
  require_same(v, w);
  const QuantumGroupData& data = v.data;
  std::vector<QScalar> weight_factor;
  for (const auto& a : v.weights)
    for (const auto& b : w.weights) weight_factor.push_back(q_i_power(data, i, Rational(a[i] * b[i], 2)));
  const QScalar qi = q_i_power(data, i, 1), diff = qi - qi.inverse();
  QMatrix theta(v.dim() * w.dim(), v.dim() * w.dim());
  QMatrix en = QMatrix::identity(v.dim()), fn = QMatrix::identity(w.dim());
  for (long k = 0; !en.is_zero() && !fn.is_zero(); ++k) {
    QScalar c = q_i_power(data, i, Rational(k * (k - 1), 2)) * diff.pow(k) / QScalar::q_factorial(k, data.d[i]);
    theta += en.kron(fn) * c;
    en = en * v.e[i];
    fn = fn * w.f[i];
  }
  return diagonal(weight_factor) * theta;
}

namespace {

// Delta^21(x) on V (x) W from the operator x on W (x) V.
QMatrix flip_conjugate(const QMatrix& x_wv, std::size_t dv, std::size_t dw) {
  return flip_matrix<QScalar>(dw, dv) * x_wv * flip_matrix<QScalar>(dv, dw);
}

}  // namespace

Report rank1_r_matrix_check(const WeightModule& v, const WeightModule& w, std::size_t i) {
  const QMatrix r = rank1_r_matrix(v, w, i);
  const WeightModule vw = coproduct_action(v, w), wv = coproduct_action(w, v);
  Report rep;
  rep.add("intertwines E", r * vw.e[i] == flip_conjugate(wv.e[i], v.dim(), w.dim()) * r);
  rep.add("intertwines F", r * vw.f[i] == flip_conjugate(wv.f[i], v.dim(), w.dim()) * r);
  bool weights = true;
  for (std::size_t j = 0; j < v.data.rank(); ++j) weights = weights && commutator(r, k_operator(vw, j)).is_zero();
  rep.add("preserves weights", weights);
  rep.add("invertible", !determinant(r).is_zero());
  return rep;
}

std::string to_string(CoproductOrientation o) {
  switch (o) {
    case CoproductOrientation::kDelta21_R: return "Delta21(S) = R (S x S)";
    case CoproductOrientation::kDelta21_R21: return "Delta21(S) = R21 (S x S)";
    case CoproductOrientation::kDelta_R: return "Delta(S) = R (S x S)";
    case CoproductOrientation::kDelta_R21: return "Delta(S) = R21 (S x S)";
    case CoproductOrientation::kDelta21_R_right: return "Delta21(S) = (S x S) R";
    case CoproductOrientation::kDelta21_R21_right: return "Delta21(S) = (S x S) R21";
    case CoproductOrientation::kDelta_R_right: return "Delta(S) = (S x S) R";
    case CoproductOrientation::kDelta_R21_right: return "Delta(S) = (S x S) R21";
  }
  return "?";
}

std::vector<CoproductOrientation> all_coproduct_orientations() {
  using O = CoproductOrientation;
  return {O::kDelta21_R, O::kDelta21_R21, O::kDelta_R, O::kDelta_R21,
          O::kDelta21_R_right, O::kDelta21_R21_right, O::kDelta_R_right, O::kDelta_R21_right};
}

namespace {

struct CoproductSides {
  QMatrix delta, delta21, r, r21, ss;
};

CoproductSides coproduct_sides(const WeightModule& v, const WeightModule& w, std::size_t i) {
  const std::size_t dv = v.dim(), dw = w.dim();
  CoproductSides s;
  s.delta = quantum_weyl_operator(coproduct_action(v, w), i);
  s.delta21 = flip_conjugate(quantum_weyl_operator(coproduct_action(w, v), i), dv, dw);
  s.r = rank1_r_matrix(v, w, i);
  s.r21 = flip_conjugate(rank1_r_matrix(w, v, i), dv, dw);
  s.ss = quantum_weyl_operator(v, i).kron(quantum_weyl_operator(w, i));
  return s;
}

bool holds(const CoproductSides& s, CoproductOrientation o) {
  using O = CoproductOrientation;
  switch (o) {
    case O::kDelta21_R: return s.delta21 == s.r * s.ss;
    case O::kDelta21_R21: return s.delta21 == s.r21 * s.ss;
    case O::kDelta_R: return s.delta == s.r * s.ss;
    case O::kDelta_R21: return s.delta == s.r21 * s.ss;
    case O::kDelta21_R_right: return s.delta21 == s.ss * s.r;
    case O::kDelta21_R21_right: return s.delta21 == s.ss * s.r21;
    case O::kDelta_R_right: return s.delta == s.ss * s.r;
    case O::kDelta_R21_right: return s.delta == s.ss * s.r21;
  }
  return false;
}

}  // namespace

std::vector<CoproductOrientation> holding_orientations(const WeightModule& v, const WeightModule& w, std::size_t i) {
  const CoproductSides s = coproduct_sides(v, w, i);
  std::vector<CoproductOrientation> out;
  for (auto o : all_coproduct_orientations())
    if (holds(s, o)) out.push_back(o);
  return out;
}

CoproductOrientation recorded_orientation() { return CoproductOrientation::kDelta21_R; }

bool coproduct_identity_holds(const WeightModule& v, const WeightModule& w, std::size_t i, CoproductOrientation o) {
  return holds(coproduct_sides(v, w, i), o);
}

ChevalleyModule classical_limit(const WeightModule& v) {
  ChevalleyModule c{v.data.cartan, {}, {}, {}};
  for (std::size_t i = 0; i < v.data.rank(); ++i) {
    c.e.push_back(specialize_at_one(v.e[i]));
    c.f.push_back(specialize_at_one(v.f[i]));
    RMatrix h(v.dim(), v.dim());
    for (std::size_t r = 0; r < v.dim(); ++r)
      if (v.weights[r][i] != 0) h.set(r, r, Rational(v.weights[r][i]));
    c.h.push_back(h);
  }
  return c;
}

Report verify_coxeter_identities(const std::vector<WeightModule>& modules) {
  Report rep;
  for (std::size_t k = 1; k < modules.size(); ++k) require_same(modules[0], modules[k]);

  std::vector<std::vector<QMatrix>> ops;
  for (const auto& v : modules) {
    std::vector<QMatrix> s;
    for (std::size_t i = 0; i < v.data.rank(); ++i) s.push_back(quantum_weyl_operator(v, i));
    ops.push_back(s);
  }

  std::string bad;
  for (std::size_t k = 0; k < modules.size() && bad.empty(); ++k) {
    const auto& labels = modules[k].data.labels;
    for (unsigned i = 0; i < labels.size() && bad.empty(); ++i)
      for (unsigned j = i + 1; j < labels.size(); ++j) {
        CoxeterLabel m = labels.label(i, j);
        if (m.is_infinite()) continue;
        QMatrix lhs = QMatrix::identity(modules[k].dim()), rhs = lhs;
        for (unsigned t = 0; t < m.value(); ++t) {
          lhs = lhs * ops[k][t % 2 == 0 ? i : j];
          rhs = rhs * ops[k][t % 2 == 0 ? j : i];
        }
        if (!(lhs == rhs)) {
          bad = where(k, i) + "/" + std::to_string(j) + ": " + first_entry(lhs - rhs);
          break;
        }
      }
  }
  rep.add("braid relations", bad.empty(), bad);

  bad.clear();
  for (std::size_t k = 0; k < modules.size() && bad.empty(); ++k)
    for (std::size_t l = 0; l < modules.size() && bad.empty(); ++l)
      for (std::size_t i = 0; i < modules[k].data.rank(); ++i)
        if (!coproduct_identity_holds(modules[k], modules[l], i)) {
          bad = "modules " + std::to_string(k) + " (x) " + std::to_string(l) + ", vertex " + std::to_string(i);
          break;
        }
  rep.add("coproduct identity", bad.empty(), bad.empty() ? to_string(recorded_orientation()) : bad);

  bad.clear();
  for (std::size_t k = 0; k < modules.size() && bad.empty(); ++k)
    for (std::size_t i = 0; i < modules[k].data.rank(); ++i) {
      const QMatrix s2 = ops[k][i] * ops[k][i];
      bool ok = commutator(s2, modules[k].e[i]).is_zero() && commutator(s2, modules[k].f[i]).is_zero();
      for (std::size_t j = 0; j < modules[k].data.rank(); ++j) ok = ok && commutator(s2, k_operator(modules[k], j)).is_zero();
      if (!ok) {
        bad = where(k, i);
        break;
      }
    }
  rep.add("S_i^2 natural", bad.empty(), bad);

  bad.clear();
  std::string signs;
  for (std::size_t k = 0; k < modules.size() && bad.empty(); ++k) {
    const ChevalleyModule c = classical_limit(modules[k]);
    for (std::size_t i = 0; i < modules[k].data.rank(); ++i) {
      RMatrix s1;
      try {
        s1 = specialize_at_one(ops[k][i]);
      } catch (const Error&) {
        bad = where(k, i) + ": pole at q = 1";
        break;
      }
      const RMatrix dsign = s1 * inverse(tits_operator(c, i));
      bool ok = true;
      long minus = 0;
      for (const auto& [key, x] : dsign.entries()) {
        ok = ok && key.first == key.second && abs(x) == 1;
        if (x < 0) ++minus;
      }
      ok = ok && dsign.nnz() == modules[k].dim();
      if (!ok) {
        bad = where(k, i) + ": S(1) T^-1 is not a diagonal sign matrix";
        break;
      }
      if (minus != 0) signs += where(k, i) + " has " + std::to_string(minus) + " sign flips; ";
    }
  }
  rep.add("classical limit", bad.empty(), bad.empty() ? (signs.empty() ? "sign matrix is the identity" : signs) : bad);
  return rep;
}

}  // namespace coxkit
