#include "coxkit/coxeter.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "coxkit/linear_solve.hpp"

namespace coxkit {

namespace {

QMatrix unit_column(std::size_t dim, std::size_t k) {
  QMatrix c(dim, 1);
  c.set(k, 0, QScalar(1));
  return c;
}

std::string pair_name(VertexSet b, VertexSet b1) { return "(" + b.to_string() + ", " + b1.to_string() + ")"; }

std::string first_entry(const QMatrix& lhs, const QMatrix& rhs) {
  QMatrix d = lhs - rhs;
  if (d.is_zero()) return "";
  auto [r, c] = d.entries().begin()->first;
  return "entry (" + std::to_string(r) + ", " + std::to_string(c) + "): " + lhs.at(r, c).to_string() + " vs " +
         rhs.at(r, c).to_string();
}

// Incremental echelon basis of a span of matrices, flattened row-major.
// Each row remembers its expression in the inserted elements.
class SpanSolver {
 public:
  // Adds x if it is independent of the span; returns whether it was added.
  bool add(const QMatrix& x) {
    auto [residual, c] = reduce(x);
    if (residual.empty()) return false;
    const auto [pivot, p] = *residual.begin();
    const QScalar inv = p.inverse();
    Row row{pivot, {}, std::vector<QScalar>(count_ + 1)};
    for (auto& [k, v] : residual) row.v.emplace(k, v * inv);
    row.combo[count_] = inv;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (!c[r].is_zero())
        for (std::size_t j = 0; j < rows_[r].combo.size(); ++j) row.combo[j] -= c[r] * rows_[r].combo[j] * inv;
    rows_.push_back(std::move(row));
    ++count_;
    return true;
  }

  // Coordinates in the inserted elements, or nullopt outside the span.
  std::optional<QMatrix> coordinates(const QMatrix& x) const {
    auto [residual, c] = reduce(x);
    if (!residual.empty()) return std::nullopt;
    std::vector<QScalar> out(count_);
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (!c[r].is_zero())
        for (std::size_t j = 0; j < rows_[r].combo.size(); ++j) out[j] += c[r] * rows_[r].combo[j];
    QMatrix col(count_, 1);
    for (std::size_t j = 0; j < count_; ++j)
      if (!out[j].is_zero()) col.set(j, 0, out[j]);
    return col;
  }

  std::size_t size() const { return count_; }

 private:
  using Vec = std::map<std::size_t, QScalar>;
  struct Row {
    std::size_t pivot;
    Vec v;
    std::vector<QScalar> combo;
  };

  std::pair<Vec, std::vector<QScalar>> reduce(const QMatrix& x) const {
    Vec v;
    for (const auto& [k, s] : x.entries()) v.emplace(k.first * x.cols() + k.second, s);
    std::vector<QScalar> c(rows_.size());
    // Later rows vanish at earlier pivots, so one pass in insertion order suffices.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      auto it = v.find(rows_[r].pivot);
      if (it == v.end()) continue;
      c[r] = it->second;
      for (const auto& [k, s] : rows_[r].v) {
        QScalar& slot = v[k];
        slot -= c[r] * s;
        if (slot.is_zero()) v.erase(k);
      }
    }
    return {std::move(v), std::move(c)};
  }

  std::vector<Row> rows_;
  std::size_t count_ = 0;
};

SpanSolver solver_of(const MatrixAlgebra& a) {
  SpanSolver s;
  for (const auto& b : a.basis)
    if (!s.add(b)) throw InvalidInput("algebra basis is linearly dependent");
  return s;
}

std::vector<VertexSet> subsets_of(VertexSet s) {
  std::vector<VertexSet> out;
  std::uint64_t m = s.bits();
  for (std::uint64_t x = m;; x = (x - 1) & m) {
    out.push_back(VertexSet(x));
    if (x == 0) break;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

LabelledDiagram induced_labels(const LabelledDiagram& d, VertexSet b) {
  auto vs = b.vertices();
  LabelledDiagram out(d.diagram().induced(b));
  for (std::size_t x = 0; x < vs.size(); ++x)
    for (std::size_t y = x + 1; y < vs.size(); ++y)
      if (d.diagram().adjacent(vs[x], vs[y])) out.set_label(x, y, d.label(vs[x], vs[y]));
  return out;
}

// Solutions X of X A_k = B_k X for all k.
std::vector<QMatrix> intertwiners(const std::vector<QMatrix>& a, const std::vector<QMatrix>& b) {
  const std::size_t n = a.at(0).rows(), m = b.at(0).rows();
  QMatrix system(0, m * n);
  for (std::size_t k = 0; k < a.size(); ++k)
    system = QMatrix::vstack(system, b[k].kron(QMatrix::identity(n)) - QMatrix::identity(m).kron(a[k].transpose()));
  QMatrix ker = kernel_basis(system);
  std::vector<QMatrix> out;
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    QMatrix x(m, n);
    for (const auto& [key, v] : ker.entries())
      if (key.second == c) x.set(key.first / n, key.first % n, v);
    out.push_back(x);
  }
  return out;
}

std::vector<QMatrix> quantum_generators(const WeightModule& v) {
  std::vector<QMatrix> g;
  for (std::size_t j = 0; j < v.data.rank(); ++j) {
    g.push_back(v.e[j]);
    g.push_back(v.f[j]);
    g.push_back(k_operator(v, j));
  }
  return g;
}

std::vector<QMatrix> classical_generators(const ChevalleyModule& v) {
  std::vector<QMatrix> g;
  for (std::size_t j = 0; j < v.rank(); ++j) {
    g.push_back(to_qmatrix(v.e[j]));
    g.push_back(to_qmatrix(v.f[j]));
    g.push_back(to_qmatrix(v.h[j]));
  }
  return g;
}

// Generators of the rank-one algebra at vertex i.
std::vector<QMatrix> local_generators(const CoxeterWitness& w, std::size_t m, std::size_t i) {
  if (w.kind == CoxeterWitness::Kind::kQuantum) {
    const WeightModule& v = w.quantum[m];
    std::vector<QMatrix> g{v.e[i], v.f[i]};
    for (std::size_t j = 0; j < v.data.rank(); ++j) g.push_back(k_operator(v, j));
    return g;
  }
  const ChevalleyModule& v = w.classical[m];
  std::vector<QMatrix> g{to_qmatrix(v.e[i]), to_qmatrix(v.f[i])};
  for (const auto& h : v.h) g.push_back(to_qmatrix(h));
  return g;
}

// S_i on V_a (x) V_b computed from the tensor module.
QMatrix tensor_s(const CoxeterWitness& w, std::size_t i, std::size_t a, std::size_t b) {
  if (w.kind == CoxeterWitness::Kind::kQuantum)
    return quantum_weyl_operator(coproduct_action(w.quantum[a], w.quantum[b]), i);
  return to_qmatrix(tits_operator(tensor_module(w.classical[a], w.classical[b]), i));
}

// c_i : V_a (x) V_b -> V_b (x) V_a.
QMatrix braiding(const CoxeterWitness& w, std::size_t i, std::size_t a, std::size_t b) {
  QMatrix p = flip_matrix<QScalar>(w.module_dim(a), w.module_dim(b));
  if (w.kind == CoxeterWitness::Kind::kClassical) return p;
  return inverse(rank1_r_matrix(w.quantum[b], w.quantum[a], i)) * p;
}

}  // namespace

MatrixAlgebra generated_algebra(std::size_t n, const std::vector<QMatrix>& generators) {
  MatrixAlgebra a{n, {QMatrix::identity(n)}};
  SpanSolver span;
  span.add(a.basis[0]);
  for (std::size_t k = 0; k < a.basis.size(); ++k) {
    for (const auto& g : generators) {
      if (g.rows() != n || g.cols() != n) throw DimensionMismatch("generator of wrong shape");
      QMatrix x = a.basis[k] * g;
      if (span.add(x)) a.basis.push_back(std::move(x));
    }
  }
  return a;
}

QMatrix algebra_coordinates(const MatrixAlgebra& a, const QMatrix& x) {
  auto c = solver_of(a).coordinates(x);
  if (!c) throw InvalidInput("matrix outside the algebra");
  return *c;
}

QMatrix algebra_element(const MatrixAlgebra& a, const QMatrix& coords) {
  QMatrix x(a.n, a.n);
  for (const auto& [k, v] : coords.entries()) x += a.basis.at(k.first) * v;
  return x;
}

LaxDAlgebra lax_d_algebra_from_operators(const Diagram& d, std::size_t n, const std::vector<QMatrix>& ops) {
  if (ops.size() != d.size()) throw DimensionMismatch("one operator per vertex expected");
  LaxDAlgebra l{d, {}, {}};
  for (VertexSet b : subsets_of(d.all())) {
    std::vector<QMatrix> gens;
    for (unsigned v : b.vertices()) gens.push_back(ops[v]);
    l.algebras[b] = generated_algebra(n, gens);
  }
  for (VertexSet b : subsets_of(d.all())) {
    const MatrixAlgebra& big = l.algebras[b];
    SpanSolver solver = solver_of(big);
    for (VertexSet b1 : subsets_of(b)) {
      const MatrixAlgebra& small = l.algebras[b1];
      if (b1 == b) {
        l.maps[{b, b}] = QMatrix::identity(big.dim());
        continue;
      }
      QMatrix m(big.dim(), 0);
      for (const auto& x : small.basis) {
        auto c = solver.coordinates(x);
        if (!c) throw InvalidInput("subalgebra not contained in the algebra of a larger subdiagram");
        m = QMatrix::hstack(m, *c);
      }
      l.maps[{b, b1}] = m;
    }
  }
  return l;
}

LaxDAlgebra constant_lax_d_algebra(const Diagram& d) {
  LaxDAlgebra l{d, {}, {}};
  for (VertexSet b : subsets_of(d.all())) l.algebras[b] = MatrixAlgebra{1, {QMatrix::identity(1)}};
  for (VertexSet b : subsets_of(d.all()))
    for (VertexSet b1 : subsets_of(b)) l.maps[{b, b1}] = QMatrix::identity(1);
  return l;
}

Report verify_lax_d_algebra(const LaxDAlgebra& l) {
  Report r;
  const auto all = subsets_of(l.diagram.all());
  std::map<VertexSet, SpanSolver> solvers;
  auto coords = [&](VertexSet b, const QMatrix& x) {
    auto it = solvers.find(b);
    if (it == solvers.end()) it = solvers.emplace(b, solver_of(l.algebras.at(b))).first;
    auto c = it->second.coordinates(x);
    if (!c) throw InvalidInput("matrix outside the algebra of " + b.to_string());
    return *c;
  };
  // Image under i_{BB'} of basis element k of A_{B'}, as a matrix in A_B.
  auto image = [&](VertexSet b, VertexSet b1, const QMatrix& coords) {
    return algebra_element(l.algebras.at(b), l.maps.at({b, b1}) * coords);
  };

  std::string bad;
  for (VertexSet b : all) {
    if (!l.algebras.count(b)) {
      bad = "missing algebra " + b.to_string();
      break;
    }
  }
  for (VertexSet b : all) {
    if (!bad.empty()) break;
    for (VertexSet b1 : subsets_of(b)) {
      auto it = l.maps.find({b, b1});
      if (it == l.maps.end() || it->second.rows() != l.algebras.at(b).dim() ||
          it->second.cols() != l.algebras.at(b1).dim()) {
        bad = "missing or misshapen map " + pair_name(b, b1);
        break;
      }
    }
  }
  if (!bad.empty()) {
    r.add("structure maps", false, bad);
    return r;
  }

  for (VertexSet b : all) {
    if (!bad.empty()) break;
    for (VertexSet b1 : subsets_of(b)) {
      const MatrixAlgebra& src = l.algebras.at(b1);
      QMatrix one = coords(b1, QMatrix::identity(src.n));
      if (image(b, b1, one) != QMatrix::identity(l.algebras.at(b).n)) {
        bad = pair_name(b, b1) + " not unital";
        break;
      }
      // An identity map is multiplicative; the identity axiom checks it is one.
      if (b1 == b && l.maps.at({b, b}) == QMatrix::identity(src.dim())) continue;
      for (std::size_t x = 0; x < src.dim() && bad.empty(); ++x)
        for (std::size_t y = 0; y < src.dim() && bad.empty(); ++y) {
          QMatrix prod = coords(b1, src.basis[x] * src.basis[y]);
          QMatrix lhs = image(b, b1, prod);
          QMatrix rhs = image(b, b1, unit_column(src.dim(), x)) * image(b, b1, unit_column(src.dim(), y));
          if (lhs != rhs) bad = pair_name(b, b1) + " not multiplicative on basis (" + std::to_string(x) + ", " +
                                std::to_string(y) + ")";
        }
      if (!bad.empty()) break;
    }
  }
  r.add("structure maps", bad.empty(), bad);

  bad.clear();
  for (VertexSet b : all)
    if (l.maps.at({b, b}) != QMatrix::identity(l.algebras.at(b).dim())) {
      bad = "i" + pair_name(b, b) + " is not the identity";
      break;
    }
  r.add("identity", bad.empty(), bad);

  bad.clear();
  for (VertexSet b : all) {
    for (VertexSet b1 : subsets_of(b)) {
      for (VertexSet b2 : subsets_of(b1))
        if (l.maps.at({b, b1}) * l.maps.at({b1, b2}) != l.maps.at({b, b2})) {
          bad = "(" + b.to_string() + ", " + b1.to_string() + ", " + b2.to_string() + ")";
          break;
        }
      if (!bad.empty()) break;
    }
    if (!bad.empty()) break;
  }
  r.add("transitivity", bad.empty(), bad);

  // m_B o (i_{BB'} (x) i_{BB''}) is an algebra map for B = B' u B'' orthogonal.
  bad.clear();
  for (VertexSet b : all) {
    for (VertexSet b1 : subsets_of(b)) {
      VertexSet b2 = b - b1;
      // With an empty side this reduces to unitality and multiplicativity.
      if (b1 > b2 || b1 == VertexSet() || !l.diagram.orthogonal(b1, b2)) continue;
      const MatrixAlgebra& s1 = l.algebras.at(b1);
      const MatrixAlgebra& s2 = l.algebras.at(b2);
      std::vector<QMatrix> im1, im2;
      for (std::size_t x = 0; x < s1.dim(); ++x) im1.push_back(image(b, b1, unit_column(s1.dim(), x)));
      for (std::size_t y = 0; y < s2.dim(); ++y) im2.push_back(image(b, b2, unit_column(s2.dim(), y)));
      for (std::size_t x = 0; x < s1.dim() && bad.empty(); ++x)
        for (std::size_t y = 0; y < s2.dim() && bad.empty(); ++y)
          for (std::size_t x1 = 0; x1 < s1.dim() && bad.empty(); ++x1)
            for (std::size_t y1 = 0; y1 < s2.dim() && bad.empty(); ++y1) {
              QMatrix lhs = im1[x] * im2[y] * im1[x1] * im2[y1];
              QMatrix rhs = image(b, b1, coords(b1, s1.basis[x] * s1.basis[x1])) *
                            image(b, b2, coords(b2, s2.basis[y] * s2.basis[y1]));
              if (lhs != rhs) bad = "(" + b.to_string() + ", " + b1.to_string() + ", " + b2.to_string() + ")";
            }
      if (!bad.empty()) break;
    }
    if (!bad.empty()) break;
  }
  r.add("orthogonal product", bad.empty(), bad);
  return r;
}

CoxeterWitness quantum_witness(const std::vector<WeightModule>& modules, std::vector<std::string> names) {
  if (modules.empty()) throw InvalidInput("witness needs at least one module");
  CoxeterWitness w;
  w.kind = CoxeterWitness::Kind::kQuantum;
  w.diagram = coxeter_labels_from_gcm(modules[0].data.cartan);
  w.quantum = modules;
  for (std::size_t m = 0; m < modules.size(); ++m) {
    if (!(modules[m].data == modules[0].data)) throw InvalidInput("witness modules over different data");
    std::vector<QMatrix> ops;
    for (std::size_t i = 0; i < modules[m].data.rank(); ++i) ops.push_back(quantum_weyl_operator(modules[m], i));
    w.s.push_back(std::move(ops));
    w.names.push_back(m < names.size() ? names[m] : "V" + std::to_string(m));
  }
  return w;
}

CoxeterWitness classical_witness(const std::vector<ChevalleyModule>& modules, std::vector<std::string> names) {
  if (modules.empty()) throw InvalidInput("witness needs at least one module");
  CoxeterWitness w;
  w.kind = CoxeterWitness::Kind::kClassical;
  w.diagram = coxeter_labels_from_gcm(modules[0].cartan);
  w.classical = modules;
  for (std::size_t m = 0; m < modules.size(); ++m) {
    if (modules[m].cartan != modules[0].cartan) throw InvalidInput("witness modules over different Cartan matrices");
    std::vector<QMatrix> ops;
    for (std::size_t i = 0; i < modules[m].rank(); ++i) ops.push_back(to_qmatrix(tits_operator(modules[m], i)));
    w.s.push_back(std::move(ops));
    w.names.push_back(m < names.size() ? names[m] : "V" + std::to_string(m));
  }
  return w;
}

Report verify_witness(const CoxeterWitness& w) {
  Report r;
  std::string bad;
  for (std::size_t m = 0; m < w.module_count() && bad.empty(); ++m) {
    if (w.s[m].size() != w.diagram.size()) bad = w.names[m] + ": wrong number of operators";
    for (const auto& s : w.s[m])
      if (bad.empty() && (!s.is_square() || s.rows() != w.module_dim(m) || determinant(s).is_zero()))
        bad = w.names[m] + ": operator not invertible or misshapen";
  }
  r.add("operators", bad.empty(), bad);
  if (!bad.empty()) return r;

  for (std::size_t m = 0; m < w.module_count(); ++m) {
    MatrixBraidRep<QScalar> rho(w.diagram, w.s[m]);
    auto fail = rho.first_failing_pair();
    if (fail && bad.empty())
      bad = w.names[m] + ": pair (" + std::to_string(fail->first) + ", " + std::to_string(fail->second) + ")";
  }
  r.add("braid relations", bad.empty(), bad);
  return r;
}

WeightModule restrict_weight_module(const WeightModule& v, VertexSet b) {
  auto vs = b.vertices();
  std::vector<std::size_t> idx(vs.begin(), vs.end());
  WeightModule out;
  out.data.cartan = v.data.cartan.select(idx, idx);
  for (auto i : idx) out.data.d.push_back(v.data.d.at(i));
  out.data.labels = coxeter_labels_from_gcm(out.data.cartan);
  out.data.lattice = v.data.lattice;
  for (const auto& wt : v.weights) {
    std::vector<long> r;
    for (auto i : idx) r.push_back(wt[i]);
    out.weights.push_back(r);
  }
  for (auto i : idx) {
    out.e.push_back(v.e[i]);
    out.f.push_back(v.f[i]);
  }
  return out;
}

ChevalleyModule restrict_chevalley_module(const ChevalleyModule& v, VertexSet b) {
  auto vs = b.vertices();
  std::vector<std::size_t> idx(vs.begin(), vs.end());
  ChevalleyModule out;
  out.cartan = v.cartan.select(idx, idx);
  for (auto i : idx) {
    out.e.push_back(v.e[i]);
    out.f.push_back(v.f[i]);
    out.h.push_back(v.h[i]);
  }
  return out;
}

BraidRepFamily braid_reps_from_witness(const CoxeterWitness& w, VertexSet b, std::size_t module) {
  if (module >= w.module_count()) throw InvalidInput("module index out of range");
  if (!b.subset_of(w.diagram.diagram().all())) throw InvalidInput("subdiagram outside the diagram");
  if (!verify_witness(w).ok()) throw InvalidInput("witness fails verification");

  BraidRepFamily fam;
  fam.base = b;
  const Diagram& d = w.diagram.diagram();
  fam.indexing = enumerate_nested_sets(d, b, VertexSet(), true);
  const auto vs = b.vertices();
  std::vector<QMatrix> gens;
  for (unsigned v : vs) gens.push_back(w.s[module][v]);
  const LabelledDiagram sub = induced_labels(w.diagram, b);
  // Trivial Upsilon: rho_F(S_i) = S_i for every F.
  for (std::size_t k = 0; k < fam.indexing.size(); ++k) fam.reps.emplace_back(sub, gens);

  std::string bad;
  for (std::size_t k = 0; k < fam.reps.size() && bad.empty(); ++k)
    if (auto f = fam.reps[k].first_failing_pair())
      bad = fam.indexing[k].to_string() + ": pair (" + std::to_string(vs[f->first]) + ", " +
            std::to_string(vs[f->second]) + ")";
  fam.report.add("braid relations", bad.empty(), bad);

  bad.clear();
  for (std::size_t k = 1; k < fam.reps.size() && bad.empty(); ++k)
    for (std::size_t x = 0; x < vs.size(); ++x)
      if (fam.reps[k].generator(x) != fam.reps[0].generator(x)) {
        bad = fam.indexing[k].to_string() + " vs " + fam.indexing[0].to_string();
        break;
      }
  fam.report.add("Ad-compatibility", bad.empty(), bad);

  bad.clear();
  for (VertexSet b1 : subsets_of(b)) {
    if (b1.empty() || !bad.empty()) continue;
    auto sub_vs = b1.vertices();
    for (std::size_t x = 0; x < sub_vs.size(); ++x) {
      QMatrix restricted =
          w.kind == CoxeterWitness::Kind::kQuantum
              ? quantum_weyl_operator(restrict_weight_module(w.quantum[module], b1), x)
              : to_qmatrix(tits_operator(restrict_chevalley_module(w.classical[module], b1), x));
      if (restricted != w.s[module][sub_vs[x]]) {
        bad = pair_name(b, b1) + " at vertex " + std::to_string(sub_vs[x]);
        break;
      }
    }
  }
  fam.report.add("restriction square", bad.empty(), bad);
  return fam;
}

Report verify_coproduct_axiom(const CoxeterWitness& w, std::size_t i, std::size_t a, std::size_t b) {
  if (i >= w.diagram.size() || a >= w.module_count() || b >= w.module_count())
    throw InvalidInput("vertex or module index out of range");
  const QMatrix lhs = braiding(w, i, a, b) * tensor_s(w, i, a, b);
  const QMatrix rhs = flip_matrix<QScalar>(w.module_dim(a), w.module_dim(b)) * w.s[a][i].kron(w.s[b][i]);
  Report r;
  r.add("coproduct identity", lhs == rhs,
        lhs == rhs ? "" : w.names[a] + " (x) " + w.names[b] + ", vertex " + std::to_string(i) + ": " + first_entry(lhs, rhs));
  return r;
}

std::vector<QMatrix> witness_morphisms(const CoxeterWitness& w, std::size_t a, std::size_t b) {
  if (w.kind == CoxeterWitness::Kind::kQuantum)
    return intertwiners(quantum_generators(w.quantum[a]), quantum_generators(w.quantum[b]));
  return intertwiners(classical_generators(w.classical[a]), classical_generators(w.classical[b]));
}

Report half_balance_check(const CoxeterWitness& w) {
  Report r;
  std::string gen_bad, nat_bad, bal_bad;
  for (std::size_t i = 0; i < w.diagram.size(); ++i) {
    for (std::size_t m = 0; m < w.module_count() && gen_bad.empty(); ++m) {
      QMatrix sq = w.s[m][i] * w.s[m][i];
      for (const auto& g : local_generators(w, m, i))
        if (!commutator(sq, g).is_zero()) {
          gen_bad = w.names[m] + ", vertex " + std::to_string(i);
          break;
        }
    }
    for (std::size_t a = 0; a < w.module_count() && nat_bad.empty(); ++a)
      for (std::size_t b = 0; b < w.module_count() && nat_bad.empty(); ++b)
        for (const auto& x : witness_morphisms(w, a, b))
          if (x * w.s[a][i] * w.s[a][i] != w.s[b][i] * w.s[b][i] * x) {
            nat_bad = w.names[a] + " -> " + w.names[b] + ", vertex " + std::to_string(i);
            break;
          }
    for (std::size_t a = 0; a < w.module_count() && bal_bad.empty(); ++a)
      for (std::size_t b = 0; b < w.module_count() && bal_bad.empty(); ++b) {
        QMatrix t = tensor_s(w, i, a, b);
        QMatrix lhs = t * t;
        QMatrix sa = w.s[a][i] * w.s[a][i], sb = w.s[b][i] * w.s[b][i];
        QMatrix rhs = inverse(braiding(w, i, b, a) * braiding(w, i, a, b)) * sa.kron(sb);
        if (lhs != rhs)
          bal_bad = w.names[a] + " (x) " + w.names[b] + ", vertex " + std::to_string(i) + ": " + first_entry(lhs, rhs);
      }
  }
  r.add("S_i^2 commutes with generators", gen_bad.empty(), gen_bad);
  r.add("S_i^2 natural", nat_bad.empty(), nat_bad);
  r.add("balance", bal_bad.empty(), bal_bad);
  return r;
}

}  // namespace coxkit
