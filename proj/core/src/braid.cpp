#include "coxkit/braid.hpp"

namespace coxkit {

CoxeterLabel CoxeterLabel::finite(unsigned m) {
  if (m < 2) throw InvalidInput("Coxeter labels start at 2");
  return CoxeterLabel(m);
}

unsigned CoxeterLabel::value() const {
  if (is_infinite()) throw Error("infinite Coxeter label has no numeric value");
  return m_;
}

LabelledDiagram::LabelledDiagram(Diagram d) : d_(std::move(d)) {
  for (auto [i, j] : d_.edges()) labels_.emplace(std::make_pair(i, j), CoxeterLabel::finite(3));
}

void LabelledDiagram::set_label(unsigned i, unsigned j, CoxeterLabel m) {
  if (i > j) std::swap(i, j);
  if (!d_.adjacent(i, j)) throw InvalidInput("labels are only carried by edges");
  if (!m.is_infinite() && m.value() < 3) throw InvalidInput("edge labels must be at least 3");
  labels_.insert_or_assign(std::make_pair(i, j), m);
}

CoxeterLabel LabelledDiagram::label(unsigned i, unsigned j) const {
  if (i == j) throw InvalidInput("label of a vertex with itself");
  if (i > j) std::swap(i, j);
  auto it = labels_.find({i, j});
  return it == labels_.end() ? CoxeterLabel::finite(2) : it->second;
}

CoxeterLabel coxeter_label(const RMatrix& a, unsigned i, unsigned j) {
  const Rational aij = a.at(i, j), aji = a.at(j, i);
  if (aij.get_den() != 1 || aji.get_den() != 1) throw InvalidInput("coxeter_label needs an integral matrix");
  // s_i(alpha_j) = alpha_j - a_ij alpha_i on the basis (alpha_i, alpha_j)
  RMatrix si = RMatrix::from_dense({{Rational(-1), Rational(-aij)}, {Rational(0), Rational(1)}});
  RMatrix sj = RMatrix::from_dense({{Rational(1), Rational(0)}, {Rational(-aji), Rational(-1)}});
  RMatrix p = si * sj, acc = p;
  const RMatrix id = RMatrix::identity(2);
  // An integral 2x2 matrix of finite order has order 1, 2, 3, 4 or 6.
  for (unsigned k = 1; k <= 6; ++k) {
    if (acc == id) return CoxeterLabel::finite(std::max(k, 2u));
    acc = acc * p;
  }
  return CoxeterLabel::infinity();
}

LabelledDiagram coxeter_labels_from_gcm(const RMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("GCM must be square");
  const unsigned n = static_cast<unsigned>(a.rows());
  Diagram d = Diagram::of_matrix([&](unsigned i, unsigned j) { return a.at(i, j); }, n);
  LabelledDiagram ld(d);
  for (auto [i, j] : d.edges()) ld.set_label(i, j, coxeter_label(a, i, j));
  return ld;
}

BraidWord free_reduce(const BraidWord& w) {
  BraidWord out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().generator == l.generator && out.back().inverse != l.inverse) out.pop_back();
    else out.push_back(l);
  }
  return out;
}

BraidWord alternating_word(unsigned i, unsigned j, unsigned m) {
  BraidWord w;
  for (unsigned k = 0; k < m; ++k) w.push_back({k % 2 == 0 ? i : j, false});
  return w;
}

}  // namespace coxkit
