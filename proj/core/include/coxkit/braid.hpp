#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxkit/diagram.hpp"
#include "coxkit/linear_solve.hpp"
#include "coxkit/sparse_matrix.hpp"

namespace coxkit {

// m_ij in {2, 3, ..., infinity}; infinity is an explicit state, not a number.
class CoxeterLabel {
 public:
  static CoxeterLabel finite(unsigned m);
  static CoxeterLabel infinity() { return CoxeterLabel(0); }
  bool is_infinite() const { return m_ == 0; }
  // Throws Error for infinity.
  unsigned value() const;
  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(m_); }
  friend bool operator==(CoxeterLabel, CoxeterLabel) = default;

 private:
  explicit CoxeterLabel(unsigned m) : m_(m) {}
  unsigned m_;
};

// Diagram with a Coxeter label on every edge; non-adjacent pairs are 2.
class LabelledDiagram {
 public:
  LabelledDiagram() = default;
  explicit LabelledDiagram(Diagram d);
  // Labels must be >= 3 (or infinite) and are only allowed on edges.
  void set_label(unsigned i, unsigned j, CoxeterLabel m);

  const Diagram& diagram() const { return d_; }
  unsigned size() const { return d_.size(); }
  CoxeterLabel label(unsigned i, unsigned j) const;

 private:
  Diagram d_;
  std::map<std::pair<unsigned, unsigned>, CoxeterLabel> labels_;
};

// Order of s_i s_j in the rank-2 reflection representation of A; the GCM
// must be integral. Orders are exact (crystallographic: 2, 3, 4, 6, inf).
CoxeterLabel coxeter_label(const RMatrix& a, unsigned i, unsigned j);
LabelledDiagram coxeter_labels_from_gcm(const RMatrix& a);

struct BraidLetter {
  unsigned generator;
  bool inverse = false;
  friend bool operator==(BraidLetter, BraidLetter) = default;
};
using BraidWord = std::vector<BraidLetter>;

// Cancel adjacent x x^{-1} pairs until none remain.
BraidWord free_reduce(const BraidWord& w);
// Alternating word s_i s_j s_i ... of length m.
BraidWord alternating_word(unsigned i, unsigned j, unsigned m);

template <class S>
struct BraidRelationCheck {
  bool holds = false;
  // (s_i s_j ...) - (s_j s_i ...); zero iff the relation holds.
  SparseMatrix<S> difference;
};

// Generalized braid group representation: one invertible operator per vertex.
// Inverses are computed once, at construction.
template <class S>
class MatrixBraidRep {
 public:
  MatrixBraidRep(LabelledDiagram d, std::vector<SparseMatrix<S>> generators)
      : d_(std::move(d)), gens_(std::move(generators)) {
    if (gens_.size() != d_.size()) throw DimensionMismatch("one generator per vertex expected");
    for (const auto& g : gens_) {
      if (!g.is_square() || g.rows() != gens_[0].rows()) throw DimensionMismatch("generators must share one square shape");
      invs_.push_back(inverse(g));
    }
  }

  const LabelledDiagram& diagram() const { return d_; }
  std::size_t dim() const { return gens_.empty() ? 0 : gens_[0].rows(); }
  const SparseMatrix<S>& generator(unsigned i) const { return gens_.at(i); }
  const SparseMatrix<S>& generator_inverse(unsigned i) const { return invs_.at(i); }

  SparseMatrix<S> evaluate(const BraidWord& w) const {
    auto r = SparseMatrix<S>::identity(dim());
    for (const auto& l : w) r = r * (l.inverse ? invs_.at(l.generator) : gens_.at(l.generator));
    return r;
  }

  BraidRelationCheck<S> check_relation(unsigned i, unsigned j, unsigned m) const {
    auto diff = evaluate(alternating_word(i, j, m)) - evaluate(alternating_word(j, i, m));
    return {diff.is_zero(), diff};
  }

  // Every relation with finite label holds. Reports the first failing pair.
  std::optional<std::pair<unsigned, unsigned>> first_failing_pair() const {
    for (unsigned i = 0; i < d_.size(); ++i)
      for (unsigned j = i + 1; j < d_.size(); ++j) {
        auto m = d_.label(i, j);
        if (m.is_infinite()) continue;
        if (!check_relation(i, j, m.value()).holds) return std::make_pair(i, j);
      }
    return std::nullopt;
  }

 private:
  LabelledDiagram d_;
  std::vector<SparseMatrix<S>> gens_;
  std::vector<SparseMatrix<S>> invs_;
};

template <class S>
BraidRelationCheck<S> verify_braid_relation(const MatrixBraidRep<S>& rho, unsigned i, unsigned j, unsigned m) {
  return rho.check_relation(i, j, m);
}

template <class S>
SparseMatrix<S> evaluate_word(const MatrixBraidRep<S>& rho, const BraidWord& w) {
  return rho.evaluate(w);
}

}  // namespace coxkit
