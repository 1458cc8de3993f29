#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coxkit/errors.hpp"
#include "coxkit/scalar_traits.hpp"

namespace coxkit {

// Sparse matrix keyed by (row, col). Zero entries are never stored, so two
// equal matrices have equal entry maps.
template <class S>
class SparseMatrix {
 public:
  using Scalar = S;
  using Key = std::pair<std::size_t, std::size_t>;
  using Entries = std::map<Key, S>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  static SparseMatrix identity(std::size_t n) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.e_.emplace(Key{i, i}, S(1));
    return m;
  }
  static SparseMatrix from_dense(const std::vector<std::vector<S>>& rows) {
    std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
    SparseMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw DimensionMismatch("ragged dense matrix");
      for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
  }
  // n x 1 column from a dense vector.
  static SparseMatrix column(const std::vector<S>& v) {
    SparseMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const { return e_.size(); }
  bool is_zero() const { return e_.empty(); }
  bool is_square() const { return rows_ == cols_; }
  const Entries& entries() const { return e_; }

  S at(std::size_t r, std::size_t c) const {
    auto it = e_.find({r, c});
    return it == e_.end() ? S(0) : it->second;
  }
  void set(std::size_t r, std::size_t c, const S& v) {
    check_index(r, c);
    if (ScalarTraits<S>::is_zero(v)) e_.erase({r, c});
    else e_[{r, c}] = v;
  }
  void add_to(std::size_t r, std::size_t c, const S& v) {
    check_index(r, c);
    if (ScalarTraits<S>::is_zero(v)) return;
    auto [it, inserted] = e_.try_emplace({r, c}, v);
    if (!inserted) {
      it->second += v;
      if (ScalarTraits<S>::is_zero(it->second)) e_.erase(it);
    }
  }

  // Entries of row r as an iterator range.
  auto row_begin(std::size_t r) const { return e_.lower_bound({r, 0}); }
  auto row_end(std::size_t r) const { return e_.lower_bound({r + 1, 0}); }

  std::vector<std::vector<S>> to_dense() const {
    std::vector<std::vector<S>> d(rows_, std::vector<S>(cols_, S(0)));
    for (const auto& [k, v] : e_) d[k.first][k.second] = v;
    return d;
  }
  std::vector<S> column_vector(std::size_t c) const {
    std::vector<S> v(rows_, S(0));
    for (const auto& [k, x] : e_)
      if (k.second == c) v[k.first] = x;
    return v;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows_);
    for (const auto& [k, v] : e_) t.e_.emplace(Key{k.second, k.first}, v);
    return t;
  }

  SparseMatrix operator-() const {
    SparseMatrix r(*this);
    for (auto& [k, v] : r.e_) v = -v;
    return r;
  }
  SparseMatrix& operator+=(const SparseMatrix& o) {
    same_shape(o);
    for (const auto& [k, v] : o.e_) add_to(k.first, k.second, v);
    return *this;
  }
  SparseMatrix& operator-=(const SparseMatrix& o) {
    same_shape(o);
    for (const auto& [k, v] : o.e_) add_to(k.first, k.second, -v);
    return *this;
  }
  SparseMatrix& operator*=(const S& s) {
    if (ScalarTraits<S>::is_zero(s)) {
      e_.clear();
      return *this;
    }
    for (auto& [k, v] : e_) v *= s;
    return *this;
  }
  friend SparseMatrix operator+(SparseMatrix a, const SparseMatrix& b) { return a += b; }
  friend SparseMatrix operator-(SparseMatrix a, const SparseMatrix& b) { return a -= b; }
  friend SparseMatrix operator*(SparseMatrix a, const S& s) { return a *= s; }
  friend SparseMatrix operator*(const S& s, SparseMatrix a) { return a *= s; }
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("product of " + a.shape() + " and " + b.shape());
    SparseMatrix r(a.rows_, b.cols_);
    auto it = a.e_.begin();
    while (it != a.e_.end()) {
      std::size_t i = it->first.first;
      std::map<std::size_t, S> acc;
      for (; it != a.e_.end() && it->first.first == i; ++it) {
        std::size_t k = it->first.second;
        for (auto jt = b.row_begin(k), end = b.row_end(k); jt != end; ++jt) {
          S prod = it->second * jt->second;
          auto [slot, fresh] = acc.try_emplace(jt->first.second, prod);
          if (!fresh) slot->second += prod;
        }
      }
      for (auto& [j, v] : acc)
        if (!ScalarTraits<S>::is_zero(v)) r.e_.emplace_hint(r.e_.end(), Key{i, j}, std::move(v));
    }
    return r;
  }

  // Kronecker product; basis index of (i, j) is i * other.dim + j.
  SparseMatrix kron(const SparseMatrix& b) const {
    SparseMatrix r(rows_ * b.rows_, cols_ * b.cols_);
    for (const auto& [ka, va] : e_)
      for (const auto& [kb, vb] : b.e_)
        r.e_.emplace(Key{ka.first * b.rows_ + kb.first, ka.second * b.cols_ + kb.second}, va * vb);
    return r;
  }

  // Submatrix with the given rows and columns, in the given order.
  SparseMatrix select(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    std::map<std::size_t, std::size_t> cpos;
    for (std::size_t j = 0; j < cols.size(); ++j) cpos[cols[j]] = j;
    SparseMatrix r(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (auto it = row_begin(rows[i]), end = row_end(rows[i]); it != end; ++it)
        if (auto c = cpos.find(it->first.second); c != cpos.end()) r.e_.emplace(Key{i, c->second}, it->second);
    return r;
  }

  // Stack [a | b] and [a ; b].
  static SparseMatrix hstack(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.rows_ != b.rows_) throw DimensionMismatch("hstack row mismatch");
    SparseMatrix r(a.rows_, a.cols_ + b.cols_);
    r.e_ = a.e_;
    for (const auto& [k, v] : b.e_) r.e_.emplace(Key{k.first, k.second + a.cols_}, v);
    return r;
  }
  static SparseMatrix vstack(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.cols_) throw DimensionMismatch("vstack column mismatch");
    SparseMatrix r(a.rows_ + b.rows_, a.cols_);
    r.e_ = a.e_;
    for (const auto& [k, v] : b.e_) r.e_.emplace(Key{k.first + a.rows_, k.second}, v);
    return r;
  }

  template <class F>
  auto map(F&& f) const -> SparseMatrix<decltype(f(std::declval<S>()))> {
    SparseMatrix<decltype(f(std::declval<S>()))> r(rows_, cols_);
    for (const auto& [k, v] : e_) r.set(k.first, k.second, f(v));
    return r;
  }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }
  std::string to_string() const {
    std::ostringstream os;
    os << "[" << shape() << "]";
    for (const auto& [k, v] : e_)
      os << " (" << k.first << "," << k.second << ")=" << ScalarTraits<S>::format(v);
    return os.str();
  }

 private:
  void check_index(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw DimensionMismatch("index out of range for " + shape());
  }
  void same_shape(const SparseMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionMismatch("shape " + shape() + " vs " + o.shape());
  }

  std::size_t rows_ = 0, cols_ = 0;
  Entries e_;
};

using QMatrix = SparseMatrix<QScalar>;
using RMatrix = SparseMatrix<Rational>;

inline QMatrix to_qmatrix(const RMatrix& m) {
  return m.map([](const Rational& x) { return QScalar(x); });
}

// Entrywise q -> 1. Throws PoleAtOne.
inline RMatrix specialize_at_one(const QMatrix& m) {
  return m.map([](const QScalar& x) { return x.specialize_at_one(); });
}

template <class S>
SparseMatrix<S> commutator(const SparseMatrix<S>& a, const SparseMatrix<S>& b) {
  return a * b - b * a;
}

// Flip V (x) W -> W (x) V for dim V = m, dim W = n.
template <class S>
SparseMatrix<S> flip_matrix(std::size_t m, std::size_t n) {
  SparseMatrix<S> p(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) p.set(j * m + i, i * n + j, S(1));
  return p;
}

template <class S>
SparseMatrix<S> matrix_power(const SparseMatrix<S>& a, unsigned k) {
  SparseMatrix<S> r = SparseMatrix<S>::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

}  // namespace coxkit
