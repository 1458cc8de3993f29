#pragma once

#include <optional>
#include <vector>

#include "coxkit/linear_solve.hpp"
#include "coxkit/sparse_matrix.hpp"

namespace coxkit {

// Power series sum_{k=0}^{N} hbar^k C_k of square matrices, truncated at
// order N (terms of degree > N are discarded).
template <class S>
class TruncatedSeries {
 public:
  using Matrix = SparseMatrix<S>;

  TruncatedSeries(std::size_t dim, std::size_t order)
      : dim_(dim), order_(order), c_(order + 1, Matrix(dim, dim)) {}
  // hbar^degree * m.
  static TruncatedSeries monomial(const Matrix& m, std::size_t degree, std::size_t order) {
    TruncatedSeries s(m.rows(), order);
    if (degree <= order) s.c_[degree] = m;
    return s;
  }
  static TruncatedSeries identity(std::size_t dim, std::size_t order) {
    return monomial(Matrix::identity(dim), 0, order);
  }

  std::size_t dim() const { return dim_; }
  std::size_t order() const { return order_; }
  const Matrix& coefficient(std::size_t k) const { return c_.at(k); }
  const std::vector<Matrix>& coefficients() const { return c_; }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check(o);
    for (std::size_t k = 0; k <= order_; ++k) c_[k] += o.c_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check(o);
    for (std::size_t k = 0; k <= order_; ++k) c_[k] -= o.c_[k];
    return *this;
  }
  TruncatedSeries& operator*=(const S& s) {
    for (auto& m : c_) m *= s;
    return *this;
  }
  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const S& s) { return a *= s; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check(b);
    TruncatedSeries r(a.dim_, a.order_);
    for (std::size_t i = 0; i <= a.order_; ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= a.order_; ++j)
        if (!b.c_[j].is_zero()) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  // Conjugate every coefficient: P C_k P^{-1}.
  TruncatedSeries conjugated(const Matrix& p, const Matrix& p_inv) const {
    TruncatedSeries r(dim_, order_);
    for (std::size_t k = 0; k <= order_; ++k) r.c_[k] = p * c_[k] * p_inv;
    return r;
  }

  // Multiplicative inverse; requires an invertible degree-0 coefficient.
  TruncatedSeries inverse() const {
    Matrix c0inv = coxkit::inverse(c_[0]);
    TruncatedSeries r(dim_, order_);
    r.c_[0] = c0inv;
    for (std::size_t k = 1; k <= order_; ++k) {
      Matrix acc(dim_, dim_);
      for (std::size_t j = 1; j <= k; ++j)
        if (!c_[j].is_zero()) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -(c0inv * acc);
    }
    return r;
  }

  // Lowest degree where the two series differ, or nullopt if they agree.
  std::optional<std::size_t> first_difference(const TruncatedSeries& o) const {
    check(o);
    for (std::size_t k = 0; k <= order_; ++k)
      if (!(c_[k] == o.c_[k])) return k;
    return std::nullopt;
  }
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !a.first_difference(b).has_value();
  }

 private:
  void check(const TruncatedSeries& o) const {
    if (dim_ != o.dim_ || order_ != o.order_) throw DimensionMismatch("truncated series shape mismatch");
  }

  std::size_t dim_;
  std::size_t order_;
  std::vector<Matrix> c_;
};

// exp of a series without constant term: sum_j X^j / j!, truncated.
// Throws InvalidInput if the degree-0 coefficient is nonzero.
template <class S>
TruncatedSeries<S> series_exp(const TruncatedSeries<S>& x) {
  if (!x.coefficient(0).is_zero()) throw InvalidInput("series_exp: argument has a nonzero hbar^0 term");
  auto result = TruncatedSeries<S>::identity(x.dim(), x.order());
  auto term = result;
  for (std::size_t j = 1; j <= x.order(); ++j) {
    term = term * x * (S(1) / S(static_cast<long>(j)));
    result += term;
  }
  return result;
}

// exp(hbar^k X) truncated at `order`; k must be positive.
template <class S>
TruncatedSeries<S> series_exp(const SparseMatrix<S>& x, std::size_t k, std::size_t order) {
  if (k == 0) throw InvalidInput("series_exp: scaling power must be at least 1");
  return series_exp(TruncatedSeries<S>::monomial(x, k, order));
}

}  // namespace coxkit
