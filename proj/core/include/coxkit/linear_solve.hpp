#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "coxkit/polynomial.hpp"
#include "coxkit/sparse_matrix.hpp"

namespace coxkit {

// Integral domain used for fraction-free elimination over the field S.
template <class S>
struct RingTraits;

template <>
struct RingTraits<Rational> {
  using Ring = Integer;
  struct Context {};
  static Context context(const std::vector<std::vector<Rational>>&) { return {}; }
  // Row scaled into the ring, and the field factor it was scaled by.
  static std::pair<std::vector<Integer>, Rational> clear(const Context&, const std::vector<Rational>& row);
  static bool is_zero(const Integer& z) { return z == 0; }
  static std::size_t weight(const Integer& z) { return bit_size(z); }
  static Integer one() { return 1; }
  static Integer exact_div(const Integer& a, const Integer& b);
  static Rational to_field(const Context&, const Integer& z) { return Rational(z); }
};

template <>
struct RingTraits<QScalar> {
  using Ring = Polynomial;
  struct Context {
    std::uint32_t lattice = 1;
  };
  static Context context(const std::vector<std::vector<QScalar>>& rows);
  static std::pair<std::vector<Polynomial>, QScalar> clear(const Context& ctx, const std::vector<QScalar>& row);
  static bool is_zero(const Polynomial& p) { return p.is_zero(); }
  static std::size_t weight(const Polynomial& p) { return static_cast<std::size_t>(p.degree()); }
  static Polynomial one() { return Polynomial(Rational(1)); }
  static Polynomial exact_div(const Polynomial& a, const Polynomial& b) { return Polynomial::exact_div(a, b); }
  static QScalar to_field(const Context& ctx, const Polynomial& p) {
    return QScalar::from_parts(ctx.lattice, 0, p, Polynomial(Rational(1)));
  }
};

inline std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

template <class S>
struct LinearSolution {
  bool consistent = false;
  std::size_t rank = 0;
  // cols(A) x cols(b) with A * particular = b; zero matrix when inconsistent.
  SparseMatrix<S> particular;
  // cols(A) x nullity; the columns form a basis of ker A.
  SparseMatrix<S> kernel;
  std::vector<std::size_t> pivot_columns;
};

namespace detail {

template <class S>
struct Echelon {
  using RT = RingTraits<S>;
  typename RT::Context ctx;
  std::vector<std::vector<typename RT::Ring>> rows;
  std::vector<S> scales;                 // row i of the ring matrix = scales[i] * original row
  std::vector<std::size_t> pivot_cols;   // pivot column of echelon row k
  typename RT::Ring last_pivot = RT::one();
  int row_sign = 1;
};

// Fraction-free (Bareiss) forward elimination restricted to the first
// `a_cols` columns. Pivot: least ring weight, ties by lowest (row, col).
template <class S>
Echelon<S> bareiss(const std::vector<std::vector<S>>& dense, std::size_t a_cols) {
  using RT = RingTraits<S>;
  using Ring = typename RT::Ring;
  Echelon<S> ech;
  ech.ctx = RT::context(dense);
  for (const auto& row : dense) {
    auto [r, s] = RT::clear(ech.ctx, row);
    ech.rows.push_back(std::move(r));
    ech.scales.push_back(std::move(s));
  }
  auto& a = ech.rows;
  const std::size_t n = a.size();
  const std::size_t width = n ? a[0].size() : 0;
  std::vector<bool> used(a_cols, false);
  Ring prev = RT::one();
  for (std::size_t r = 0; r < n; ++r) {
    std::size_t bi = n, bj = 0, bw = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = r; i < n; ++i)
      for (std::size_t j = 0; j < a_cols; ++j) {
        if (used[j] || RT::is_zero(a[i][j])) continue;
        std::size_t w = RT::weight(a[i][j]);
        if (w < bw) {
          bw = w;
          bi = i;
          bj = j;
        }
      }
    if (bi == n) break;
    if (bi != r) {
      std::swap(a[bi], a[r]);
      std::swap(ech.scales[bi], ech.scales[r]);
      ech.row_sign = -ech.row_sign;
    }
    const Ring p = a[r][bj];
    for (std::size_t i = r + 1; i < n; ++i) {
      const Ring f = a[i][bj];
      for (std::size_t j = 0; j < width; ++j) {
        if (j == bj) continue;
        Ring v = p * a[i][j];
        if (!RT::is_zero(f) && !RT::is_zero(a[r][j])) v -= f * a[r][j];
        a[i][j] = RT::is_zero(v) ? v : RT::exact_div(v, prev);
      }
      a[i][bj] = Ring();
    }
    prev = p;
    used[bj] = true;
    ech.pivot_cols.push_back(bj);
  }
  ech.last_pivot = prev;
  return ech;
}

template <class S>
std::vector<std::vector<S>> dense_augmented(const SparseMatrix<S>& A, const SparseMatrix<S>* b) {
  std::size_t k = b ? b->cols() : 0;
  std::vector<std::vector<S>> d(A.rows(), std::vector<S>(A.cols() + k, S(0)));
  for (const auto& [key, v] : A.entries()) d[key.first][key.second] = v;
  if (b)
    for (const auto& [key, v] : b->entries()) d[key.first][A.cols() + key.second] = v;
  return d;
}

}  // namespace detail

// Solves A X = b exactly. Rank, kernel basis and (when consistent) the
// particular solution with every free variable set to zero.
template <class S>
LinearSolution<S> solve_linear(const SparseMatrix<S>& A, const SparseMatrix<S>& b) {
  using RT = RingTraits<S>;
  if (A.rows() != b.rows()) throw DimensionMismatch("solve_linear: A and b row counts differ");
  const std::size_t c = A.cols(), k = b.cols();
  auto ech = detail::bareiss(detail::dense_augmented(A, &b), c);
  LinearSolution<S> sol;
  sol.rank = ech.pivot_cols.size();
  sol.pivot_columns = ech.pivot_cols;
  sol.consistent = true;
  for (std::size_t i = sol.rank; i < ech.rows.size() && sol.consistent; ++i)
    for (std::size_t j = c; j < c + k; ++j)
      if (!RT::is_zero(ech.rows[i][j])) {
        sol.consistent = false;
        break;
      }
  // Reduced echelon form over the field for the pivot rows.
  const std::size_t r = sol.rank;
  std::vector<std::vector<S>> red(r, std::vector<S>(c + k, S(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c + k; ++j)
      if (!RT::is_zero(ech.rows[i][j])) red[i][j] = RT::to_field(ech.ctx, ech.rows[i][j]);
  for (std::size_t i = r; i-- > 0;) {
    const std::size_t pc = ech.pivot_cols[i];
    const S inv = S(1) / red[i][pc];
    for (auto& x : red[i])
      if (!ScalarTraits<S>::is_zero(x)) x *= inv;
    for (std::size_t u = 0; u < i; ++u) {
      if (ScalarTraits<S>::is_zero(red[u][pc])) continue;
      const S f = red[u][pc];
      for (std::size_t j = 0; j < c + k; ++j)
        if (!ScalarTraits<S>::is_zero(red[i][j])) red[u][j] -= f * red[i][j];
    }
  }
  sol.particular = SparseMatrix<S>(c, k);
  if (sol.consistent)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < k; ++j) sol.particular.set(ech.pivot_cols[i], j, red[i][c + j]);
  std::vector<bool> is_pivot(c, false);
  for (auto pc : ech.pivot_cols) is_pivot[pc] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < c; ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  sol.kernel = SparseMatrix<S>(c, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    sol.kernel.set(free_cols[f], f, S(1));
    for (std::size_t i = 0; i < r; ++i) sol.kernel.set(ech.pivot_cols[i], f, -red[i][free_cols[f]]);
  }
  return sol;
}

template <class S>
std::size_t rank(const SparseMatrix<S>& A) {
  if (A.is_zero()) return 0;
  return detail::bareiss(detail::dense_augmented<S>(A, nullptr), A.cols()).pivot_cols.size();
}

template <class S>
SparseMatrix<S> kernel_basis(const SparseMatrix<S>& A) {
  return solve_linear(A, SparseMatrix<S>(A.rows(), 0)).kernel;
}

template <class S>
S determinant(const SparseMatrix<S>& A) {
  using RT = RingTraits<S>;
  if (!A.is_square()) throw DimensionMismatch("determinant of non-square " + A.shape());
  const std::size_t n = A.rows();
  if (n == 0) return S(1);
  auto ech = detail::bareiss(detail::dense_augmented<S>(A, nullptr), n);
  if (ech.pivot_cols.size() < n) return S(0);
  // sign of the column permutation step -> pivot column
  std::vector<std::size_t> perm = ech.pivot_cols;
  int sign = ech.row_sign;
  for (std::size_t i = 0; i < n; ++i)
    while (perm[i] != i) {
      std::swap(perm[i], perm[perm[i]]);
      sign = -sign;
    }
  S det = RT::to_field(ech.ctx, ech.last_pivot);
  for (const auto& s : ech.scales) det /= s;
  return sign < 0 ? -det : det;
}

// Throws Error if A is singular.
template <class S>
SparseMatrix<S> inverse(const SparseMatrix<S>& A) {
  if (!A.is_square()) throw DimensionMismatch("inverse of non-square " + A.shape());
  auto sol = solve_linear(A, SparseMatrix<S>::identity(A.rows()));
  if (sol.rank < A.rows()) throw Error("inverse: singular matrix");
  return sol.particular;
}

// Coordinates of v (column) in the column span of B, if it lies there.
template <class S>
std::optional<SparseMatrix<S>> coordinates_in(const SparseMatrix<S>& B, const SparseMatrix<S>& v) {
  auto sol = solve_linear(B, v);
  if (!sol.consistent) return std::nullopt;
  return sol.particular;
}

// Columns of A forming a basis of its column span (first-come order).
template <class S>
SparseMatrix<S> column_basis(const SparseMatrix<S>& A) {
  SparseMatrix<S> out(A.rows(), 0);
  std::size_t r = 0;
  for (std::size_t j = 0; j < A.cols(); ++j) {
    auto candidate = SparseMatrix<S>::hstack(out, A.select(iota(A.rows()), {j}));
    std::size_t rr = rank(candidate);
    if (rr > r) {
      out = std::move(candidate);
      r = rr;
    }
  }
  return out;
}

}  // namespace coxkit
