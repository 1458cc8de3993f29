#pragma once

#include <cstddef>
#include <vector>

#include "coxkit/linear_solve.hpp"
#include "coxkit/report.hpp"

namespace coxkit {

using Vector = std::vector<Rational>;

// Lie algebra on Q^dim by structure constants:
// [x_i, x_j] = sum_k c(i, j, k) x_k.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  explicit LieAlgebra(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  const Rational& c(std::size_t i, std::size_t j, std::size_t k) const { return c_[(i * dim_ + j) * dim_ + k]; }
  Rational& c(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }

  Vector bracket(const Vector& x, const Vector& y) const;
  // ad(x_i) as a dim x dim matrix.
  RMatrix ad(std::size_t i) const;
  // dim x dim^2 matrix of x (x) y -> [x, y].
  RMatrix bracket_matrix() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

 private:
  std::size_t dim_ = 0;
  Vector c_;
};

// Lie bialgebra: delta(x_k) = sum_{p,q} d(k, p, q) x_p (x) x_q.
class LieBialgebra {
 public:
  LieBialgebra() = default;
  explicit LieBialgebra(LieAlgebra lie) : lie_(std::move(lie)), d_(lie_.dim() * lie_.dim() * lie_.dim()) {}

  std::size_t dim() const { return lie_.dim(); }
  const LieAlgebra& lie() const { return lie_; }
  LieAlgebra& lie() { return lie_; }
  const Rational& d(std::size_t k, std::size_t p, std::size_t q) const { return d_[(k * dim() + p) * dim() + q]; }
  Rational& d(std::size_t k, std::size_t p, std::size_t q) { return d_[(k * dim() + p) * dim() + q]; }

  // dim^2 x dim matrix of x -> delta(x).
  RMatrix cobracket_matrix() const;

  friend bool operator==(const LieBialgebra& a, const LieBialgebra& b) { return a.lie_ == b.lie_ && a.d_ == b.d_; }

 private:
  LieAlgebra lie_;
  Vector d_;
};

Report verify_lie(const LieAlgebra& g);
// Lie axioms, co-antisymmetry, co-Jacobi and the cocycle condition
// delta([x, y]) = x . delta(y) - y . delta(x).
Report verify_bialgebra(const LieBialgebra& b);

// b* with the bracket dual to delta and the cobracket dual to the bracket.
LieBialgebra dual_bialgebra(const LieBialgebra& b);

// M : Q^dim a -> Q^dim b preserves bracket (and cobracket for bialgebras).
Report lie_morphism_check(const LieAlgebra& a, const LieAlgebra& b, const RMatrix& m);
Report bialgebra_morphism_check(const LieBialgebra& a, const LieBialgebra& b, const RMatrix& m);

// Symmetric, nondegenerate, <[x,y],z> = <x,[y,z]>.
Report invariant_form_check(const LieAlgebra& g, const RMatrix& form);

// g_b = b (+) b*, basis x_0..x_{n-1}, x^0..x^{n-1}, <x_i, x^j> = delta_ij.
// Cobracket delta_b on b and minus the transposed bracket on b*.
struct DrinfeldDouble {
  LieBialgebra g;
  RMatrix form;
  std::size_t half = 0;
};
DrinfeldDouble drinfeld_double(const LieBialgebra& b);

// Lie algebra with an invariant form and two subalgebras given by column
// bases. The bialgebra attached to it lives on `minus`, with cobracket
// dual to the bracket of `plus`.
struct ManinTriple {
  LieAlgebra g;
  RMatrix form;
  RMatrix minus;  // dim g x k
  RMatrix plus;   // dim g x k
};
Report manin_triple_check(const ManinTriple& t);
// Columns y^p of `plus` coordinates with <minus_i, y^p> = delta_ip.
RMatrix dual_basis(const ManinTriple& t);
LieBialgebra manin_bialgebra(const ManinTriple& t);
ManinTriple manin_triple_of_double(const DrinfeldDouble& d);

// Structure constants of the span of the given matrices. Throws InvalidInput
// when the matrices are dependent or the span is not closed.
LieAlgebra lie_algebra_from_matrices(const std::vector<RMatrix>& basis);
// Structure constants of a subalgebra with column basis `basis`.
LieAlgebra subalgebra(const LieAlgebra& g, const RMatrix& basis);

Vector column_of(const RMatrix& m, std::size_t c);
RMatrix column_matrix(const Vector& v);

}  // namespace coxkit
