#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "coxkit/diagram.hpp"
#include "coxkit/linear_solve.hpp"

namespace coxkit {

// Parses rows of rational strings into a square matrix.
RMatrix matrix_from_rows(const std::vector<std::vector<std::string>>& rows);
RMatrix integer_matrix(const std::vector<std::vector<long>>& rows);

// Diagram of A: i -- j unless a_ij = a_ji = 0.
Diagram diagram_of(const RMatrix& a);
// Principal submatrix on the vertices of b, in increasing order.
RMatrix principal_submatrix(const RMatrix& a, VertexSet b);

// Realization (V, Pi, Pi^vee) of A with alpha_i(h_j) = a_ji. V = Q^dim;
// coroots are the columns of `coroots`, roots the rows of `roots`.
struct Realization {
  RMatrix cartan;
  RMatrix coroots;  // dim x n
  RMatrix roots;    // n x dim

  std::size_t dim() const { return coroots.rows(); }
  std::size_t size() const { return cartan.rows(); }
};

std::optional<std::string> realization_violation(const Realization& v);
bool is_realization(const Realization& v);
std::size_t minimal_realization_dim(const RMatrix& a);

// dim 2n - rank(A); coroots e_1..e_n, roots [A^T | X] with X unit columns.
Realization minimal_realization(const RMatrix& a);
// dim 2n, basis {h_i} u {lambda_i}, alpha_i(lambda_j) = delta_ij.
Realization canonical_realization(const RMatrix& a);
// (V*, Pi^vee, Pi), a realization of A^t.
Realization transpose_realization(const Realization& v);
// V (+) Q^extra with the new directions in Pi^perp.
Realization add_null_subspace(const Realization& v, std::size_t extra);
// Transport along an invertible change of basis P: h -> P h, alpha -> alpha P^{-1}.
Realization change_basis(const Realization& v, const RMatrix& p);
Realization random_realization(const RMatrix& a, std::size_t extra, std::mt19937& rng);

// Decomposition V = U (+) U0 with U a minimal subrealization and U0 null.
struct MinimalSplitting {
  RMatrix sub;   // dim x (2n - rank), basis of U, coroots first
  RMatrix null;  // dim x (dim - 2n + rank), basis of U0 inside Pi^perp
};
MinimalSplitting split_minimal(const Realization& v);

// Hom_A(V1, V2) = particular + span(directions), each a dim2 x dim1 matrix.
struct MorphismSpace {
  bool nonempty = false;
  RMatrix particular;
  std::vector<RMatrix> directions;
  std::size_t dimension() const { return directions.size(); }
};
MorphismSpace morphism_space(const Realization& v1, const Realization& v2);
bool is_morphism(const Realization& v1, const Realization& v2, const RMatrix& t);
// (dim V1 - n)(dim V2 - n).
std::size_t expected_morphism_dimension(const Realization& v1, const Realization& v2);

// Symmetrizer with a_ij d_j = a_ji d_i, normalized per connected component to
// coprime positive integers when possible. Throws NotSymmetrizable.
class NotSymmetrizable : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};
std::vector<Rational> symmetrizer(const RMatrix& a);
bool is_symmetrizable(const RMatrix& a);

// Invariant form (h_i, .) = d_i alpha_i on V as a dim x dim Gram matrix.
RMatrix invariant_form(const Realization& v, const std::vector<Rational>& d);
std::optional<std::string> invariant_form_violation(const Realization& v, const std::vector<Rational>& d,
                                                    const RMatrix& gram);

// Type of a generalized Cartan matrix. Decomposable matrices are Finite or
// Affine when every component is finite or affine (and at least one affine).
enum class CartanType { Finite, Affine, Indefinite, NotGcm };
bool is_gcm(const RMatrix& a);
CartanType cartan_type(const RMatrix& a);
std::string to_string(CartanType t);

}  // namespace coxkit
