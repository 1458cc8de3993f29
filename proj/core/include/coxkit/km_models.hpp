#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxkit/dy_module.hpp"
#include "coxkit/lie_bialgebra.hpp"
#include "coxkit/realization.hpp"

namespace coxkit {

// Module over g(A) for a finite-type A, by Chevalley generators.
// Conventions: [h_j, e_i] = alpha_i(h_j) e_i = a_ji e_i, [e_i, f_j] = delta_ij h_i.
struct ChevalleyModule {
  RMatrix cartan;
  std::vector<RMatrix> e, f, h;
  std::size_t dim() const { return e.empty() ? 0 : e[0].rows(); }
  std::size_t rank() const { return cartan.rows(); }
};

Report chevalley_check(const ChevalleyModule& m);

// Defining module of the matrix model: sl_{k+1} blocks for type A_k
// components and a 4-dim model for B2/C2 components; components are placed
// block-diagonally. Throws InvalidInput for other types.
ChevalleyModule defining_module(const RMatrix& a);
ChevalleyModule trivial_module(const RMatrix& a, std::size_t dim = 1);
ChevalleyModule dual_module(const ChevalleyModule& m);
ChevalleyModule tensor_module(const ChevalleyModule& v, const ChevalleyModule& w);
ChevalleyModule adjoint_module(const RMatrix& a);
// Simple submodule generated by a highest-weight vector of the given weight
// (lambda(h_i))_i. Throws InvalidInput when no such vector exists.
ChevalleyModule highest_weight_submodule(const ChevalleyModule& m, const std::vector<long>& weight);
// Restriction of m to the invariant subspace with column basis `basis`.
ChevalleyModule restrict_module(const ChevalleyModule& m, const RMatrix& basis);

// exp of a nilpotent matrix; throws InvalidInput if m is not nilpotent.
RMatrix nilpotent_exp(const RMatrix& m);
// exp(e_i) exp(-f_i) exp(e_i).
RMatrix tits_operator(const ChevalleyModule& m, std::size_t i);

// Faithful matrix model of g(A) or of the extended algebra gbar(A), with a
// root-graded basis: Cartan part first (h_1..h_n, then lambda_1..lambda_n
// when extended), positive root vectors, negative root vectors.
struct KMModel {
  RMatrix cartan;
  bool extended = false;
  std::vector<Rational> d;  // a_ij d_j = a_ji d_i
  std::vector<RMatrix> basis;
  std::size_t cartan_dim = 0;
  std::vector<std::vector<long>> positive_roots;  // coefficient vectors
  std::vector<std::size_t> positive, negative;    // indices into basis
  LieAlgebra lie;
  RMatrix form;  // invariant, <h_i, x> = d_i alpha_i(x), <lambda_i, lambda_j> = 0
  // recipe[j] = (-1, g) for generator g, or (i, k) for [generator i, basis k].
  // Generators are numbered h_1..h_n, lambda_1..lambda_n, e_1..e_n, f_1..f_n.
  std::vector<std::pair<long, std::size_t>> recipe;

  std::size_t dim() const { return basis.size(); }
  std::size_t rank() const { return cartan.rows(); }
};

KMModel build_km_model(const RMatrix& a, bool extended);
// Matrices of every basis vector of the model acting on a module.
// For the extended model lambda_i acts by sum_j (A^{-1})_ij h_j.
std::vector<RMatrix> represent(const KMModel& model, const ChevalleyModule& m);

// (g (+) h, b-, b+) with form <,> (+) -<,>|_h.
// b+- = {(t, +-t) : t Cartan} (+) n+-.
ManinTriple manin_triple_of_model(const KMModel& model);
// The DY module over b- obtained from a g-module, h acting by zero.
DYModule dy_module_of(const KMModel& model, const ManinTriple& triple, const ChevalleyModule& m);

// (b_{B'}, b_B) inside the extended Borel b- of gbar(A): i the inclusion,
// p the projection killing the form-orthogonal complement of hbar_{B'} in
// hbar_B and the root spaces outside R_{B'}.
struct SplitPair {
  LieBialgebra small, big;
  RMatrix i;  // dim big x dim small
  RMatrix p;  // dim small x dim big
  std::vector<std::vector<long>> big_roots;  // root of each basis vector of big, zero for Cartan
};
SplitPair split_borel_fixture(const RMatrix& a, VertexSet b, VertexSet b_prime);
Report split_pair_check(const SplitPair& s);
// Extended Borel b_{B,-} as a Lie bialgebra inside the model, with its
// basis as columns in model coordinates.
struct BorelPiece {
  LieBialgebra bialgebra;
  std::vector<std::size_t> indices;  // model basis vectors, in bialgebra order
  std::vector<std::vector<long>> roots;
};
BorelPiece extended_borel(const KMModel& model, VertexSet b);

}  // namespace coxkit
