#pragma once

#include <cstddef>
#include <vector>

#include "coxkit/lie_bialgebra.hpp"
#include "coxkit/series.hpp"

namespace coxkit {

// Drinfeld-Yetter module over a Lie bialgebra b with basis x_k.
// action[k] is pi(x_k); the coaction is pi*(v) = sum_k x_k (x) coaction[k] v.
struct DYModule {
  LieBialgebra base;
  std::size_t dim = 0;
  std::vector<RMatrix> action;
  std::vector<RMatrix> coaction;
};

// pi is a Lie action; the coaction satisfies
// [pi*_p, pi*_q] = sum_k d(k, p, q) pi*_k (b* acts through x^k -> pi*_k);
// the action/coaction compatibility holds as an identity in End(b (x) V).
Report verify_dy(const DYModule& v);

DYModule dy_trivial(const LieBialgebra& base, std::size_t dim = 1);
// Double acting by the matrices rho[0..2n): x_a -> rho[a], x^k -> rho[n+k].
DYModule dy_from_double_rep(const LieBialgebra& base, const std::vector<RMatrix>& rho);
// The double acting on itself by ad.
DYModule dy_adjoint_of_double(const LieBialgebra& base);
// Module over manin_bialgebra(t) from a representation of t.g
// (rho[j] is the action of the j-th basis vector of t.g).
DYModule dy_from_manin(const ManinTriple& t, const std::vector<RMatrix>& rho);

// Throws InvalidInput if the bases differ.
DYModule dy_tensor(const DYModule& v, const DYModule& w);

struct RPair {
  RMatrix r;      // (pi_V (x) id)(12)(id (x) pi*_W) = sum_k pi_k (x) pi*_k
  RMatrix omega;  // r + r^21
};
RPair dy_r_matrix(const DYModule& v, const DYModule& w);

// sum G^{-1}_{ij} rho_V(y_i) (x) rho_W(y_j) over the double's basis y.
RMatrix double_casimir(const DYModule& v, const DYModule& w);

// Omega commutes with the action and coaction on V (x) W.
Report omega_morphism_check(const DYModule& v, const DYModule& w);
// [r12,r13] + [r12,r23] + [r13,r23] on V1 (x) V2 (x) V3.
RMatrix cybe_defect(const DYModule& a, const DYModule& b, const DYModule& c);

// Embeds m acting on leg `leg` of a tensor product with factor dims `dims`.
RMatrix leg_operator(const std::vector<std::size_t>& dims, std::size_t leg, const RMatrix& m);
// Omega between leg groups A and B: sum over i in A, j in B of Omega_ij.
RMatrix omega_between(const std::vector<DYModule>& legs, const std::vector<std::size_t>& a,
                      const std::vector<std::size_t>& b);

// Pentagon on V1..V4, both hexagons and duality on V1..V3, with
// Phi = 1 + coefficient hbar^2 [Omega12, Omega23] and R = exp(hbar Omega/2),
// all modulo hbar^(order+1). Each failing check names the lowest hbar degree.
Report check_associator_axioms_truncated(const std::vector<DYModule>& modules, std::size_t order,
                                         const Rational& coefficient = make_rational(1, 24));

}  // namespace coxkit
