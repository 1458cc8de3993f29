#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "coxkit/report.hpp"
#include "coxkit/sparse_matrix.hpp"

namespace coxkit {

// Finite-dimensional Hopf algebra on a basis e_0..e_{d-1}, all structure maps
// as matrices. Tensor basis index of e_i (x) e_j is i * d + j.
struct HopfAlgebra {
  std::size_t dim = 0;
  RMatrix mult;          // d x d^2
  RMatrix unit;          // d x 1
  RMatrix comult;        // d^2 x d
  RMatrix counit;        // 1 x d
  RMatrix antipode;      // d x d
  RMatrix antipode_inv;  // d x d
};

// Associativity, coassociativity, unit, counit, antipode, antipode inverse
// and the bialgebra compatibilities, each as its own named check.
Report verify_hopf(const HopfAlgebra& h);
// m is the matrix of a linear map a -> b.
Report hopf_morphism_check(const HopfAlgebra& a, const HopfAlgebra& b, const RMatrix& m);

// Group algebra of Z/n, basis g^0..g^{n-1}.
HopfAlgebra cyclic_group_algebra(std::size_t n);
// Sweedler's algebra: g^2 = 1, x^2 = 0, xg = -gx, g group-like,
// Delta(x) = x (x) 1 + g (x) x. Basis 1, g, x, gx.
HopfAlgebra sweedler_algebra();
// Dual H* on the dual basis, with the opposite coproduct.
HopfAlgebra dual_hopf_cop(const HopfAlgebra& h);

// Element of a tensor power, stored as a column of length d^k.
RMatrix tensor_multiply(const HopfAlgebra& h, const RMatrix& x, const RMatrix& y, std::size_t legs);
RMatrix basis_element(std::size_t dim, std::size_t i);

// DB = B (x) B° with basis index i * d + a for e_i (x) phi^a.
struct QuantumDouble {
  HopfAlgebra b, b_dual, db;
  RMatrix include_b;       // D x d, e_i -> e_i (x) eps
  RMatrix include_b_dual;  // D x d, phi^a -> 1 (x) phi^a
  RMatrix r;               // D^2 x 1, sum_i (e_i (x) eps) (x) (1 (x) phi^i)
};

// Throws InvalidInput if h is not a Hopf algebra.
QuantumDouble quantum_double(const HopfAlgebra& h);
// Both factors are Hopf subalgebras, R is invertible with inverse (S (x) id)R,
// R Delta(x) = Delta^op(x) R, (Delta (x) id)R = R13 R23, (id (x) Delta)R = R13 R12.
Report quasitriangular_check(const QuantumDouble& d);

// Left module, right comodule written pi*(v) = sum_k e_k (x) coaction[k] v.
struct HopfDYModule {
  HopfAlgebra base;
  std::size_t dim = 0;
  std::vector<RMatrix> action;
  std::vector<RMatrix> coaction;
};

// Module axioms, comodule axioms, and
// pi* pi = (m3 (x) pi)(13)(24)(S^-1 (x) id^4)(Delta3 (x) pi*).
Report verify_hopf_dy(const HopfDYModule& v);

HopfDYModule hopf_dy_trivial(const HopfAlgebra& h, std::size_t dim = 1);
// H on itself: h . v = h_2 v S^-1(h_1), coaction Delta.
HopfDYModule hopf_dy_adjoint(const HopfAlgebra& h);
// H on itself: left multiplication, v -> v_2 (x) v_3 S^-1(v_1).
HopfDYModule hopf_dy_regular(const HopfAlgebra& h);
HopfDYModule hopf_dy_tensor(const HopfDYModule& v, const HopfDYModule& w);

// rho[x] is the action of the x-th basis vector of DB.
Report double_module_check(const QuantumDouble& d, const std::vector<RMatrix>& rho);
std::vector<RMatrix> double_regular_module(const QuantumDouble& d);
HopfDYModule hopf_dy_from_double_module(const QuantumDouble& d, const std::vector<RMatrix>& rho);
std::vector<RMatrix> double_module_of(const QuantumDouble& d, const HopfDYModule& v);

// (R_VW, R_VW^-1) with R = (pi_V (x) id)(12)(id (x) pi*_W) and the inverse
// from the antipode.
std::pair<RMatrix, RMatrix> hopf_dy_braiding(const HopfDYModule& v, const HopfDYModule& w);
// beta = (12) R : V (x) W -> W (x) V.
RMatrix hopf_dy_beta(const HopfDYModule& v, const HopfDYModule& w);
// Basis of the space of DY morphisms v -> w.
std::vector<RMatrix> hopf_dy_morphisms(const HopfDYModule& v, const HopfDYModule& w);
// R R^-1 = id, beta is a DY morphism, both hexagons and Yang-Baxter on u, v, w.
Report hopf_braiding_check(const HopfDYModule& u, const HopfDYModule& v, const HopfDYModule& w);

}  // namespace coxkit
