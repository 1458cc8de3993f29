#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coxkit/braid.hpp"
#include "coxkit/km_models.hpp"
#include "coxkit/qscalar.hpp"
#include "coxkit/report.hpp"
#include "coxkit/sparse_matrix.hpp"

namespace coxkit {

// U_q for a symmetrizable GCM: q_i = q^{d_i} with d_i a_ij = d_j a_ji,
// d_i positive integers with gcd 1.
struct QuantumGroupData {
  RMatrix cartan;
  std::vector<long> d;
  LabelledDiagram labels;
  std::uint32_t lattice = 4;  // 4 lcm(d): holds q_i^{h^2/4} and q_i^{h h'/2}

  std::size_t rank() const { return d.size(); }
  friend bool operator==(const QuantumGroupData& a, const QuantumGroupData& b) {
    return a.cartan == b.cartan && a.d == b.d;
  }
};

// Throws InvalidInput unless a is a symmetrizable GCM.
QuantumGroupData quantum_group_data(const RMatrix& a);
// q_i^e.
QScalar q_i_power(const QuantumGroupData& data, std::size_t i, const Rational& e);

// Integrable weight module on a basis of weight vectors; weights[v][j] is
// lambda(h_j) for basis vector v. E_i shifts lambda(h_j) by a_ji.
struct WeightModule {
  QuantumGroupData data;
  std::vector<std::vector<long>> weights;
  std::vector<QMatrix> e, f;
  std::size_t dim() const { return weights.size(); }
};

// Named checks: "weight grading", "commutator", "serre", "nilpotent".
Report weight_module_check(const WeightModule& v);

WeightModule trivial_weight_module(const QuantumGroupData& data, std::size_t dim = 1);
// V(m) for U_q(sl2) on v_k = F^(k) v_0, weights m, m-2, ..., -m.
WeightModule build_sl2_module(long m);
// Seed module from the classical defining model (every string has length
// at most one there, so the same matrices work over Q(q)). Gated by
// weight_module_check; throws InvalidInput for unsupported types.
WeightModule quantum_defining_module(const QuantumGroupData& data);
// The defining module twisted by a diagram automorphism sigma:
// E_i acts by E_{sigma(i)}. Throws InvalidInput if sigma is not an automorphism.
WeightModule twist_module(const WeightModule& v, const std::vector<std::size_t>& sigma);

// E_i (x) q_i^{h_i} + 1 (x) E_i and F_i (x) 1 + q_i^{-h_i} (x) F_i.
WeightModule coproduct_action(const WeightModule& v, const WeightModule& w);

struct WeightSubmodule {
  WeightModule module;
  QMatrix inclusion;  // dim V x dim sub, a module map
};
// Submodule generated by a vector of the given weight killed by every E_i.
// Throws InvalidInput when the weight space has no such vector.
WeightSubmodule quantum_highest_weight_submodule(const WeightModule& v, const std::vector<long>& weight);

// Simple module of the given dominant highest weight for rank-2 finite type
// (A1xA1, A2, B2 in either orientation), or rank 1. Fundamental modules come
// from seeds; others are extracted from tensor products one fundamental
// weight at a time.
WeightModule build_rank2_module(const RMatrix& a, const std::vector<long>& weight);

QMatrix k_operator(const WeightModule& v, std::size_t i, long power = 1);
QMatrix divided_power(const QMatrix& x, long a, const QuantumGroupData& data, std::size_t i);

// sum over a - b + c = -lambda(h_i) of (-1)^b q_i^{h_i^2/4 + b - ac} E^(a) F^(b) E^(c),
// with q_i^{h_i^2/4} read on the image weight.
QMatrix quantum_weyl_operator(const WeightModule& v, std::size_t i);
// q_i^{h_i (x) h_i / 2} sum_n q_i^{n(n-1)/2} (q_i - q_i^-1)^n / [n]_i! E_i^n (x) F_i^n.
QMatrix rank1_r_matrix(const WeightModule& v, const WeightModule& w, std::size_t i);
// R Delta(x) = Delta^21(x) R for x = E_i, F_i and the weight operators.
Report rank1_r_matrix_check(const WeightModule& v, const WeightModule& w, std::size_t i);

// Candidate forms of the coproduct identity on V (x) W. Delta21(S) is the
// operator of W (x) V conjugated by the flip.
enum class CoproductOrientation {
  kDelta21_R,       // P S^{W(x)V} P = R_i (S (x) S)
  kDelta21_R21,     // P S^{W(x)V} P = R_i^21 (S (x) S)
  kDelta_R,         // S^{V(x)W} = R_i (S (x) S)
  kDelta_R21,       // S^{V(x)W} = R_i^21 (S (x) S)
  kDelta21_R_right, // P S^{W(x)V} P = (S (x) S) R_i
  kDelta21_R21_right,
  kDelta_R_right,
  kDelta_R21_right,
};
std::string to_string(CoproductOrientation o);
std::vector<CoproductOrientation> all_coproduct_orientations();
// Which orientations hold exactly on V (x) W at vertex i.
std::vector<CoproductOrientation> holding_orientations(const WeightModule& v, const WeightModule& w, std::size_t i);
// The form asserted everywhere: Delta21(S_i) = R_i (S_i (x) S_i). Fixed by the
// exact computation on sl2 V(1) (x) V(1), where exactly four forms hold.
CoproductOrientation recorded_orientation();
bool coproduct_identity_holds(const WeightModule& v, const WeightModule& w, std::size_t i,
                              CoproductOrientation o = recorded_orientation());

// Specialization at q = 1 as a classical module (h_i acting by weights).
ChevalleyModule classical_limit(const WeightModule& v);

// (a) braid relations on every module, (b) coproduct identity on every ordered
// pair, (c) S_i^2 commutes with E_i, F_i and the weights, (d) classical limit
// against the triple exponential up to a diagonal sign matrix.
Report verify_coxeter_identities(const std::vector<WeightModule>& modules);

}  // namespace coxkit
