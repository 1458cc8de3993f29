#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "coxkit/braid.hpp"
#include "coxkit/km_models.hpp"
#include "coxkit/nested_sets.hpp"
#include "coxkit/quantum.hpp"
#include "coxkit/report.hpp"

namespace coxkit {

// Unital subalgebra of End(k^n) given by a spanning basis of matrices.
struct MatrixAlgebra {
  std::size_t n = 0;
  std::vector<QMatrix> basis;
  std::size_t dim() const { return basis.size(); }
};

// Algebra generated by the identity and `generators`, closed under products.
MatrixAlgebra generated_algebra(std::size_t n, const std::vector<QMatrix>& generators);
// Coordinates of x in the basis of a; throws InvalidInput if x is outside.
QMatrix algebra_coordinates(const MatrixAlgebra& a, const QMatrix& x);
QMatrix algebra_element(const MatrixAlgebra& a, const QMatrix& coords);

// One algebra per subdiagram (every subset, including the empty one) and a
// map i_{BB'} : A_{B'} -> A_B for each B' in B, stored as a coordinate matrix
// of shape dim A_B x dim A_{B'}.
struct LaxDAlgebra {
  Diagram diagram;
  std::map<VertexSet, MatrixAlgebra> algebras;
  std::map<std::pair<VertexSet, VertexSet>, QMatrix> maps;
};

// A_B generated by ops[i] for i in B inside End(k^n); all maps are inclusions.
LaxDAlgebra lax_d_algebra_from_operators(const Diagram& d, std::size_t n, const std::vector<QMatrix>& ops);
// A_B = k for all B, maps the identity.
LaxDAlgebra constant_lax_d_algebra(const Diagram& d);

// Checks "structure maps", "identity", "transitivity", "orthogonal product".
// Failure details name the offending (B, B', B'').
Report verify_lax_d_algebra(const LaxDAlgebra& l);

// Concrete Coxeter data with trivial Upsilon and associators: the
// restriction functors are the identity on underlying spaces and S_i acts
// on every module. Either classical (Tits operators) or quantum.
struct CoxeterWitness {
  enum class Kind { kClassical, kQuantum };
  Kind kind = Kind::kQuantum;
  LabelledDiagram diagram;
  std::vector<std::string> names;
  std::vector<ChevalleyModule> classical;
  std::vector<WeightModule> quantum;
  std::vector<std::vector<QMatrix>> s;  // s[module][vertex]

  std::size_t module_count() const { return s.size(); }
  std::size_t module_dim(std::size_t m) const { return s.at(m).empty() ? 0 : s[m][0].rows(); }
};

CoxeterWitness quantum_witness(const std::vector<WeightModule>& modules, std::vector<std::string> names = {});
CoxeterWitness classical_witness(const std::vector<ChevalleyModule>& modules, std::vector<std::string> names = {});

// Shapes, invertibility, and the braid relation for every pair with finite label.
Report verify_witness(const CoxeterWitness& w);

// The braid representations rho_F for F in Mns(B) on one module.
struct BraidRepFamily {
  VertexSet base;
  std::vector<NestedSet> indexing;
  std::vector<MatrixBraidRep<QScalar>> reps;
  // "braid relations", "Ad-compatibility", "restriction square"
  Report report;
};
// Throws InvalidInput unless verify_witness passes. The restriction square
// compares S_i computed on the module restricted to each B' in B with rho_B.
BraidRepFamily braid_reps_from_witness(const CoxeterWitness& w, VertexSet b, std::size_t module);

// Restriction of a quantum module to the subdiagram b, keeping the parent d_i.
WeightModule restrict_weight_module(const WeightModule& v, VertexSet b);
ChevalleyModule restrict_chevalley_module(const ChevalleyModule& v, VertexSet b);

// c_i o Delta(S_i) = c_0 o S_i (x) S_i on V_a (x) V_b, with c_0 the flip and
// c_i the flip (classical) or R_i^-1 o flip (quantum, the reverse braiding of
// R_i). S_i on the tensor product is computed from the tensor module; the
// right side uses the witness operators. Detail gives the first bad entry.
Report verify_coproduct_axiom(const CoxeterWitness& w, std::size_t i, std::size_t a, std::size_t b);

// Module maps V_a -> V_b over the whole algebra, as a list of matrices.
std::vector<QMatrix> witness_morphisms(const CoxeterWitness& w, std::size_t a, std::size_t b);

// "S_i^2 commutes with generators" (E_i, F_i, all weights), "S_i^2 natural"
// (all module maps between witness modules), and "balance" on V_a (x) V_b:
// S_i^2 = (c_{W,V} c_{V,W})^-1 (S_i^2 (x) S_i^2), i.e. S_i^2 balances the
// braiding c_i^-1 (flip o R_i in the quantum case).
Report half_balance_check(const CoxeterWitness& w);

}  // namespace coxkit
