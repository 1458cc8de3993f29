#include <gtest/gtest.h>

#include "coxkit/coxeter.hpp"
#include "coxkit/realization.hpp"

using namespace coxkit;

namespace {

const RMatrix kA2 = integer_matrix({{2, -1}, {-1, 2}});
const RMatrix kB2 = integer_matrix({{2, -2}, {-1, 2}});
const RMatrix kA1A1 = integer_matrix({{2, 0}, {0, 2}});

std::string why(const Report& r) {
  std::string out;
  for (const auto& f : r.failures()) out += f + "; ";
  return out;
}

CoxeterWitness a2_witness() {
  return quantum_witness({build_rank2_module(kA2, {1, 0}), build_rank2_module(kA2, {0, 1})}, {"V(1,0)", "V(0,1)"});
}

CoxeterWitness sl2_witness() {
  WeightModule v1 = build_sl2_module(1);
  return quantum_witness({v1, build_sl2_module(2), coproduct_action(v1, v1)}, {"V(1)", "V(2)", "V(1)(x)V(1)"});
}

}  // namespace

TEST(LaxDAlgebra, ConstantAlgebraPasses) {
  for (const Diagram& d : {path_diagram(2), path_diagram(3), Diagram(3)}) {
    Report r = verify_lax_d_algebra(constant_lax_d_algebra(d));
    EXPECT_TRUE(r.ok()) << why(r);
    EXPECT_EQ(r.checks().size(), 4u);
  }
}

TEST(LaxDAlgebra, BraidImagesGenerateParabolicAlgebras) {
  CoxeterWitness a2 = a2_witness();
  LaxDAlgebra l = lax_d_algebra_from_operators(path_diagram(2), 3, a2.s[0]);
  Report r = verify_lax_d_algebra(l);
  EXPECT_TRUE(r.ok()) << why(r);
  // S_i acts on the 3-dim module with a 2-dim and a 1-dim block, so its
  // minimal polynomial has degree 3.
  EXPECT_EQ(l.algebras.at(VertexSet::of({0})).dim(), 3u);
  EXPECT_EQ(l.algebras.at(VertexSet()).dim(), 1u);
  EXPECT_EQ(l.algebras.at(VertexSet::of({0, 1})).dim(), 9u);

  CoxeterWitness b2 = quantum_witness({build_rank2_module(kB2, {1, 0})});
  EXPECT_TRUE(verify_lax_d_algebra(lax_d_algebra_from_operators(path_diagram(2), 4, b2.s[0])).ok());

  CoxeterWitness a1a1 = quantum_witness({build_rank2_module(kA1A1, {1, 1})});
  r = verify_lax_d_algebra(lax_d_algebra_from_operators(Diagram(2), 4, a1a1.s[0]));
  EXPECT_TRUE(r.ok()) << why(r);
}

TEST(LaxDAlgebra, BrokenFixturesFailWithWitness) {
  QMatrix x(2, 2), y(2, 2);
  x.set(0, 0, QScalar(1));
  x.set(0, 1, QScalar(1));
  x.set(1, 1, QScalar(1));
  y.set(0, 0, QScalar(1));
  y.set(1, 0, QScalar(1));
  y.set(1, 1, QScalar(1));
  LaxDAlgebra l = lax_d_algebra_from_operators(Diagram(2), 2, {x, y});
  Report r = verify_lax_d_algebra(l);
  EXPECT_TRUE(r.find("structure maps")->pass);
  EXPECT_TRUE(r.find("transitivity")->pass);
  ASSERT_FALSE(r.find("orthogonal product")->pass);
  EXPECT_EQ(r.find("orthogonal product")->detail, "({0,1}, {0}, {1})");

  // The same operators on a connected diagram impose nothing.
  EXPECT_TRUE(verify_lax_d_algebra(lax_d_algebra_from_operators(path_diagram(2), 2, {x, y})).ok());

  LaxDAlgebra bad = constant_lax_d_algebra(path_diagram(2));
  bad.maps[{VertexSet::of({0}), VertexSet::of({0})}] = QMatrix::identity(1) * QScalar(2);
  r = verify_lax_d_algebra(bad);
  EXPECT_FALSE(r.find("identity")->pass);
  EXPECT_FALSE(r.find("structure maps")->pass);
  EXPECT_FALSE(r.find("transitivity")->pass);

  bad = constant_lax_d_algebra(path_diagram(2));
  bad.maps.erase({VertexSet::of({0, 1}), VertexSet()});
  EXPECT_FALSE(verify_lax_d_algebra(bad).ok());
}

TEST(Witness, BraidRepsOverMaximalNestedSets) {
  CoxeterWitness w = a2_witness();
  ASSERT_TRUE(verify_witness(w).ok());

  BraidRepFamily single = braid_reps_from_witness(w, VertexSet::of({1}), 0);
  EXPECT_EQ(single.indexing.size(), 1u);
  EXPECT_EQ(single.reps[0].generator(0), w.s[0][1]);
  EXPECT_TRUE(single.report.ok());

  for (std::size_t m = 0; m < 2; ++m) {
    BraidRepFamily fam = braid_reps_from_witness(w, VertexSet::of({0, 1}), m);
    EXPECT_EQ(fam.indexing.size(), 2u);
    EXPECT_TRUE(fam.report.ok()) << why(fam.report);
    EXPECT_EQ(fam.reps[0].evaluate(alternating_word(0, 1, 3)), fam.reps[1].evaluate(alternating_word(1, 0, 3)));
  }

  CoxeterWitness b2 = quantum_witness({build_rank2_module(kB2, {1, 0}), build_rank2_module(kB2, {0, 1})});
  EXPECT_TRUE(verify_witness(b2).ok());
  EXPECT_TRUE(braid_reps_from_witness(b2, VertexSet::of({0, 1}), 1).report.ok());

  CoxeterWitness cl = classical_witness({defining_module(kA2), adjoint_module(kA2)});
  EXPECT_TRUE(verify_witness(cl).ok());
  EXPECT_TRUE(braid_reps_from_witness(cl, VertexSet::of({0, 1}), 1).report.ok());
}

TEST(Witness, UnverifiedOrInconsistentWitnesses) {
  CoxeterWitness w = a2_witness();
  std::swap(w.s[0][0], w.s[0][1]);
  w.s[0][1] = w.s[0][1] * w.s[0][1];
  EXPECT_FALSE(verify_witness(w).ok());
  EXPECT_THROW(braid_reps_from_witness(w, VertexSet::of({0}), 0), InvalidInput);

  // Rescaling keeps the commuting relation but breaks the restriction square.
  CoxeterWitness a1a1 = quantum_witness({build_rank2_module(kA1A1, {1, 1})});
  a1a1.s[0][0] = a1a1.s[0][0] * QScalar(2);
  ASSERT_TRUE(verify_witness(a1a1).ok());
  Report r = braid_reps_from_witness(a1a1, VertexSet::of({0, 1}), 0).report;
  EXPECT_TRUE(r.find("braid relations")->pass);
  EXPECT_FALSE(r.find("restriction square")->pass);
}

TEST(Witness, RestrictionKeepsSymmetrizer) {
  WeightModule v = build_rank2_module(kB2, {0, 1});
  WeightModule r = restrict_weight_module(v, VertexSet::of({1}));
  EXPECT_EQ(r.data.d, std::vector<long>{2});
  EXPECT_TRUE(weight_module_check(r).ok());
  EXPECT_EQ(quantum_weyl_operator(r, 0), quantum_weyl_operator(v, 1));
}

TEST(CoproductAxiom, ClassicalFixtureIsGroupLike) {
  CoxeterWitness w = classical_witness({defining_module(kA2), dual_module(defining_module(kA2))});
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t b = 0; b < 2; ++b) EXPECT_TRUE(verify_coproduct_axiom(w, i, a, b).ok());
}

TEST(CoproductAxiom, QuantumFixtures) {
  CoxeterWitness w = sl2_witness();
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      Report r = verify_coproduct_axiom(w, 0, a, b);
      EXPECT_TRUE(r.ok()) << why(r);
    }
  CoxeterWitness a2 = a2_witness();
  for (std::size_t i = 0; i < 2; ++i) EXPECT_TRUE(verify_coproduct_axiom(a2, i, 0, 1).ok());
  EXPECT_THROW(verify_coproduct_axiom(w, 1, 0, 0), InvalidInput);
}

TEST(CoproductAxiom, NonGroupLikePerturbationFails) {
  CoxeterWitness w = sl2_witness();
  w.s[0][0] = w.s[0][0] * QScalar(2);
  Report r = verify_coproduct_axiom(w, 0, 0, 1);
  ASSERT_FALSE(r.ok());
  EXPECT_NE(r.checks()[0].detail.find("entry ("), std::string::npos);
  EXPECT_TRUE(verify_coproduct_axiom(w, 0, 1, 1).ok());

  CoxeterWitness cl = classical_witness({defining_module(kA2)});
  cl.s[0][1] = cl.s[0][1] + QMatrix::identity(3);
  EXPECT_FALSE(verify_coproduct_axiom(cl, 1, 0, 0).ok());
}

TEST(HalfBalance, QuantumAndClassicalFixtures) {
  for (const CoxeterWitness& w : {sl2_witness(), a2_witness(),
                                  classical_witness({defining_module(kA2), adjoint_module(kA2)})}) {
    Report r = half_balance_check(w);
    EXPECT_TRUE(r.ok()) << why(r);
  }
  CoxeterWitness w = sl2_witness();
  // V(1) -> V(1) (x) V(1) has no module maps; V(2) -> V(1) (x) V(1) has one.
  EXPECT_TRUE(witness_morphisms(w, 0, 2).empty());
  EXPECT_EQ(witness_morphisms(w, 1, 2).size(), 1u);
  EXPECT_EQ(witness_morphisms(w, 2, 2).size(), 2u);
}

TEST(HalfBalance, PerturbedOperatorFails) {
  CoxeterWitness w = sl2_witness();
  w.s[1][0] = w.s[1][0] * QScalar::q_power(make_rational(1, 1));
  Report r = half_balance_check(w);
  EXPECT_TRUE(r.find("S_i^2 commutes with generators")->pass);
  EXPECT_FALSE(r.find("S_i^2 natural")->pass);
  EXPECT_FALSE(r.find("balance")->pass);
}
