#include <gtest/gtest.h>

#include <random>

#include "coxkit/braid.hpp"
#include "coxkit/diagrammatic.hpp"

using namespace coxkit;

namespace {

unsigned label_by_product(long p) {
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

RMatrix random_matrix(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> v(-3, 3);
  RMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.set(i, j, Rational(v(rng)));
  return a;
}

}  // namespace

TEST(Braid, LabelsFromGcm) {
  for (long x = 0; x <= 4; ++x)
    for (long y = 0; y <= 4; ++y) {
      if ((x == 0) != (y == 0)) continue;
      RMatrix a = integer_matrix({{2, -x}, {-y, 2}});
      auto m = coxeter_label(a, 0, 1);
      unsigned expect = label_by_product(x * y);
      if (expect == 0) EXPECT_TRUE(m.is_infinite()) << x << "," << y;
      else EXPECT_EQ(m.value(), expect) << x << "," << y;
    }
  auto ld = coxeter_labels_from_gcm(integer_matrix({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}}));
  EXPECT_EQ(ld.label(0, 1).value(), 3u);
  EXPECT_EQ(ld.label(1, 2).value(), 4u);
  EXPECT_EQ(ld.label(0, 2).value(), 2u);
  EXPECT_THROW(CoxeterLabel::infinity().value(), Error);
}

TEST(Braid, PermutationRepresentationAndWitness) {
  // S_3 acting on Q^3 by transpositions: braid relation with m = 3
  RMatrix s0 = integer_matrix({{0, 1, 0}, {1, 0, 0}, {0, 0, 1}});
  RMatrix s1 = integer_matrix({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  MatrixBraidRep<Rational> rho(LabelledDiagram(path_diagram(2)), {s0, s1});
  EXPECT_TRUE(verify_braid_relation(rho, 0, 1, 3).holds);
  auto bad = verify_braid_relation(rho, 0, 1, 2);
  EXPECT_FALSE(bad.holds);
  EXPECT_FALSE(bad.difference.is_zero());
  EXPECT_FALSE(rho.first_failing_pair().has_value());
  BraidWord w{{0, false}, {1, false}, {1, true}, {0, true}, {1, false}};
  EXPECT_EQ(free_reduce(w), (BraidWord{{1, false}}));
  EXPECT_EQ(evaluate_word(rho, w), evaluate_word(rho, free_reduce(w)));
}

TEST(Realization, MinimalAndCanonical) {
  std::mt19937 rng(17);
  for (int it = 0; it < 20; ++it) {
    RMatrix a = random_matrix(rng, 2 + it % 2);
    Realization m = minimal_realization(a);
    EXPECT_TRUE(is_realization(m)) << *realization_violation(m);
    EXPECT_EQ(m.dim(), 2 * a.rows() - rank(a));
    Realization c = canonical_realization(a);
    EXPECT_TRUE(is_realization(c));
    EXPECT_TRUE(is_realization(transpose_realization(c)));
    auto sp = split_minimal(c);
    EXPECT_EQ(sp.sub.cols(), m.dim());
    EXPECT_EQ(rank(RMatrix::hstack(sp.sub, sp.null)), c.dim());
    EXPECT_TRUE((c.roots * sp.null).is_zero());
  }
}

TEST(Realization, MorphismTorsor) {
  std::mt19937 rng(23);
  for (int it = 0; it < 12; ++it) {
    RMatrix a = random_matrix(rng, 2 + it % 2);
    Realization v1 = random_realization(a, it % 3, rng);
    Realization v2 = random_realization(a, (it + 1) % 2, rng);
    auto hom = morphism_space(v1, v2);
    ASSERT_TRUE(hom.nonempty);
    EXPECT_EQ(hom.dimension(), expected_morphism_dimension(v1, v2));
    RMatrix t = hom.particular;
    for (std::size_t k = 0; k < hom.directions.size(); ++k) t += hom.directions[k] * Rational(static_cast<long>(k) - 1);
    EXPECT_TRUE(is_morphism(v1, v2, t));
    EXPECT_TRUE(is_morphism(transpose_realization(v2), transpose_realization(v1), t.transpose()));
    // composition with a morphism back into v1
    auto back = morphism_space(v2, v1);
    EXPECT_TRUE(is_morphism(v1, v1, back.particular * t));
    Realization m = minimal_realization(a);
    auto into = morphism_space(m, v1);
    EXPECT_EQ(rank(into.particular), m.dim());  // injective from minimal
    auto onto = morphism_space(v1, m);
    EXPECT_EQ(rank(onto.particular), m.dim());  // surjective onto minimal
  }
}

TEST(Realization, Symmetrizer) {
  auto d = symmetrizer(integer_matrix({{2, -1}, {-3, 2}}));
  EXPECT_EQ(d, (std::vector<Rational>{1, 3}));
  auto b2 = symmetrizer(integer_matrix({{2, -2}, {-1, 2}}));
  EXPECT_EQ(b2, (std::vector<Rational>{2, 1}));
  EXPECT_THROW(symmetrizer(integer_matrix({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}})), NotSymmetrizable);
  // decomposable: each block normalized separately
  auto dd = symmetrizer(integer_matrix({{2, -1, 0}, {-2, 2, 0}, {0, 0, 2}}));
  EXPECT_EQ(dd, (std::vector<Rational>{1, 2, 1}));
}

TEST(Realization, InvariantForms) {
  std::mt19937 rng(29);
  std::vector<RMatrix> mats{integer_matrix({{2, -1}, {-3, 2}}), integer_matrix({{2, -2}, {-2, 2}}),
                            integer_matrix({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}),
                            integer_matrix({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}})};
  for (const auto& a : mats) {
    auto d = symmetrizer(a);
    for (std::size_t extra = 0; extra < 2; ++extra) {
      Realization v = random_realization(a, extra, rng);
      RMatrix g = invariant_form(v, d);
      EXPECT_FALSE(invariant_form_violation(v, d, g).has_value()) << *invariant_form_violation(v, d, g);
    }
  }
}

TEST(Realization, CartanTypes) {
  EXPECT_EQ(cartan_type(integer_matrix({{2, -1}, {-1, 2}})), CartanType::Finite);
  EXPECT_EQ(cartan_type(integer_matrix({{2, -1}, {-3, 2}})), CartanType::Finite);
  EXPECT_EQ(cartan_type(integer_matrix({{2, -2}, {-2, 2}})), CartanType::Affine);
  EXPECT_EQ(cartan_type(integer_matrix({{2, -1}, {-4, 2}})), CartanType::Affine);
  EXPECT_EQ(cartan_type(integer_matrix({{2, -3}, {-3, 2}})), CartanType::Indefinite);
  EXPECT_EQ(cartan_type(integer_matrix({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})), CartanType::Affine);
  EXPECT_EQ(cartan_type(integer_matrix({{2, -1}, {-1, 0}})), CartanType::NotGcm);
}

TEST(Diagrammatic, Counterexamples) {
  struct Case {
    RMatrix a;
    VertexSet witness;
    std::size_t bound, need;
  };
  std::vector<Case> cases{
      {integer_matrix({{2, -1, 0}, {-1, 0, -1}, {0, -1, 2}}), VertexSet::of({1}), 1, 2},
      {integer_matrix({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}), VertexSet::of({1, 2}), 2, 3},
      {integer_matrix({{2, -2, 0, 0}, {-2, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}), VertexSet::of({0, 1}), 2, 3},
  };
  for (const auto& c : cases) {
    auto v = cartan_diagrammatic_test(c.a);
    ASSERT_EQ(v.status, DiagrammaticStatus::Obstructed);
    ASSERT_EQ(v.components.size(), 1u);
    EXPECT_EQ(v.components[0].witness, c.witness) << v.components[0].reason;
    EXPECT_EQ(v.components[0].bound_dim, c.bound);
    EXPECT_EQ(v.components[0].required_dim, c.need);
  }
}

TEST(Diagrammatic, PassingCases) {
  auto zero = cartan_diagrammatic_test(integer_matrix({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(zero.status, DiagrammaticStatus::Diagrammatic);
  EXPECT_EQ(zero.components.size(), 3u);
  for (auto a : {integer_matrix({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}),
                 integer_matrix({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}), integer_matrix({{2, -2}, {-2, 2}}),
                 integer_matrix({{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}})}) {
    auto v = cartan_diagrammatic_test(a);
    EXPECT_EQ(v.status, DiagrammaticStatus::Diagrammatic) << v.components[0].reason;
  }
}
