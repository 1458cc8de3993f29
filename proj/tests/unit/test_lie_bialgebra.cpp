#include <gtest/gtest.h>

#include "coxkit/km_models.hpp"

using namespace coxkit;

namespace {

// b = <h, e>, [h, e] = 2e, delta(e) = h ^ e.
LieBialgebra sl2_borel() {
  LieAlgebra g(2);
  g.c(0, 1, 1) = 2;
  g.c(1, 0, 1) = -2;
  LieBialgebra b(g);
  b.d(1, 0, 1) = 1;
  b.d(1, 1, 0) = -1;
  return b;
}

LieBialgebra direct_sum(const LieBialgebra& a, const LieBialgebra& b) {
  const std::size_t n = a.dim(), m = b.dim();
  LieAlgebra g(n + m);
  LieBialgebra s(g);
  for (std::size_t i = 0; i < n + m; ++i)
    for (std::size_t j = 0; j < n + m; ++j)
      for (std::size_t k = 0; k < n + m; ++k) {
        bool in_a = i < n && j < n && k < n, in_b = i >= n && j >= n && k >= n;
        if (in_a) {
          s.lie().c(i, j, k) = a.lie().c(i, j, k);
          s.d(i, j, k) = a.d(i, j, k);
        } else if (in_b) {
          s.lie().c(i, j, k) = b.lie().c(i - n, j - n, k - n);
          s.d(i, j, k) = b.d(i - n, j - n, k - n);
        }
      }
  return s;
}

Vector lin(const Vector& x, const Rational& a, const Vector& y, const Rational& b) {
  Vector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return out;
}

Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

std::vector<DYModule> sl2_dy_modules(std::vector<ChevalleyModule>* raw = nullptr) {
  RMatrix a = integer_matrix({{2}});
  KMModel model = build_km_model(a, false);
  ManinTriple t = manin_triple_of_model(model);
  ChevalleyModule v1 = defining_module(a);
  ChevalleyModule v2 = highest_weight_submodule(tensor_module(v1, v1), {2});
  std::vector<DYModule> out;
  for (const auto& m : {v1, v2, trivial_module(a)}) {
    out.push_back(dy_module_of(model, t, m));
    if (raw) raw->push_back(m);
  }
  return out;
}

}  // namespace

TEST(LieBialgebra, AbelianDoubleIsAbelian) {
  LieBialgebra b(LieAlgebra(3));
  EXPECT_TRUE(verify_bialgebra(b).ok());
  DrinfeldDouble d = drinfeld_double(b);
  EXPECT_EQ(d.g.dim(), 6u);
  EXPECT_TRUE(d.g.lie().bracket_matrix().is_zero());
}

TEST(LieBialgebra, Sl2BorelAxiomsAndBrokenCocycle) {
  LieBialgebra b = sl2_borel();
  EXPECT_TRUE(verify_bialgebra(b).ok());
  // In dimension 2 every antisymmetric cobracket is a cocycle; perturb the double instead.
  LieBialgebra bad = drinfeld_double(b).g;
  bad.d(0, 0, 2) += 1;
  bad.d(0, 2, 0) -= 1;
  Report r = verify_bialgebra(bad);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.find("cocycle")->pass);
}

TEST(LieBialgebra, Sl2BorelDoubleRecoversSl2) {
  DrinfeldDouble d = drinfeld_double(sl2_borel());
  ASSERT_EQ(d.g.dim(), 4u);
  EXPECT_TRUE(verify_bialgebra(d.g).ok());
  EXPECT_TRUE(invariant_form_check(d.g.lie(), d.form).ok());
  EXPECT_TRUE(manin_triple_check(manin_triple_of_double(d)).ok());

  const LieAlgebra& g = d.g.lie();
  RMatrix ads(0, 4);
  for (std::size_t j = 0; j < 4; ++j) ads = RMatrix::vstack(ads, g.ad(j));
  RMatrix center = kernel_basis(ads);
  ASSERT_EQ(center.cols(), 1u);
  Vector z = center.column_vector(0), e = basis_vector(4, 1), estar = basis_vector(4, 3);

  // Modulo z: F = lambda e*, H = [e, F] must give an sl2 triple.
  auto mod_z = [&](const Vector& v, const Vector& target) -> std::optional<Rational> {
    RMatrix basis = RMatrix::hstack(column_matrix(target), column_matrix(z));
    auto c = coordinates_in(basis, column_matrix(v));
    if (!c) return std::nullopt;
    return c->at(0, 0);
  };
  Vector w = g.bracket(g.bracket(e, estar), e);
  auto mu = mod_z(w, e);
  ASSERT_TRUE(mu.has_value());
  ASSERT_NE(sgn(*mu), 0);
  Rational lambda = Rational(2) / *mu;
  Vector f = lin(estar, lambda, estar, 0);
  Vector h = g.bracket(e, f);
  EXPECT_EQ(mod_z(g.bracket(h, e), e), Rational(2));
  EXPECT_EQ(mod_z(g.bracket(h, f), f), Rational(-2));
  RMatrix all = RMatrix::hstack(RMatrix::hstack(column_matrix(e), column_matrix(f)),
                                RMatrix::hstack(column_matrix(h), column_matrix(z)));
  EXPECT_EQ(rank(all), 4u);
}

TEST(LieBialgebra, DoubleOfDualSwapsRoles) {
  LieBialgebra b = sl2_borel();
  DrinfeldDouble d = drinfeld_double(b), ds = drinfeld_double(dual_bialgebra(b));
  EXPECT_TRUE(verify_bialgebra(dual_bialgebra(b)).ok());
  const std::size_t n = b.dim();
  RMatrix swap(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    swap.set(n + i, i, Rational(1));
    swap.set(i, n + i, Rational(1));
  }
  EXPECT_TRUE(lie_morphism_check(ds.g.lie(), d.g.lie(), swap).ok());
  EXPECT_EQ(swap.transpose() * d.form * swap, ds.form);
  // The swapped double carries the opposite cobracket.
  EXPECT_EQ(swap.kron(swap) * ds.g.cobracket_matrix(), -(d.g.cobracket_matrix() * swap));
}

TEST(LieBialgebra, ManinBialgebraOfDoubleIsOriginal) {
  LieBialgebra b = sl2_borel();
  EXPECT_EQ(manin_bialgebra(manin_triple_of_double(drinfeld_double(b))), b);
}

TEST(ManinTriple, Sl2PlusCartanPassesAndSignFlipFails) {
  KMModel model = build_km_model(integer_matrix({{2}}), false);
  ManinTriple t = manin_triple_of_model(model);
  EXPECT_EQ(t.g.dim(), 4u);
  EXPECT_TRUE(manin_triple_check(t).ok());
  ManinTriple broken = t;
  broken.form.set(3, 3, -broken.form.at(3, 3));
  Report r = manin_triple_check(broken);
  EXPECT_FALSE(r.find("minus isotropic")->pass);
  EXPECT_FALSE(r.find("plus isotropic")->pass);
}

TEST(ManinTriple, ExtendedModels) {
  for (const auto& a : {integer_matrix({{2}}), integer_matrix({{2, -1}, {-1, 2}}), integer_matrix({{2, -2}, {-1, 2}})}) {
    KMModel model = build_km_model(a, true);
    EXPECT_TRUE(invariant_form_check(model.lie, model.form).ok());
    ManinTriple t = manin_triple_of_model(model);
    Report r = manin_triple_check(t);
    EXPECT_TRUE(r.ok()) << r.failures().front();
    EXPECT_TRUE(verify_bialgebra(manin_bialgebra(t)).ok());
  }
}

TEST(KMModels, ModelsSatisfyRelations) {
  for (const auto& a : {integer_matrix({{2}}), integer_matrix({{2, -1}, {-1, 2}}),
                        integer_matrix({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}), integer_matrix({{2, -2}, {-1, 2}}),
                        integer_matrix({{2, -1}, {-2, 2}}), integer_matrix({{2, 0}, {0, 2}}),
                        integer_matrix({{2, 0, -1}, {0, 2, -1}, {-1, -1, 2}})}) {
    ChevalleyModule m = defining_module(a);
    Report r = chevalley_check(m);
    EXPECT_TRUE(r.ok()) << r.failures().front();
    EXPECT_TRUE(chevalley_check(dual_module(m)).ok());
    EXPECT_TRUE(chevalley_check(adjoint_module(a)).ok());
  }
  EXPECT_THROW(defining_module(integer_matrix({{2, -3}, {-1, 2}})), InvalidInput);
  EXPECT_EQ(build_km_model(integer_matrix({{2, -1}, {-1, 2}}), false).dim(), 8u);
  EXPECT_EQ(build_km_model(integer_matrix({{2, -2}, {-1, 2}}), true).dim(), 12u);
}

TEST(KMModels, B2FiveDimensionalModule) {
  RMatrix a = integer_matrix({{2, -2}, {-1, 2}});
  ChevalleyModule v = defining_module(a);
  ChevalleyModule five = highest_weight_submodule(tensor_module(v, v), {0, 1});
  EXPECT_EQ(five.dim(), 5u);
  EXPECT_TRUE(chevalley_check(five).ok());
  EXPECT_THROW(highest_weight_submodule(v, {3, 3}), InvalidInput);
}

TEST(Tits, Sl2AdjointIsSignedReflection) {
  RMatrix a = integer_matrix({{2}});
  ChevalleyModule adj = adjoint_module(a);
  RMatrix s = tits_operator(adj, 0);
  for (std::size_t c = 0; c < 3; ++c) {
    std::size_t count = 0;
    for (std::size_t r = 0; r < 3; ++r)
      if (sgn(s.at(r, c)) != 0) {
        ++count;
        EXPECT_EQ(abs(s.at(r, c)), Rational(1));
        // weight of column c reflected onto row r
        EXPECT_EQ(adj.h[0].at(r, r), -adj.h[0].at(c, c));
      }
    EXPECT_EQ(count, 1u);
  }
  EXPECT_EQ(tits_operator(trivial_module(a, 2), 0), RMatrix::identity(2));
  RMatrix not_nilpotent = RMatrix::identity(2);
  EXPECT_THROW(nilpotent_exp(not_nilpotent), InvalidInput);
}

TEST(Tits, BraidRelations) {
  RMatrix a2 = integer_matrix({{2, -1}, {-1, 2}});
  for (const auto& m : {defining_module(a2), dual_module(defining_module(a2)), adjoint_module(a2)}) {
    RMatrix s1 = tits_operator(m, 0), s2 = tits_operator(m, 1);
    EXPECT_EQ(s1 * s2 * s1, s2 * s1 * s2);
  }
  RMatrix b2 = integer_matrix({{2, -2}, {-1, 2}});
  ChevalleyModule v = defining_module(b2);
  for (const auto& m : {v, highest_weight_submodule(tensor_module(v, v), {0, 1}), adjoint_module(b2)}) {
    RMatrix s1 = tits_operator(m, 0), s2 = tits_operator(m, 1);
    EXPECT_EQ(s1 * s2 * s1 * s2, s2 * s1 * s2 * s1);
    EXPECT_NE(s1 * s2 * s1, s2 * s1 * s2);
  }
}

TEST(Tits, GroupLikeOnTensorProducts) {
  RMatrix a2 = integer_matrix({{2, -1}, {-1, 2}});
  ChevalleyModule v = defining_module(a2), w = dual_module(v);
  for (std::size_t i = 0; i < 2; ++i)
    EXPECT_EQ(tits_operator(tensor_module(v, w), i), tits_operator(v, i).kron(tits_operator(w, i)));
}

TEST(DYModule, Sl2StandardModules) {
  auto mods = sl2_dy_modules();
  for (const auto& v : mods) {
    Report r = verify_dy(v);
    EXPECT_TRUE(r.ok()) << r.failures().front();
  }
  const DYModule& v1 = mods[0];
  DYModule padded = dy_tensor(mods[2], v1);
  EXPECT_EQ(padded.action, v1.action);
  EXPECT_EQ(padded.coaction, v1.coaction);
  EXPECT_TRUE(cybe_defect(v1, v1, v1).is_zero());
  for (const auto& v : mods)
    for (const auto& w : mods) {
      EXPECT_TRUE(verify_dy(dy_tensor(v, w)).ok());
      Report r = omega_morphism_check(v, w);
      EXPECT_TRUE(r.ok()) << r.failures().front();
    }
}

TEST(DYModule, BrokenCoactionFails) {
  DYModule v = sl2_dy_modules()[0];
  v.coaction[1] *= Rational(2);
  EXPECT_FALSE(verify_dy(v).ok());
  DYModule w = sl2_dy_modules()[0];
  EXPECT_THROW(dy_tensor(w, dy_trivial(sl2_borel())), InvalidInput);
}

TEST(DYModule, AdjointOfDouble) {
  LieBialgebra b = sl2_borel();
  DYModule adj = dy_adjoint_of_double(b);
  EXPECT_TRUE(verify_dy(adj).ok());
  EXPECT_TRUE(omega_morphism_check(adj, adj).ok());
  EXPECT_TRUE(cybe_defect(adj, adj, adj).is_zero());
}

TEST(Associator, TruncationOrders) {
  DYModule v = sl2_dy_modules()[0];
  std::vector<DYModule> four(4, v);
  for (std::size_t order : {0u, 1u, 2u}) {
    Report r = check_associator_axioms_truncated(four, order);
    EXPECT_TRUE(r.ok()) << order << ": " << r.failures().front();
  }
  Report broken = check_associator_axioms_truncated(four, 2, Rational(1));
  EXPECT_TRUE(broken.find("pentagon")->pass);
  EXPECT_TRUE(broken.find("duality")->pass);
  EXPECT_FALSE(broken.find("hexagon 1")->pass);
  EXPECT_EQ(broken.find("hexagon 1")->detail, "differs at hbar^2");
  EXPECT_FALSE(broken.find("hexagon 2")->pass);
  EXPECT_TRUE(check_associator_axioms_truncated(four, 1, Rational(1)).ok());
}

TEST(Associator, MixedModules) {
  auto mods = sl2_dy_modules();
  std::vector<DYModule> four{mods[0], mods[1], mods[0], mods[2]};
  EXPECT_TRUE(check_associator_axioms_truncated(four, 2).ok());
}

TEST(SplitBorel, IdentityAndA2Projection) {
  RMatrix a2 = integer_matrix({{2, -1}, {-1, 2}});
  SplitPair same = split_borel_fixture(a2, VertexSet::range(2), VertexSet::range(2));
  EXPECT_EQ(same.i, RMatrix::identity(same.big.dim()));
  EXPECT_EQ(same.p, RMatrix::identity(same.big.dim()));

  SplitPair s = split_borel_fixture(a2, VertexSet::range(2), VertexSet::single(0));
  Report r = split_pair_check(s);
  EXPECT_TRUE(r.ok()) << r.failures().front();
  std::size_t killed = 0;
  for (std::size_t c = 0; c < s.big.dim(); ++c) {
    const auto& root = s.big_roots[c];
    bool outside = root[1] != 0;
    bool zero_column = s.p.select(iota(s.p.rows()), {c}).is_zero();
    if (outside) {
      EXPECT_TRUE(zero_column);
      ++killed;
    }
  }
  EXPECT_EQ(killed, 2u);
}

TEST(SplitBorel, AllSubdiagramsOfB2AndA3) {
  for (const auto& a : {integer_matrix({{2, -2}, {-1, 2}}), integer_matrix({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})}) {
    const unsigned n = static_cast<unsigned>(a.rows());
    for (std::uint64_t bits = 1; bits < (1u << n); ++bits)
      for (std::uint64_t sub = bits;; sub = (sub - 1) & bits) {
        SplitPair s = split_borel_fixture(a, VertexSet(bits), VertexSet(sub));
        Report r = split_pair_check(s);
        EXPECT_TRUE(r.ok()) << bits << "/" << sub << ": " << r.failures().front();
        if (sub == 0) break;
      }
  }
}

TEST(SplitBorel, OrthogonalUnionIsIsomorphism) {
  RMatrix a3 = integer_matrix({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  VertexSet b1 = VertexSet::single(0), b2 = VertexSet::single(2), b = b1 | b2;
  SplitPair s1 = split_borel_fixture(a3, b, b1), s2 = split_borel_fixture(a3, b, b2);
  RMatrix m = RMatrix::hstack(s1.i, s2.i);
  ASSERT_TRUE(m.is_square());
  EXPECT_EQ(rank(m), m.rows());
  EXPECT_TRUE(bialgebra_morphism_check(direct_sum(s1.small, s2.small), s1.big, m).ok());
}
