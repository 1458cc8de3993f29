#include <gtest/gtest.h>

#include "coxkit/hopf.hpp"
#include "coxkit/linear_solve.hpp"

using namespace coxkit;

namespace {

std::string why(const Report& r) {
  std::string out;
  for (const auto& f : r.failures()) out += f + "; ";
  return out;
}

// DY modules over h used as fixtures: trivial and both regular structures.
std::vector<HopfDYModule> fixtures(const QuantumDouble& q) {
  return {hopf_dy_trivial(q.b), hopf_dy_adjoint(q.b), hopf_dy_regular(q.b)};
}

// One-dimensional DY modules: g acts by a sign, only e_0 and e_1 act, and the
// coaction is a group-like among e_0, e_1.
std::vector<HopfDYModule> characters(const QuantumDouble& q) {
  std::vector<HopfDYModule> out;
  const std::size_t d = q.b.dim;
  for (long s = -1; s <= 1; s += 2)
    for (long t = -1; t <= 1; t += 2) {
      HopfDYModule v{q.b, 1, {}, {}};
      for (std::size_t k = 0; k < d; ++k) {
        Rational act = k == 0 ? Rational(1) : (k == 1 ? Rational(s) : Rational(0));
        Rational co = k == 0 ? make_rational(1 + t, 2) : (k == 1 ? make_rational(1 - t, 2) : Rational(0));
        v.action.push_back(RMatrix::identity(1) * act);
        v.coaction.push_back(RMatrix::identity(1) * co);
      }
      if (verify_hopf_dy(v).ok()) out.push_back(v);
    }
  return out;
}

}  // namespace

TEST(Hopf, FixturesAreHopfAlgebras) {
  for (std::size_t n : {1u, 2u, 3u}) EXPECT_TRUE(verify_hopf(cyclic_group_algebra(n)).ok());
  Report r = verify_hopf(sweedler_algebra());
  EXPECT_TRUE(r.ok()) << why(r);
  EXPECT_TRUE(verify_hopf(dual_hopf_cop(sweedler_algebra())).ok());
  EXPECT_EQ(sweedler_algebra().antipode * sweedler_algebra().antipode == RMatrix::identity(4), false);
}

TEST(Hopf, BrokenStructuresAreItemized) {
  HopfAlgebra h = sweedler_algebra();
  HopfAlgebra bad = h;
  bad.antipode = RMatrix::identity(4);
  bad.antipode_inv = RMatrix::identity(4);
  Report r = verify_hopf(bad);
  EXPECT_FALSE(r.find("antipode")->pass);
  EXPECT_TRUE(r.find("associativity")->pass);

  bad = h;
  bad.comult.set(2 * 4 + 0, 2, Rational(0));  // Delta(x) = g (x) x
  bad.comult.set(0 * 4 + 2, 2, Rational(1));  // + 1 (x) x
  r = verify_hopf(bad);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.find("comultiplication multiplicative")->pass);
  EXPECT_THROW(quantum_double(bad), InvalidInput);
}

TEST(QuantumDouble, CyclicTwo) {
  QuantumDouble q = quantum_double(cyclic_group_algebra(2));
  EXPECT_EQ(q.db.dim, 4u);
  Report r = quasitriangular_check(q);
  EXPECT_TRUE(r.ok()) << why(r);
  // Abelian and cocommutative: DB is commutative, and R21 R commutes with Delta.
  EXPECT_EQ(q.db.mult, q.db.mult * flip_matrix<Rational>(4, 4));
  RMatrix r21 = flip_matrix<Rational>(4, 4) * q.r;
  RMatrix prod = tensor_multiply(q.db, r21, q.r, 2);
  for (std::size_t x = 0; x < 4; ++x) {
    RMatrix dx = q.db.comult * basis_element(4, x);
    EXPECT_EQ(tensor_multiply(q.db, prod, dx, 2), tensor_multiply(q.db, dx, prod, 2));
  }
}

TEST(QuantumDouble, SweedlerDouble) {
  QuantumDouble q = quantum_double(sweedler_algebra());
  EXPECT_EQ(q.db.dim, 16u);
  Report r = quasitriangular_check(q);
  EXPECT_TRUE(r.ok()) << why(r);
  // Not commutative, so R Delta R^-1 = Delta^op is a real condition.
  EXPECT_NE(q.db.mult, q.db.mult * flip_matrix<Rational>(16, 16));
}

TEST(QuantumDouble, WrongCrossRelationFails) {
  QuantumDouble q = quantum_double(sweedler_algebra());
  HopfAlgebra twisted = sweedler_algebra();
  twisted.antipode_inv = twisted.antipode;  // S^2 != id for Sweedler
  EXPECT_FALSE(verify_hopf(twisted).ok());
  // DB^op is again a Hopf algebra (antipode S^-1), but R no longer fits it.
  HopfAlgebra bad = q.db;
  bad.mult = q.db.mult * flip_matrix<Rational>(16, 16);
  bad.antipode = q.db.antipode_inv;
  bad.antipode_inv = q.db.antipode;
  ASSERT_TRUE(verify_hopf(bad).ok());
  QuantumDouble broken = q;
  broken.db = bad;
  Report r = quasitriangular_check(broken);
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.find("R Delta R^-1 = Delta^op")->pass);
}

TEST(HopfDY, RegularModulesAndCharacters) {
  for (const HopfAlgebra& h : {cyclic_group_algebra(2), cyclic_group_algebra(3), sweedler_algebra()}) {
    QuantumDouble q = quantum_double(h);
    for (const auto& v : fixtures(q)) {
      Report r = verify_hopf_dy(v);
      EXPECT_TRUE(r.ok()) << why(r);
    }
  }
  QuantumDouble q = quantum_double(sweedler_algebra());
  // Compatibility on x forces c S^-1(x) + s x c g = 0: (s, c) = (1, 1) or (-1, g).
  std::vector<HopfDYModule> chars = characters(q);
  ASSERT_EQ(chars.size(), 2u);
  EXPECT_EQ(chars[0].action[1], -RMatrix::identity(1));
  EXPECT_EQ(chars[0].coaction[1], RMatrix::identity(1));
  EXPECT_EQ(chars[1].action[1], RMatrix::identity(1));
  EXPECT_EQ(chars[1].coaction[0], RMatrix::identity(1));
}

TEST(HopfDY, BrokenCoactionFails) {
  HopfDYModule v = hopf_dy_adjoint(sweedler_algebra());
  std::swap(v.coaction[1], v.coaction[3]);
  Report r = verify_hopf_dy(v);
  EXPECT_FALSE(r.ok());
}

TEST(HopfDY, CyclicTwoRegularBraiding) {
  HopfAlgebra h = cyclic_group_algebra(2);
  for (const auto& v : {hopf_dy_adjoint(h), hopf_dy_regular(h)}) {
    auto [r, rinv] = hopf_dy_braiding(v, v);
    EXPECT_EQ(r.rows(), 4u);
    EXPECT_EQ(r * rinv, RMatrix::identity(4));
  }
  // Sign representation graded by g: R = -1 on V (x) V.
  HopfDYModule s{h, 1, {RMatrix::identity(1), -RMatrix::identity(1)}, {RMatrix(1, 1), RMatrix::identity(1)}};
  ASSERT_TRUE(verify_hopf_dy(s).ok());
  EXPECT_EQ(hopf_dy_braiding(s, s).first, -RMatrix::identity(1));
  // Trivial coaction on W gives R = id.
  HopfDYModule w = hopf_dy_trivial(h, 2);
  EXPECT_EQ(hopf_dy_braiding(s, w).first, RMatrix::identity(2));
}

TEST(HopfDY, TensorProductsAndBraidings) {
  for (const HopfAlgebra& h : {cyclic_group_algebra(3), sweedler_algebra()}) {
    QuantumDouble q = quantum_double(h);
    std::vector<HopfDYModule> mods = fixtures(q);
    for (const auto& c : characters(q)) mods.push_back(c);
    for (const auto& v : mods)
      for (const auto& w : mods) EXPECT_TRUE(verify_hopf_dy(hopf_dy_tensor(v, w)).ok());
    for (std::size_t i = 0; i < mods.size(); ++i) {
      const auto& u = mods[i];
      const auto& v = mods[(i + 1) % mods.size()];
      const auto& w = mods[(i + 2) % mods.size()];
      Report r = hopf_braiding_check(u, v, w);
      EXPECT_TRUE(r.ok()) << why(r);
      Report same = hopf_braiding_check(v, v, v);
      EXPECT_TRUE(same.find("yang-baxter")->pass);
    }
  }
}

TEST(HopfDY, BraidingIsNatural) {
  QuantumDouble q = quantum_double(sweedler_algebra());
  std::vector<HopfDYModule> mods = fixtures(q);
  for (const auto& c : characters(q)) mods.push_back(c);
  std::size_t samples = 0;
  for (const auto& v : mods)
    for (const auto& v2 : mods)
      for (const RMatrix& f : hopf_dy_morphisms(v, v2))
        for (const auto& w : mods) {
          ++samples;
          RMatrix iw = RMatrix::identity(w.dim);
          EXPECT_EQ(f.kron(iw) * hopf_dy_braiding(v, w).first, hopf_dy_braiding(v2, w).first * f.kron(iw));
          EXPECT_EQ(iw.kron(f) * hopf_dy_braiding(w, v).first, hopf_dy_braiding(w, v2).first * iw.kron(f));
        }
  EXPECT_GT(samples, 10u);
}

TEST(HopfDY, DoubleModulesRoundTrip) {
  for (const HopfAlgebra& h : {cyclic_group_algebra(2), sweedler_algebra()}) {
    QuantumDouble q = quantum_double(h);
    std::vector<RMatrix> reg = double_regular_module(q);
    ASSERT_TRUE(double_module_check(q, reg).ok());
    HopfDYModule v = hopf_dy_from_double_module(q, reg);
    Report r = verify_hopf_dy(v);
    EXPECT_TRUE(r.ok()) << why(r);
    EXPECT_EQ(double_module_of(q, v), reg);
    for (const auto& w : fixtures(q)) {
      std::vector<RMatrix> rho = double_module_of(q, w);
      EXPECT_TRUE(double_module_check(q, rho).ok());
      HopfDYModule back = hopf_dy_from_double_module(q, rho);
      EXPECT_EQ(back.action, w.action);
      EXPECT_EQ(back.coaction, w.coaction);
    }
    // R of DB acting on V (x) W is the DY R-matrix.
    HopfDYModule w = hopf_dy_adjoint(h);
    std::vector<RMatrix> rw = double_module_of(q, w);
    const std::size_t n = q.db.dim;
    RMatrix acted(v.dim * w.dim, v.dim * w.dim);
    for (const auto& [key, c] : q.r.entries()) acted += reg[key.first / n].kron(rw[key.first % n]) * c;
    EXPECT_EQ(acted, hopf_dy_braiding(v, w).first);
  }
}
