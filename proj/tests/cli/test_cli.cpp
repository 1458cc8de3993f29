#include <gtest/gtest.h>

#include <set>

#include "coxkit/hopf.hpp"
#include "coxkit/quantum.hpp"
#include "coxkit/realization.hpp"
#include "fixture_io.hpp"
#include "suites.hpp"

using namespace coxkit;
using namespace coxkit::cli;

namespace {

TEST(FixtureIO, ScalarsRoundTrip) {
  for (const char* s : {"0", "-1/3", "22/7"}) EXPECT_EQ(rational_from_json(rational_to_json(parse_rational(s))), parse_rational(s));
  QScalar laurent = QScalar::q_power(Rational(1, 2)) - QScalar::q_power(Rational(-3, 4)) * QScalar(5);
  Json j = qscalar_to_json(laurent);
  EXPECT_FALSE(j.contains("num"));
  EXPECT_EQ(qscalar_from_json(j), laurent);
  QScalar ratio = QScalar::q_integer(3) / QScalar::q_integer(2);
  EXPECT_TRUE(qscalar_to_json(ratio).contains("den"));
  EXPECT_EQ(qscalar_from_json(qscalar_to_json(ratio)), ratio);
  EXPECT_THROW(qscalar_from_json(Json{{"num", Json::object()}, {"den", Json::object()}}), std::exception);
  EXPECT_THROW(rational_from_json(Json(1.5)), FixtureError);
}

TEST(FixtureIO, StructuresRoundTrip) {
  HopfAlgebra h = sweedler_algebra();
  HopfAlgebra back = hopf_from_json(hopf_to_json(h));
  EXPECT_EQ(back.mult, h.mult);
  EXPECT_EQ(back.comult, h.comult);
  EXPECT_EQ(back.antipode, h.antipode);
  EXPECT_TRUE(verify_hopf(back).ok());

  LieBialgebra b = bialgebra_from_json(builtin_fixture("sl2-borel"));
  EXPECT_EQ(bialgebra_from_json(bialgebra_to_json(b)), b);

  for (const auto& name : {"witness-sl2", "witness-b2", "witness-a2-classical"}) {
    Json j = builtin_fixture(name);
    CoxeterWitness w = witness_from_json(j);
    EXPECT_EQ(witness_to_json(w), j) << name;
  }
}

TEST(FixtureIO, ShippedFixturesMatchTheLibrary) {
  for (const auto& name : builtin_fixture_names()) EXPECT_EQ(load_fixture(name), builtin_fixture(name)) << name;
}

TEST(FixtureIO, MalformedFixturesAreRejected) {
  EXPECT_THROW(load_fixture("no-such-fixture"), FixtureError);
  EXPECT_THROW(load_fixture("a3", "matrix"), FixtureError);
  EXPECT_THROW(diagram_from_json(Json{{"kind", "diagram"}, {"vertices", 2}, {"edges", {{0, 2}}}}), FixtureError);
  EXPECT_THROW(matrix_fixture_from_json(Json{{"kind", "matrix"}, {"rows", {{"1", "x"}}}}), FixtureError);
  Json w = builtin_fixture("witness-sl2");
  w["operators"].erase(0);
  EXPECT_THROW(witness_from_json(w), FixtureError);
}

TEST(CheckCommand, TamperedWitnessFails) {
  Json j = builtin_fixture("witness-sl2");
  EXPECT_TRUE(check_fixture(j).ok());

  Json wrong = j;
  wrong["orientation"] = "flip";
  Report r = check_fixture(wrong);
  EXPECT_FALSE(r.find("orientation")->pass);

  // Doubling S_0 on V(1) keeps the braid relations (rank 1) but breaks the coproduct square.
  CoxeterWitness w = witness_from_json(j);
  w.s[0][0] = w.s[0][0] * QScalar(2);
  Report bad = check_fixture(witness_to_json(w));
  EXPECT_FALSE(bad.find("coproduct axiom")->pass);
}

TEST(CheckCommand, MatrixExpectationsAreCompared) {
  EXPECT_TRUE(check_fixture(load_fixture("counterexample-2")).ok());
  Json j = load_fixture("counterexample-2");
  j["expected"]["witness"] = {0};
  EXPECT_FALSE(check_fixture(j).ok());
}

TEST(Graphs, CountsUpToIsomorphism) {
  const std::vector<std::size_t> connected{1, 1, 2, 6, 21, 112}, all{1, 2, 4, 11, 34};
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(graphs_up_to_isomorphism(n, true).size(), connected[n - 1]) << n;
  for (unsigned n = 1; n <= 5; ++n) EXPECT_EQ(graphs_up_to_isomorphism(n, false).size(), all[n - 1]) << n;
}

TEST(Suites, EveryCriterionHasOneOwningSuite) {
  std::set<int> ids;
  for (const auto& c : criteria()) {
    EXPECT_TRUE(is_suite(c.suite)) << c.id;
    EXPECT_TRUE(ids.insert(c.id).second);
  }
  EXPECT_EQ(ids.size(), 13u);
  EXPECT_TRUE(is_suite("all"));
  EXPECT_THROW(run_suite("nope"), std::invalid_argument);
}

TEST(Suites, FixtureViewsAreDeterministic) {
  auto a = run_suite("quantum-sl2"), b = run_suite("quantum-sl2", {false, 2});
  ASSERT_EQ(a.size(), 1u);
  EXPECT_TRUE(a[0].report.ok());
  ASSERT_EQ(a[0].report.checks().size(), b[0].report.checks().size());
  for (std::size_t k = 0; k < a[0].report.checks().size(); ++k) {
    EXPECT_EQ(a[0].report.checks()[k].name, b[0].report.checks()[k].name);
    EXPECT_EQ(a[0].report.checks()[k].detail, b[0].report.checks()[k].detail);
  }
}

TEST(Suites, ParallelForKeepsIndices) {
  std::vector<int> out(50);
  parallel_for(out.size(), 4, [&](std::size_t i) { out[i] = static_cast<int>(i * i); });
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], static_cast<int>(i * i));
  EXPECT_THROW(parallel_for(3, 2, [](std::size_t i) {
                 if (i == 1) throw std::runtime_error("x");
               }),
               std::runtime_error);
}

}  // namespace
