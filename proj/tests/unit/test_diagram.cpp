#include <gtest/gtest.h>

#include <functional>
#include <random>
#include <set>

#include "coxkit/chains.hpp"

using namespace coxkit;

namespace {

// Complete bracketings of n letters, generated as strings.
std::set<std::string> bracketings(int lo, int hi) {
  if (lo == hi) return {std::string(1, static_cast<char>('a' + lo))};
  std::set<std::string> out;
  for (int k = lo; k < hi; ++k)
    for (const auto& l : bracketings(lo, k))
      for (const auto& r : bracketings(k + 1, hi)) out.insert("(" + l + r + ")");
  return out;
}

Diagram relabel(const Diagram& d, const std::vector<unsigned>& p) {
  Diagram r(d.size());
  for (auto [i, j] : d.edges()) r.add_edge(p[i], p[j]);
  return r;
}

VertexSet relabel(VertexSet s, const std::vector<unsigned>& p) {
  VertexSet r;
  for (unsigned v : s.vertices()) r = r | VertexSet::single(p[v]);
  return r;
}

}  // namespace

TEST(Diagram, ComponentsAndCompatibility) {
  Diagram a3 = path_diagram(3);
  EXPECT_TRUE(a3.connected(VertexSet::of({0, 1, 2})));
  EXPECT_FALSE(a3.connected(VertexSet::of({0, 2})));
  auto cc = a3.components(VertexSet::of({0, 2}));
  ASSERT_EQ(cc.size(), 2u);
  EXPECT_TRUE(a3.orthogonal(VertexSet::of({0}), VertexSet::of({2})));
  EXPECT_FALSE(a3.compatible(VertexSet::of({0, 1}), VertexSet::of({1, 2})));
  EXPECT_TRUE(a3.compatible(VertexSet::of({1}), VertexSet::of({1, 2})));
  EXPECT_EQ(a3.connected_subsets(a3.all()).size(), 6u);
}

TEST(NestedSets, SmallCounts) {
  Diagram a2 = path_diagram(2);
  EXPECT_EQ(count_nested_sets(a2, a2.all(), VertexSet()), 3u);
  Diagram a3 = path_diagram(3);
  auto mns = enumerate_nested_sets(a3, a3.all(), VertexSet(), true);
  EXPECT_EQ(mns.size(), 5u);
  for (const auto& h : mns) {
    EXPECT_EQ(h.members.size(), 4u);
    EXPECT_TRUE(is_maximal_nested_set(a3, h));
  }
  // relative: B' = B gives a single set
  EXPECT_EQ(count_nested_sets(a3, a3.all(), a3.all()), 1u);
  // empty base
  auto e = enumerate_nested_sets(a3, VertexSet(), VertexSet());
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0].members, std::vector<VertexSet>{VertexSet()});
}

TEST(NestedSets, EnumerationOrderIsLexicographic) {
  Diagram a4 = path_diagram(4);
  auto all = enumerate_nested_sets(a4, a4.all(), VertexSet());
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].members, all[i].members);
  for (const auto& h : all) EXPECT_TRUE(is_nested_set(a4, h)) << h.to_string();
}

TEST(NestedSets, BracketingsMatchCatalan) {
  for (int n = 3; n <= 7; ++n) {
    Diagram d = path_diagram(static_cast<unsigned>(n - 1));
    EXPECT_EQ(count_nested_sets(d, d.all(), VertexSet(), true), bracketings(0, n - 1).size()) << n;
  }
}

TEST(NestedSets, MaximalCardinalityOnConnectedDiagrams) {
  std::mt19937 rng(3);
  for (int it = 0; it < 40; ++it) {
    unsigned n = 1 + rng() % 5;
    Diagram d(n);
    for (unsigned i = 1; i < n; ++i) d.add_edge(i, rng() % i);  // spanning tree
    for (unsigned k = 0; k < n; ++k) {
      unsigned i = rng() % n, j = rng() % n;
      if (i != j && !d.adjacent(i, j)) d.add_edge(i, j);
    }
    for (const auto& h : enumerate_nested_sets(d, d.all(), VertexSet(), true)) EXPECT_EQ(h.members.size(), n + 1);
  }
}

TEST(NestedSets, InvariantUnderRelabelling) {
  Diagram d(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  std::vector<unsigned> p{3, 0, 4, 1, 2};
  Diagram r = relabel(d, p);
  VertexSet b = VertexSet::of({0, 1, 2, 3}), bp = VertexSet::of({2});
  EXPECT_EQ(count_nested_sets(d, b, bp), count_nested_sets(r, relabel(b, p), relabel(bp, p)));
  EXPECT_EQ(count_nested_sets(d, d.all(), VertexSet(), true), count_nested_sets(r, r.all(), VertexSet(), true));
}

TEST(NestedSets, VerticalAndOrthogonalRoundTrips) {
  Diagram d(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  VertexSet b = d.all(), mid = VertexSet::of({1, 2, 4}), low = VertexSet::of({2});
  for (const auto& up : enumerate_nested_sets(d, b, mid))
    for (const auto& down : enumerate_nested_sets(d, mid, low)) {
      NestedSet h = vertical_union(d, up, down);
      auto [u2, d2] = vertical_decompose(d, h, mid);
      EXPECT_EQ(u2, up);
      EXPECT_EQ(d2, down);
    }
  Diagram o(4, {{0, 1}, {2, 3}});
  VertexSet b1 = VertexSet::of({0, 1}), b2 = VertexSet::of({2, 3});
  for (const auto& h1 : enumerate_nested_sets(o, b1, VertexSet()))
    for (const auto& h2 : enumerate_nested_sets(o, b2, VertexSet::of({3}))) {
      NestedSet h = orthogonal_union(o, h1, h2);
      EXPECT_TRUE(is_nested_set(o, h)) << h.to_string();
      EXPECT_EQ(restrict_to(o, h, b1), h1);
      EXPECT_EQ(restrict_to(o, h, b2), h2);
    }
  // count is multiplicative
  EXPECT_EQ(count_nested_sets(o, o.all(), VertexSet::of({3})),
            count_nested_sets(o, b1, VertexSet()) * count_nested_sets(o, b2, VertexSet::of({3})));
}

TEST(Chains, SectionIsRightInverse) {
  Diagram d(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  for (std::uint64_t lb = 0; lb < 32; ++lb) {
    VertexSet low(lb);
    for (const auto& h : enumerate_nested_sets(d, d.all(), low)) {
      Chain c = canonical_section(d, h);
      EXPECT_EQ(chain_to_nested_set(d, c), h) << h.to_string();
    }
  }
}

TEST(Chains, SectionIsNotAdditiveOnA3) {
  Diagram a3 = path_diagram(3);
  auto all = enumerate_nested_sets(a3, a3.all(), VertexSet());
  bool witness = false;
  for (const auto& h1 : all)
    for (const auto& h2 : all) {
      std::vector<VertexSet> m = h1.members;
      m.insert(m.end(), h2.members.begin(), h2.members.end());
      std::sort(m.begin(), m.end());
      m.erase(std::unique(m.begin(), m.end()), m.end());
      NestedSet u{a3.all(), VertexSet(), m};
      if (!is_nested_set(a3, u)) continue;
      auto s1 = canonical_section(a3, h1).steps, s2 = canonical_section(a3, h2).steps;
      std::set<VertexSet> joined(s1.begin(), s1.end());
      joined.insert(s2.begin(), s2.end());
      auto su = canonical_section(a3, u).steps;
      if (joined != std::set<VertexSet>(su.begin(), su.end())) witness = true;
    }
  EXPECT_TRUE(witness);
}

TEST(Chains, MovesAndEquivalence) {
  Diagram a3 = path_diagram(3);
  // {0} and {2} are orthogonal: inserting in either order is equivalent
  Chain c1{{VertexSet(), VertexSet::of({0}), VertexSet::of({0, 2}), a3.all()}};
  Chain c2{{VertexSet(), VertexSet::of({2}), VertexSet::of({0, 2}), a3.all()}};
  EXPECT_TRUE(chains_equivalent(a3, c1, c2));
  Chain c3{{VertexSet(), VertexSet::of({1}), a3.all()}};
  EXPECT_FALSE(chains_equivalent(a3, c1, c3));
  for (const auto& n : chain_neighbours(a3, c1))
    EXPECT_EQ(chain_to_nested_set(a3, n), chain_to_nested_set(a3, c1));
}

TEST(Chains, QuotientBijectionOnSmallDiagrams) {
  Diagram d(4, {{0, 1}, {1, 2}, {1, 3}});
  for (std::uint64_t b = 0; b < 16; ++b)
    for (std::uint64_t bp = b;; bp = (bp - 1) & b) {
      auto rep = check_chain_bijection(d, VertexSet(b), VertexSet(bp));
      EXPECT_TRUE(rep.ok()) << b << " " << bp;
      if (bp == 0) break;
    }
}
