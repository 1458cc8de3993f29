#include "coxkit/chains.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

void extend(std::vector<VertexSet>& prefix, VertexSet base, bool maximal_only, std::vector<Chain>& out) {
  VertexSet cur = prefix.back();
  if (cur == base) {
    out.push_back(Chain{prefix});
    return;
  }
  const std::uint64_t rest = (base - cur).bits();
  std::uint64_t sub = 0;
  do {
    sub = (sub - rest) & rest;
    if (!sub) break;
    if (maximal_only && std::popcount(sub) != 1) continue;
    prefix.push_back(cur | VertexSet(sub));
    extend(prefix, base, maximal_only, out);
    prefix.pop_back();
  } while (sub != rest);
}

// Intermediate steps M with low < M < high that a move may insert.
std::vector<VertexSet> insertable(const Diagram& d, VertexSet low, VertexSet high) {
  std::vector<VertexSet> out;
  auto comps = d.components(high);
  const std::size_t k = comps.size();
  for (std::uint64_t pick = 1; pick + 1 < (std::uint64_t{1} << k); ++pick) {
    VertexSet x;
    for (std::size_t i = 0; i < k; ++i)
      if ((pick >> i) & 1) x = x | comps[i];
    VertexSet m = x | low;
    if (low.proper_subset_of(m) && m.proper_subset_of(high)) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool removable(const Diagram& d, VertexSet low, VertexSet mid, VertexSet high) {
  for (auto c : d.components(high)) {
    VertexSet mc = mid & c;
    if (mc != c && mc != (low & c)) return false;
  }
  return true;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::string Chain::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (i) s += " < ";
    s += steps[i].to_string();
  }
  return s;
}

std::vector<Chain> enumerate_chains(VertexSet base, VertexSet lower, bool maximal_only) {
  if (!lower.subset_of(base)) throw InvalidInput("chains need lower inside base");
  std::vector<Chain> out;
  std::vector<VertexSet> prefix{lower};
  extend(prefix, base, maximal_only, out);
  std::sort(out.begin(), out.end());
  return out;
}

NestedSet chain_to_nested_set(const Diagram& d, const Chain& c) {
  std::vector<VertexSet> m;
  for (auto s : c.steps)
    for (auto k : d.components(s)) m.push_back(k);
  if (c.lower().empty()) m.push_back(VertexSet());
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return NestedSet{c.base(), c.lower(), std::move(m)};
}

Chain canonical_section(const Diagram& d, const NestedSet& h) {
  if (auto v = nested_set_violation(d, h)) throw InvalidInput("canonical_section: " + *v);
  auto lower_cc = d.components(h.lower);
  std::vector<VertexSet> steps{h.base};
  while (steps.back() != h.lower) {
    VertexSet next;
    for (auto c : d.components(steps.back())) {
      if (std::find(lower_cc.begin(), lower_cc.end(), c) != lower_cc.end()) {
        next = next | c;
        continue;
      }
      // maximal members properly inside this component
      for (auto m : h.members) {
        if (!m.proper_subset_of(c)) continue;
        bool maximal = true;
        for (auto o : h.members)
          if (o != m && m.proper_subset_of(o) && o.proper_subset_of(c)) {
            maximal = false;
            break;
          }
        if (maximal) next = next | m;
      }
    }
    if (next == steps.back()) throw Error("canonical_section: no progress");
    steps.push_back(next);
  }
  std::reverse(steps.begin(), steps.end());
  return Chain{std::move(steps)};
}

std::vector<Chain> chain_neighbours(const Diagram& d, const Chain& c) {
  std::vector<Chain> out;
  for (std::size_t k = 0; k + 1 < c.steps.size(); ++k)
    for (auto m : insertable(d, c.steps[k], c.steps[k + 1])) {
      Chain n = c;
      n.steps.insert(n.steps.begin() + static_cast<long>(k + 1), m);
      out.push_back(std::move(n));
    }
  for (std::size_t k = 1; k + 1 < c.steps.size(); ++k)
    if (removable(d, c.steps[k - 1], c.steps[k], c.steps[k + 1])) {
      Chain n = c;
      n.steps.erase(n.steps.begin() + static_cast<long>(k));
      out.push_back(std::move(n));
    }
  return out;
}

bool chains_equivalent(const Diagram& d, const Chain& a, const Chain& b) {
  if (a.base() != b.base() || a.lower() != b.lower()) return false;
  std::set<Chain> seen{a};
  std::deque<Chain> queue{a};
  while (!queue.empty()) {
    Chain c = std::move(queue.front());
    queue.pop_front();
    if (c == b) return true;
    for (auto& n : chain_neighbours(d, c))
      if (seen.insert(n).second) queue.push_back(std::move(n));
  }
  return false;
}

ChainQuotient chain_quotient(const Diagram& d, VertexSet base, VertexSet lower) {
  ChainQuotient q;
  q.chains = enumerate_chains(base, lower);
  std::map<std::vector<VertexSet>, std::size_t> index;
  for (std::size_t i = 0; i < q.chains.size(); ++i) index.emplace(q.chains[i].steps, i);
  DisjointSets ds(q.chains.size());
  // insertion moves suffice: removal is the reverse edge
  for (std::size_t i = 0; i < q.chains.size(); ++i) {
    const auto& st = q.chains[i].steps;
    for (std::size_t k = 0; k + 1 < st.size(); ++k)
      for (auto m : insertable(d, st[k], st[k + 1])) {
        std::vector<VertexSet> n = st;
        n.insert(n.begin() + static_cast<long>(k + 1), m);
        ds.unite(i, index.at(n));
      }
  }
  std::map<std::size_t, std::size_t> relabel;
  q.component.resize(q.chains.size());
  for (std::size_t i = 0; i < q.chains.size(); ++i) {
    auto [it, fresh] = relabel.try_emplace(ds.find(i), relabel.size());
    q.component[i] = it->second;
  }
  q.count = relabel.size();
  return q;
}

ChainBijectionReport check_chain_bijection(const Diagram& d, VertexSet base, VertexSet lower) {
  ChainBijectionReport rep;
  auto q = chain_quotient(d, base, lower);
  rep.components = q.count;
  std::vector<std::optional<NestedSet>> image(q.count);
  std::set<NestedSet> seen;
  for (std::size_t i = 0; i < q.chains.size(); ++i) {
    NestedSet h = chain_to_nested_set(d, q.chains[i]);
    auto& slot = image[q.component[i]];
    if (!slot) slot = h;
    else if (!(*slot == h)) rep.constant_on_components = false;
  }
  for (auto& h : image)
    if (h && !seen.insert(*h).second) rep.injective = false;
  auto ns = enumerate_nested_sets(d, base, lower);
  rep.nested_sets = ns.size();
  std::set<NestedSet> all(ns.begin(), ns.end());
  rep.surjective = all == seen;
  return rep;
}

}  // namespace coxkit
