#include "coxkit/nested_sets.hpp"

#include <algorithm>

#include "coxkit/errors.hpp"

namespace coxkit {

namespace {

std::vector<VertexSet> mandatory_members(const Diagram& d, VertexSet base, VertexSet lower) {
  std::vector<VertexSet> m = d.components(base);
  for (auto c : d.components(lower)) m.push_back(c);
  if (lower.empty()) m.push_back(VertexSet());
  std::sort(m.begin(), m.end());
  m.erase(std::unique(m.begin(), m.end()), m.end());
  return m;
}

bool admissible_against_lower(const Diagram& d, VertexSet c, const std::vector<VertexSet>& lower_cc) {
  for (auto k : lower_cc) {
    if (!d.compatible(c, k)) return false;
    if (c.proper_subset_of(k)) return false;
  }
  return true;
}

NestedSet make(VertexSet base, VertexSet lower, std::vector<VertexSet> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return NestedSet{base, lower, std::move(members)};
}

struct Enumerator {
  const Diagram& d;
  VertexSet base, lower;
  std::vector<VertexSet> fixed;
  std::vector<VertexSet> cand;
  std::vector<std::vector<bool>> compat;
  bool maximal_only;
  std::vector<std::size_t> chosen;
  std::vector<NestedSet> out;

  bool fits(std::size_t k) const {
    for (auto c : chosen)
      if (!compat[c][k]) return false;
    return true;
  }

  void emit() {
    if (maximal_only)
      for (std::size_t k = 0; k < cand.size(); ++k)
        if (std::find(chosen.begin(), chosen.end(), k) == chosen.end() && fits(k)) return;
    std::vector<VertexSet> m = fixed;
    for (auto c : chosen) m.push_back(cand[c]);
    out.push_back(make(base, lower, std::move(m)));
  }

  void run(std::size_t from) {
    emit();
    for (std::size_t k = from; k < cand.size(); ++k) {
      if (!fits(k)) continue;
      chosen.push_back(k);
      run(k + 1);
      chosen.pop_back();
    }
  }
};

}  // namespace

bool NestedSet::contains(VertexSet s) const {
  return std::binary_search(members.begin(), members.end(), s);
}

std::string NestedSet::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ", ";
    s += members[i].to_string();
  }
  return s + "}";
}

std::vector<NestedSet> enumerate_nested_sets(const Diagram& d, VertexSet base, VertexSet lower, bool maximal_only) {
  if (!lower.subset_of(base)) throw InvalidInput("nested sets need lower inside base");
  if (!base.subset_of(d.all())) throw InvalidInput("base is not a subdiagram");
  Enumerator e{d, base, lower, mandatory_members(d, base, lower), {}, {}, maximal_only, {}, {}};
  auto lower_cc = d.components(lower);
  for (auto c : d.connected_subsets(base)) {
    if (std::binary_search(e.fixed.begin(), e.fixed.end(), c)) continue;
    if (admissible_against_lower(d, c, lower_cc)) e.cand.push_back(c);
  }
  e.compat.assign(e.cand.size(), std::vector<bool>(e.cand.size(), true));
  for (std::size_t i = 0; i < e.cand.size(); ++i)
    for (std::size_t j = i + 1; j < e.cand.size(); ++j)
      e.compat[i][j] = e.compat[j][i] = d.compatible(e.cand[i], e.cand[j]);
  e.run(0);
  std::sort(e.out.begin(), e.out.end());
  return std::move(e.out);
}

std::size_t count_nested_sets(const Diagram& d, VertexSet base, VertexSet lower, bool maximal_only) {
  return enumerate_nested_sets(d, base, lower, maximal_only).size();
}

std::optional<std::string> nested_set_violation(const Diagram& d, const NestedSet& h) {
  if (!h.lower.subset_of(h.base)) return "lower is not contained in base";
  if (!std::is_sorted(h.members.begin(), h.members.end()) ||
      std::adjacent_find(h.members.begin(), h.members.end()) != h.members.end())
    return "members are not strictly sorted";
  for (auto m : mandatory_members(d, h.base, h.lower))
    if (!h.contains(m)) return "missing mandatory member " + m.to_string();
  auto lower_cc = d.components(h.lower);
  for (auto c : h.members) {
    if (c.empty()) {
      if (!h.lower.empty()) return "empty set present although lower is nonempty";
      continue;
    }
    if (!c.subset_of(h.base)) return "member " + c.to_string() + " leaves the base";
    if (!d.connected(c)) return "member " + c.to_string() + " is disconnected";
    if (!admissible_against_lower(d, c, lower_cc)) return "member " + c.to_string() + " clashes with lower";
  }
  for (std::size_t i = 0; i < h.members.size(); ++i)
    for (std::size_t j = i + 1; j < h.members.size(); ++j)
      if (!d.compatible(h.members[i], h.members[j]))
        return "members " + h.members[i].to_string() + " and " + h.members[j].to_string() + " are incompatible";
  return std::nullopt;
}

bool is_nested_set(const Diagram& d, const NestedSet& h) { return !nested_set_violation(d, h).has_value(); }

bool is_maximal_nested_set(const Diagram& d, const NestedSet& h) {
  if (!is_nested_set(d, h)) return false;
  auto lower_cc = d.components(h.lower);
  for (auto c : d.connected_subsets(h.base)) {
    if (h.contains(c) || !admissible_against_lower(d, c, lower_cc)) continue;
    bool ok = true;
    for (auto m : h.members)
      if (!d.compatible(c, m)) {
        ok = false;
        break;
      }
    if (ok) return false;
  }
  return true;
}

NestedSet vertical_union(const Diagram& d, const NestedSet& upper, const NestedSet& lower) {
  if (upper.lower != lower.base) throw InvalidInput("vertical_union: intermediate subdiagrams differ");
  std::vector<VertexSet> m;
  for (auto c : upper.members)
    if (!c.empty()) m.push_back(c);
  for (auto c : lower.members) m.push_back(c);
  NestedSet h = make(upper.base, lower.lower, std::move(m));
  if (auto v = nested_set_violation(d, h)) throw InvalidInput("vertical_union produced an invalid set: " + *v);
  return h;
}

std::pair<NestedSet, NestedSet> vertical_decompose(const Diagram& d, const NestedSet& h, VertexSet mid) {
  if (!h.lower.subset_of(mid) || !mid.subset_of(h.base))
    throw InvalidInput("vertical_decompose: need lower <= mid <= base");
  auto mid_cc = d.components(mid);
  for (auto c : mid_cc)
    if (!h.contains(c)) throw InvalidInput("vertical_decompose: " + c.to_string() + " is not a member");
  std::vector<VertexSet> up(mid_cc.begin(), mid_cc.end()), down;
  if (mid.empty()) up.push_back(VertexSet());
  for (auto c : h.members) {
    if (c.subset_of(mid)) down.push_back(c);
    else up.push_back(c);
  }
  return {make(h.base, mid, std::move(up)), make(mid, h.lower, std::move(down))};
}

NestedSet orthogonal_union(const Diagram& d, const NestedSet& a, const NestedSet& b) {
  if (!d.orthogonal(a.base, b.base)) throw InvalidInput("orthogonal_union: bases are not orthogonal");
  std::vector<VertexSet> m = a.members;
  m.insert(m.end(), b.members.begin(), b.members.end());
  VertexSet lower = a.lower | b.lower;
  if (!lower.empty()) std::erase(m, VertexSet());
  return make(a.base | b.base, lower, std::move(m));
}

NestedSet restrict_to(const Diagram& d, const NestedSet& h, VertexSet part) {
  for (auto c : d.components(part))
    if (!h.contains(c)) throw InvalidInput("restrict_to: part is not a union of components");
  std::vector<VertexSet> m;
  VertexSet lower = h.lower & part;
  for (auto c : h.members)
    if (c.subset_of(part) && !(c.empty() && !lower.empty())) m.push_back(c);
  if (lower.empty() && std::find(m.begin(), m.end(), VertexSet()) == m.end()) m.push_back(VertexSet());
  return make(part, lower, std::move(m));
}

}  // namespace coxkit
