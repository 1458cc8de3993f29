#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxkit/diagram.hpp"

namespace coxkit {

// Nested set on (base, lower): a family of connected subsets of base that
// always contains cc(base) and cc(lower), plus the empty set iff lower is
// empty. Members are pairwise compatible and none is properly contained in
// a component of lower. Members are kept sorted ascending by mask.
struct NestedSet {
  VertexSet base;
  VertexSet lower;
  std::vector<VertexSet> members;

  bool contains(VertexSet s) const;
  std::string to_string() const;
  friend bool operator==(const NestedSet&, const NestedSet&) = default;
  friend auto operator<=>(const NestedSet& a, const NestedSet& b) { return a.members <=> b.members; }
};

// Enumerates Ns(base, lower) in lexicographic order of the sorted member
// masks. Requires lower subset of base.
std::vector<NestedSet> enumerate_nested_sets(const Diagram& d, VertexSet base, VertexSet lower,
                                             bool maximal_only = false);
std::size_t count_nested_sets(const Diagram& d, VertexSet base, VertexSet lower, bool maximal_only = false);

// nullopt if valid, otherwise a description of the first violated condition.
std::optional<std::string> nested_set_violation(const Diagram& d, const NestedSet& h);
bool is_nested_set(const Diagram& d, const NestedSet& h);
// No member can be added.
bool is_maximal_nested_set(const Diagram& d, const NestedSet& h);

// Ns(B, B') x Ns(B', B'') -> Ns(B, B'').
NestedSet vertical_union(const Diagram& d, const NestedSet& upper, const NestedSet& lower);
// Inverse of vertical_union through the intermediate `mid`, which must have
// cc(mid) inside h. Returns (upper on (B, mid), lower on (mid, B'')).
std::pair<NestedSet, NestedSet> vertical_decompose(const Diagram& d, const NestedSet& h, VertexSet mid);
// Ns(B1, B1') x Ns(B2, B2') -> Ns(B1 u B2, B1' u B2') for B1 orthogonal to B2.
NestedSet orthogonal_union(const Diagram& d, const NestedSet& a, const NestedSet& b);
// Restriction of h to a union of components `part` of h.base.
NestedSet restrict_to(const Diagram& d, const NestedSet& h, VertexSet part);

}  // namespace coxkit
