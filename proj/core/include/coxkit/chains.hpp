#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxkit/nested_sets.hpp"

namespace coxkit {

// Strictly increasing chain lower = steps.front() < ... < steps.back() = base.
struct Chain {
  std::vector<VertexSet> steps;

  VertexSet lower() const { return steps.front(); }
  VertexSet base() const { return steps.back(); }
  std::size_t length() const { return steps.size() - 1; }
  std::string to_string() const;
  friend bool operator==(const Chain&, const Chain&) = default;
  friend auto operator<=>(const Chain& a, const Chain& b) { return a.steps <=> b.steps; }
};

// All chains from lower to base; maximal chains add one vertex per step.
std::vector<Chain> enumerate_chains(VertexSet base, VertexSet lower, bool maximal_only = false);

// Union of cc(B_k) over the steps, plus the empty set when lower is empty.
NestedSet chain_to_nested_set(const Diagram& d, const Chain& c);
// Canonical section: ι(s(H)) = H.
Chain canonical_section(const Diagram& d, const NestedSet& h);

// Chains reachable in one move (insertion or removal of an intermediate step
// of the form X u L with X a union of components of the step above).
std::vector<Chain> chain_neighbours(const Diagram& d, const Chain& c);
bool chains_equivalent(const Diagram& d, const Chain& a, const Chain& b);

// Connected components of the move graph on Ch(base, lower).
struct ChainQuotient {
  std::vector<Chain> chains;
  std::vector<std::size_t> component;  // component id per chain, ids 0..count-1
  std::size_t count = 0;
};
ChainQuotient chain_quotient(const Diagram& d, VertexSet base, VertexSet lower);

// Checks that ι induces a bijection Ch(base, lower)/moves -> Ns(base, lower).
struct ChainBijectionReport {
  bool constant_on_components = true;
  bool injective = true;
  bool surjective = true;
  std::size_t components = 0;
  std::size_t nested_sets = 0;
  bool ok() const { return constant_on_components && injective && surjective && components == nested_sets; }
};
ChainBijectionReport check_chain_bijection(const Diagram& d, VertexSet base, VertexSet lower);

}  // namespace coxkit
