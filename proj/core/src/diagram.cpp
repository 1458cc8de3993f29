#include "coxkit/diagram.hpp"

#include "coxkit/errors.hpp"

namespace coxkit {

std::vector<unsigned> VertexSet::vertices() const {
  std::vector<unsigned> out;
  for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(static_cast<unsigned>(std::countr_zero(b)));
  return out;
}

std::string VertexSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for (unsigned v : vertices()) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

Diagram::Diagram(unsigned n) : n_(n), adj_(n) {
  if (n > 64) throw InvalidInput("diagrams are limited to 64 vertices");
}

Diagram::Diagram(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& edges) : Diagram(n) {
  for (auto [i, j] : edges) add_edge(i, j);
}

void Diagram::add_edge(unsigned i, unsigned j) {
  if (i >= n_ || j >= n_) throw InvalidInput("edge endpoint out of range");
  if (i == j) throw InvalidInput("self-loops are not allowed");
  adj_[i] = adj_[i] | VertexSet::single(j);
  adj_[j] = adj_[j] | VertexSet::single(i);
}

std::vector<std::pair<unsigned, unsigned>> Diagram::edges() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned i = 0; i < n_; ++i)
    for (unsigned j : adj_[i].vertices())
      if (i < j) out.emplace_back(i, j);
  return out;
}

bool Diagram::connected(VertexSet s) const {
  if (s.empty()) return false;
  VertexSet seen = VertexSet::single(s.lowest()), frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (unsigned v : frontier.vertices()) next = next | (adj_[v] & s);
    frontier = next - seen;
    seen = seen | frontier;
  }
  return seen == s;
}

std::vector<VertexSet> Diagram::components(VertexSet s) const {
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (!rest.empty()) {
    VertexSet comp = VertexSet::single(rest.lowest()), frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      for (unsigned v : frontier.vertices()) next = next | (adj_[v] & rest);
      frontier = next - comp;
      comp = comp | frontier;
    }
    out.push_back(comp);
    rest = rest - comp;
  }
  return out;
}

bool Diagram::orthogonal(VertexSet a, VertexSet b) const {
  if (!a.disjoint(b)) return false;
  for (unsigned v : a.vertices())
    if (!adj_[v].disjoint(b)) return false;
  return true;
}

bool Diagram::compatible(VertexSet a, VertexSet b) const {
  return a.subset_of(b) || b.subset_of(a) || orthogonal(a, b);
}

std::vector<VertexSet> Diagram::connected_subsets(VertexSet s) const {
  std::vector<VertexSet> out;
  // enumerate submasks in increasing order
  const std::uint64_t full = s.bits();
  std::uint64_t sub = 0;
  do {
    sub = (sub - full) & full;
    if (sub && connected(VertexSet(sub))) out.emplace_back(sub);
  } while (sub != full && sub != 0);
  return out;
}

Diagram Diagram::induced(VertexSet s) const {
  auto vs = s.vertices();
  Diagram d(static_cast<unsigned>(vs.size()));
  for (unsigned a = 0; a < vs.size(); ++a)
    for (unsigned b = a + 1; b < vs.size(); ++b)
      if (adjacent(vs[a], vs[b])) d.add_edge(a, b);
  return d;
}

Diagram path_diagram(unsigned n) {
  Diagram d(n);
  for (unsigned i = 0; i + 1 < n; ++i) d.add_edge(i, i + 1);
  return d;
}

}  // namespace coxkit
