#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace coxkit {

// Subset of the vertices of a diagram with at most 64 vertices.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  static constexpr VertexSet single(unsigned v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet range(unsigned n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<unsigned> vs) {
    VertexSet s;
    for (unsigned v : vs) s = s | single(v);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits_)); }
  constexpr bool contains(unsigned v) const { return (bits_ >> v) & 1u; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool proper_subset_of(VertexSet o) const { return subset_of(o) && bits_ != o.bits_; }
  constexpr bool disjoint(VertexSet o) const { return (bits_ & o.bits_) == 0; }
  constexpr unsigned lowest() const { return static_cast<unsigned>(std::countr_zero(bits_)); }
  std::vector<unsigned> vertices() const;

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet a, VertexSet b) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

  // "{0,2}" style, vertex indices ascending.
  std::string to_string() const;

 private:
  std::uint64_t bits_ = 0;
};

// Simple undirected graph on vertices 0..n-1 (n <= 64).
class Diagram {
 public:
  Diagram() = default;
  explicit Diagram(unsigned n);
  Diagram(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& edges);
  // Diagram of an n x n integer-valued matrix: i -- j unless a_ij = a_ji = 0.
  template <class Matrix>
  static Diagram of_matrix(const Matrix& a, unsigned n) {
    Diagram d(n);
    for (unsigned i = 0; i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j)
        if (a(i, j) != 0 || a(j, i) != 0) d.add_edge(i, j);
    return d;
  }

  unsigned size() const { return n_; }
  VertexSet all() const { return VertexSet::range(n_); }
  bool adjacent(unsigned i, unsigned j) const { return adj_.at(i).contains(j); }
  VertexSet neighbors(unsigned i) const { return adj_.at(i); }
  std::vector<std::pair<unsigned, unsigned>> edges() const;
  void add_edge(unsigned i, unsigned j);

  bool connected(VertexSet s) const;
  // Connected components of the induced subgraph, ordered by least vertex.
  std::vector<VertexSet> components(VertexSet s) const;
  // No vertex of a is joined to a vertex of b (and they are disjoint).
  bool orthogonal(VertexSet a, VertexSet b) const;
  // One contains the other, or they are orthogonal.
  bool compatible(VertexSet a, VertexSet b) const;
  // All nonempty connected subsets of s, ascending by mask.
  std::vector<VertexSet> connected_subsets(VertexSet s) const;
  // Subgraph induced on s, relabelled 0..|s|-1 in increasing order.
  Diagram induced(VertexSet s) const;

  friend bool operator==(const Diagram&, const Diagram&) = default;

 private:
  unsigned n_ = 0;
  std::vector<VertexSet> adj_;
};

// Path diagram A_n.
Diagram path_diagram(unsigned n);

}  // namespace coxkit
