#include "coxkit/diagrammatic.hpp"

#include <algorithm>

namespace coxkit {

namespace {

RMatrix coroot_span(const Realization& h, VertexSet b) {
  std::vector<std::size_t> cols;
  for (unsigned v : b.vertices()) cols.push_back(v);
  return h.coroots.select(iota(h.dim()), cols);
}

RMatrix root_rows(const Realization& h, VertexSet b) {
  std::vector<std::size_t> rows;
  for (unsigned v : b.vertices()) rows.push_back(v);
  return h.roots.select(rows, iota(h.dim()));
}

// Basis of span(x) n span(y).
RMatrix intersect(const RMatrix& x, const RMatrix& y) {
  if (x.cols() == 0 || y.cols() == 0) return RMatrix(x.rows(), 0);
  RMatrix ker = kernel_basis(RMatrix::hstack(x, -y));
  RMatrix combo = x * ker.select(iota(x.cols()), iota(ker.cols()));
  return column_basis(combo);
}

// Basis of span(x) n ker(alpha_j, j in b).
RMatrix cut_by_roots(const Realization& h, const RMatrix& x, VertexSet b) {
  if (b.empty() || x.cols() == 0) return x;
  RMatrix ker = kernel_basis(root_rows(h, b) * x);
  return column_basis(x * ker);
}

bool contained(const RMatrix& x, const RMatrix& y) {
  return rank(RMatrix::hstack(y, x)) == rank(y);
}

std::size_t required_dim(const RMatrix& a, VertexSet b) {
  return 2 * b.size() - rank(principal_submatrix(a, b));
}

ComponentVerdict test_component(const RMatrix& full, VertexSet comp) {
  ComponentVerdict cv;
  cv.vertices = comp;
  const RMatrix a = principal_submatrix(full, comp);
  const unsigned n = comp.size();
  const Diagram dg = diagram_of(a);
  const Realization h = minimal_realization(a);
  const VertexSet all = VertexSet::range(n);
  auto relabel = [&](VertexSet local) {
    auto vs = comp.vertices();
    VertexSet g;
    for (unsigned v : local.vertices()) g = g | VertexSet::single(vs[v]);
    return g;
  };

  bool sufficient = true;
  for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n) && sufficient; ++sub) {
    VertexSet b(sub);
    if ((all - b).size() >= 2 && determinant(principal_submatrix(a, b)) == 0) sufficient = false;
  }

  if (sufficient) {
    std::map<VertexSet, RMatrix> family;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
      VertexSet b(sub);
      VertexSet rest = all - b;
      if (rest.empty()) {
        family[b] = RMatrix::identity(h.dim());
      } else if (rest.size() >= 2) {
        family[b] = coroot_span(h, b);
      } else {
        // complete h'_B to a minimal realization of A_B, inside ker alpha_i
        // when B is orthogonal to the missing vertex i
        RMatrix pool = RMatrix::identity(h.dim());
        if (dg.orthogonal(b, rest)) pool = kernel_basis(root_rows(h, rest));
        RMatrix basis = coroot_span(h, b);
        RMatrix alphas = root_rows(h, b);
        std::size_t r = rank(alphas * basis);
        for (std::size_t k = 0; k < pool.cols() && r < b.size(); ++k) {
          RMatrix cand = RMatrix::hstack(basis, pool.select(iota(pool.rows()), {k}));
          std::size_t rr = rank(alphas * cand);
          if (rr > r) {
            basis = std::move(cand);
            r = rr;
          }
        }
        family[b] = basis;
      }
    }
    if (auto v = diagrammatic_family_violation(h, family)) {
      cv.status = DiagrammaticStatus::Undetermined;
      cv.reason = "sufficient condition holds but the constructed family fails: " + *v;
    } else {
      cv.status = DiagrammaticStatus::Diagrammatic;
      cv.reason = "det(A_B) != 0 whenever |D\\B| >= 2; family {h_B} verified";
    }
    return cv;
  }

  // Upper bounds U(B) >= h_B, processed from large B to small.
  std::vector<VertexSet> order;
  for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << n); ++sub) order.emplace_back(sub);
  std::stable_sort(order.begin(), order.end(), [](VertexSet x, VertexSet y) { return x.size() > y.size(); });
  std::map<VertexSet, RMatrix> bound;
  for (VertexSet b : order) {
    RMatrix u = RMatrix::identity(h.dim());
    std::string why = "h(A)";
    if (rank(principal_submatrix(a, b)) == b.size()) {
      u = coroot_span(h, b);
      why = "h'_" + relabel(b).to_string();
    }
    for (const auto& [sup, ub] : bound)
      if (b.proper_subset_of(sup)) u = intersect(u, ub);
    VertexSet orth;
    for (unsigned v : (all - b).vertices())
      if (dg.orthogonal(b, VertexSet::single(v))) orth = orth | VertexSet::single(v);
    u = cut_by_roots(h, u, orth);
    bound[b] = u;
    const std::size_t need = required_dim(a, b);
    if (u.cols() < need || !contained(coroot_span(h, b), u)) {
      cv.status = DiagrammaticStatus::Obstructed;
      cv.witness = relabel(b);
      cv.bound_dim = u.cols();
      cv.required_dim = need;
      cv.reason = "h_" + relabel(b).to_string() + " must lie in a subspace of dimension " + std::to_string(u.cols()) +
                  " (intersection over supersets" + (orth.empty() ? "" : " and ker alpha_" + relabel(orth).to_string()) +
                  ") but needs dimension " + std::to_string(need);
      return cv;
    }
  }
  cv.status = DiagrammaticStatus::Undetermined;
  cv.reason = "sufficient condition fails and no obstruction was found";
  return cv;
}

}  // namespace

std::string to_string(DiagrammaticStatus s) {
  switch (s) {
    case DiagrammaticStatus::Diagrammatic: return "diagrammatic";
    case DiagrammaticStatus::Obstructed: return "obstructed";
    case DiagrammaticStatus::Undetermined: return "undetermined";
  }
  return "?";
}

std::optional<std::string> diagrammatic_family_violation(const Realization& h, const std::map<VertexSet, RMatrix>& family) {
  const RMatrix& a = h.cartan;
  const Diagram dg = diagram_of(a);
  for (const auto& [b, hb] : family) {
    const std::string name = "h_" + b.to_string();
    if (!contained(coroot_span(h, b), hb)) return name + " does not contain h'_B";
    if (rank(hb) != hb.cols()) return name + " basis is dependent";
    if (rank(root_rows(h, b) * hb) != b.size()) return "roots restricted to " + name + " are dependent";
    if (hb.cols() != required_dim(a, b)) return name + " has the wrong dimension";
  }
  for (const auto& [b, hb] : family)
    for (const auto& [c, hc] : family) {
      if (c.proper_subset_of(b) && !contained(hc, hb)) return "h_" + c.to_string() + " not inside h_" + b.to_string();
      if (!b.empty() && !c.empty() && dg.orthogonal(b, c) && !(root_rows(h, c) * hb).is_zero())
        return "h_" + b.to_string() + " not inside ker alpha_" + c.to_string();
    }
  return std::nullopt;
}

DiagrammaticVerdict cartan_diagrammatic_test(const RMatrix& a) {
  if (!a.is_square()) throw DimensionMismatch("cartan_diagrammatic_test needs a square matrix");
  DiagrammaticVerdict v;
  Diagram dg = diagram_of(a);
  v.status = DiagrammaticStatus::Diagrammatic;
  for (auto comp : dg.components(dg.all())) {
    v.components.push_back(test_component(a, comp));
    auto s = v.components.back().status;
    if (s == DiagrammaticStatus::Obstructed) v.status = DiagrammaticStatus::Obstructed;
    else if (s == DiagrammaticStatus::Undetermined && v.status == DiagrammaticStatus::Diagrammatic)
      v.status = DiagrammaticStatus::Undetermined;
  }
  return v;
}

}  // namespace coxkit
