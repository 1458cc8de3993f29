#pragma once

#include <map>
#include <string>
#include <vector>

#include "coxkit/realization.hpp"

namespace coxkit {

enum class DiagrammaticStatus { Diagrammatic, Obstructed, Undetermined };
std::string to_string(DiagrammaticStatus s);

// Per indecomposable component of A.
struct ComponentVerdict {
  VertexSet vertices;
  DiagrammaticStatus status = DiagrammaticStatus::Undetermined;
  // Diagrammatic: the family {h_B} was built and checked; Obstructed: the
  // subdiagram B' whose forced upper bound is too small.
  std::string reason;
  VertexSet witness;
  std::size_t bound_dim = 0;
  std::size_t required_dim = 0;
};

struct DiagrammaticVerdict {
  DiagrammaticStatus status = DiagrammaticStatus::Undetermined;
  std::vector<ComponentVerdict> components;
};

// g(A) is Cartan diagrammatic iff each indecomposable block is. For each
// block: det(A_B) != 0 whenever |D \ B| >= 2 is sufficient (and the family
// {h_B} is then constructed and verified); otherwise forced upper bounds
// on h_B are propagated through inclusions and orthogonality, and a bound
// that is too small proves an obstruction.
DiagrammaticVerdict cartan_diagrammatic_test(const RMatrix& a);

// Conditions (a)-(e) for a family of subspaces h_B of the minimal realization
// of A, indexed by vertex sets; each value is a basis (dim x k).
std::optional<std::string> diagrammatic_family_violation(const Realization& h, const std::map<VertexSet, RMatrix>& family);

}  // namespace coxkit
