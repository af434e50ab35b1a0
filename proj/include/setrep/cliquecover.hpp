#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "setrep/graph.hpp"
#include "setrep/representation.hpp"

namespace setrep {

using Clique = std::vector<VertexId>;

/// Ordered multiset of cliques of `base`. Singletons (trivial cliques) and
/// duplicate cliques are allowed.
struct CliqueCover {
  Graph base;
  std::vector<Clique> cliques;
};

struct CoverValidation {
  enum class Offense { none, uncovered_vertex, uncovered_edge, doubly_covered_edge };

  bool is_cover = false;
  bool is_partition = false;
  std::size_t trivial_count = 0;
  Offense offense = Offense::none;
  /// First uncovered or doubly covered edge; for an uncovered vertex both
  /// entries name it.
  std::optional<std::pair<VertexId, VertexId>> offending;
};

/// Exact cover/partition flags. Throws InvalidClique when a clique contains a
/// non-adjacent pair, a repeated vertex, or an out-of-range vertex.
CoverValidation validate_cover(const Graph& g, const CliqueCover& q);

/// S_i = indices (1-based) of the cliques containing vertex i. Throws
/// EmptySetError when a vertex lies in no clique, DomainError when an edge is
/// not covered.
SetRepresentation egp_set(const CliqueCover& q);

/// Q_j = vertices whose set contains the j-th universe element (sorted).
/// Throws RepresentationMismatch naming a violating pair when `s` does not
/// represent `g`.
CliqueCover egp_cover(const SetRepresentation& s, const Graph& g);

/// Cliques sorted by (size, vertex list), each clique sorted.
CliqueCover canonical_sort(CliqueCover q);

}  // namespace setrep
