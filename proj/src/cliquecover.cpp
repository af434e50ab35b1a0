#include "setrep/cliquecover.hpp"

#include <algorithm>
#include <map>

#include "setrep/errors.hpp"

namespace setrep {
namespace {

void check_clique(const Graph& g, const Clique& c, std::size_t index) {
  if (c.empty()) throw InvalidClique("clique " + std::to_string(index + 1) + " is empty");
  for (std::size_t a = 0; a < c.size(); ++a) {
    if (c[a] >= g.vertex_count())
      throw InvalidClique("clique " + std::to_string(index + 1) + " names vertex index " + std::to_string(c[a]) +
                          " out of range");
    for (std::size_t b = a + 1; b < c.size(); ++b) {
      if (c[a] == c[b])
        throw InvalidClique("clique " + std::to_string(index + 1) + " repeats vertex '" + g.label(c[a]) + "'");
      if (!g.adjacent(c[a], c[b]))
        throw InvalidClique("clique " + std::to_string(index + 1) + " contains non-edge '" + g.label(c[a]) + " " +
                            g.label(c[b]) + "'");
    }
  }
}

}  // namespace

CoverValidation validate_cover(const Graph& g, const CliqueCover& q) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> vertex_hits(n, 0);
  std::map<std::pair<VertexId, VertexId>, std::size_t> edge_hits;
  CoverValidation out;
  for (std::size_t i = 0; i < q.cliques.size(); ++i) {
    const auto& c = q.cliques[i];
    check_clique(g, c, i);
    if (c.size() == 1) ++out.trivial_count;
    for (std::size_t a = 0; a < c.size(); ++a) {
      ++vertex_hits[c[a]];
      for (std::size_t b = a + 1; b < c.size(); ++b) ++edge_hits[std::minmax(c[a], c[b])];
    }
  }

  out.is_cover = true;
  out.is_partition = true;
  for (VertexId v = 0; v < n; ++v) {
    if (vertex_hits[v] == 0) {
      out.is_cover = out.is_partition = false;
      out.offense = CoverValidation::Offense::uncovered_vertex;
      out.offending = std::pair{v, v};
      return out;
    }
  }
  for (const auto& e : g.edges()) {
    const auto key = std::minmax(e.u, e.v);
    const auto it = edge_hits.find(key);
    const std::size_t hits = it == edge_hits.end() ? 0 : it->second;
    if (hits == 0) {
      out.is_cover = out.is_partition = false;
      out.offense = CoverValidation::Offense::uncovered_edge;
      out.offending = std::pair{e.u, e.v};
      return out;
    }
    if (hits > 1 && out.is_partition) {
      out.is_partition = false;
      out.offense = CoverValidation::Offense::doubly_covered_edge;
      out.offending = std::pair{e.u, e.v};
    }
  }
  return out;
}

SetRepresentation egp_set(const CliqueCover& q) {
  const auto& g = q.base;
  const auto check = validate_cover(g, q);
  if (check.offense == CoverValidation::Offense::uncovered_vertex)
    throw EmptySetError("vertex '" + g.label(check.offending->first) + "' lies in no clique");
  if (check.offense == CoverValidation::Offense::uncovered_edge)
    throw DomainError("edge '" + g.label(check.offending->first) + " " + g.label(check.offending->second) +
                      "' is not covered");
  std::vector<std::vector<int>> sets(g.vertex_count());
  for (std::size_t j = 0; j < q.cliques.size(); ++j)
    for (VertexId v : q.cliques[j]) sets[v].push_back(static_cast<int>(j + 1));
  return SetRepresentation(std::move(sets), g.labels());
}

CliqueCover egp_cover(const SetRepresentation& s, const Graph& g) {
  const auto r = represents(s, g);
  if (!r) {
    const auto [i, j] = *r.witness;
    throw RepresentationMismatch("sets of '" + g.label(i) + "' and '" + g.label(j) + "' " +
                                 (g.adjacent(i, j) ? "are disjoint but the vertices are adjacent"
                                                   : "intersect but the vertices are not adjacent"));
  }
  CliqueCover q{g, {}};
  for (int element : s.universe()) {
    Clique c;
    for (VertexId v = 0; v < s.size(); ++v)
      if (std::binary_search(s.set(v).begin(), s.set(v).end(), element)) c.push_back(v);
    q.cliques.push_back(std::move(c));
  }
  return q;
}

CliqueCover canonical_sort(CliqueCover q) {
  for (auto& c : q.cliques) std::sort(c.begin(), c.end());
  std::sort(q.cliques.begin(), q.cliques.end(), [](const Clique& a, const Clique& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return q;
}

}  // namespace setrep
