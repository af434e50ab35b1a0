#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace setrep {

using VertexId = std::size_t;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

struct Edge {
  VertexId u;
  VertexId v;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Simple undirected labeled graph. Immutable once built; vertex identity is
/// the index, labels are kept for I/O only.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const std::string& label(VertexId v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<VertexId> find(std::string_view label) const;

  bool adjacent(VertexId u, VertexId v) const;
  const VertexSet& neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;

  /// Edges in insertion order, each with `u` the first-listed endpoint.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adjacency_ == b.adjacency_;
  }

 private:
  friend class GraphBuilder;

  void check_vertex(VertexId v) const;

  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> index_;
  std::vector<VertexSet> adjacency_;
  std::vector<Edge> edges_;
};

/// Incremental construction of a Graph. Rejects duplicate labels, duplicate
/// edges and self-loops with DomainError.
class GraphBuilder {
 public:
  VertexId add_vertex(std::string label);
  /// Returns the id of `label`, adding the vertex on first sight.
  VertexId vertex(std::string_view label);
  void add_edge(VertexId u, VertexId v);
  void add_edge(std::string_view a, std::string_view b) { add_edge(vertex(a), vertex(b)); }
  bool has_edge(VertexId u, VertexId v) const;
  std::size_t vertex_count() const noexcept { return graph_.labels_.size(); }

  Graph build() &&;
  Graph build() const&;

 private:
  Graph graph_;
};

/// Vertices named v1..vn, all pairs adjacent.
Graph complete_graph(std::size_t n, std::string_view prefix = "v");

/// Builds a graph from `n` labels and index pairs.
Graph make_graph(std::vector<std::string> labels, const std::vector<std::pair<VertexId, VertexId>>& edges);

std::size_t degree(const Graph& g, VertexId v);
std::vector<VertexId> neighbors(const Graph& g, VertexId v);
bool is_connected(const Graph& g);

/// Parses the edge-list document: a header "n m", then m lines "a b".
/// '#'-prefixed and blank lines are skipped. Vertex order is first appearance.
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

/// Inverse of parse_graph for graphs without isolated vertices.
std::string to_edge_list(const Graph& g);

struct LineGraphMap {
  Graph base;
  Graph line;
  /// edge_to_vertex[i] is the line vertex of base edge i (base.edges() order).
  std::vector<VertexId> edge_to_vertex;
};

/// Line graph; line vertex i is base edge i, labeled "u-v".
LineGraphMap line_graph(const Graph& g);

}  // namespace setrep
