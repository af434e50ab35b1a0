#include "setrep/graph.hpp"

#include <fstream>
#include <sstream>

#include "setrep/errors.hpp"

namespace setrep {

void Graph::check_vertex(VertexId v) const {
  if (v >= labels_.size()) {
    throw DomainError("vertex index " + std::to_string(v) + " out of range (graph has " +
                      std::to_string(labels_.size()) + " vertices)");
  }
}

const std::string& Graph::label(VertexId v) const {
  check_vertex(v);
  return labels_[v];
}

std::optional<VertexId> Graph::find(std::string_view label) const {
  auto it = index_.find(std::string(label));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool Graph::adjacent(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return adjacency_[u].test(v);
}

const VertexSet& Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::size_t Graph::degree(VertexId v) const {
  check_vertex(v);
  return adjacency_[v].count();
}

VertexId GraphBuilder::add_vertex(std::string label) {
  if (label.empty()) throw DomainError("empty vertex label");
  if (graph_.index_.contains(label)) throw DomainError("duplicate vertex label '" + label + "'");
  const VertexId id = graph_.labels_.size();
  graph_.index_.emplace(label, id);
  graph_.labels_.push_back(std::move(label));
  for (auto& row : graph_.adjacency_) row.push_back(false);
  graph_.adjacency_.emplace_back(id + 1);
  return id;
}

VertexId GraphBuilder::vertex(std::string_view label) {
  if (auto id = graph_.find(label)) return *id;
  return add_vertex(std::string(label));
}

bool GraphBuilder::has_edge(VertexId u, VertexId v) const { return graph_.adjacent(u, v); }

void GraphBuilder::add_edge(VertexId u, VertexId v) {
  graph_.check_vertex(u);
  graph_.check_vertex(v);
  if (u == v) throw DomainError("self-loop on '" + graph_.labels_[u] + "'");
  if (graph_.adjacency_[u].test(v)) {
    throw DomainError("duplicate edge '" + graph_.labels_[u] + " " + graph_.labels_[v] + "'");
  }
  graph_.adjacency_[u].set(v);
  graph_.adjacency_[v].set(u);
  graph_.edges_.push_back({u, v});
}

Graph GraphBuilder::build() && { return std::move(graph_); }
Graph GraphBuilder::build() const& { return graph_; }

Graph complete_graph(std::size_t n, std::string_view prefix) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_vertex(std::string(prefix) + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b.add_edge(i, j);
  return std::move(b).build();
}

Graph make_graph(std::vector<std::string> labels, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  GraphBuilder b;
  for (auto& l : labels) b.add_vertex(std::move(l));
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

std::size_t degree(const Graph& g, VertexId v) { return g.degree(v); }

std::vector<VertexId> neighbors(const Graph& g, VertexId v) {
  std::vector<VertexId> out;
  const auto& row = g.neighbors(v);
  for (auto i = row.find_first(); i != VertexSet::npos; i = row.find_next(i)) out.push_back(i);
  return out;
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  VertexSet seen(n);
  std::vector<VertexId> stack{0};
  seen.set(0);
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    VertexSet fresh = g.neighbors(v) - seen;
    seen |= fresh;
    for (auto i = fresh.find_first(); i != VertexSet::npos; i = fresh.find_next(i)) stack.push_back(i);
  }
  return seen.all();
}

namespace {

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

bool parse_count(const std::string& s, std::size_t& out) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) return false;
  try {
    out = std::stoull(s);
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::size_t lineno = 0;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::size_t header_line = 0;
  std::size_t edges_seen = 0;
  GraphBuilder b;

  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto tok = tokens(line);
    if (tok.size() != 2) throw ParseError(lineno, "expected two tokens, got " + std::to_string(tok.size()));

    if (!header) {
      std::size_t n = 0, m = 0;
      if (!parse_count(tok[0], n) || !parse_count(tok[1], m))
        throw ParseError(lineno, "header must be \"n m\" with nonnegative integers");
      header = {n, m};
      header_line = lineno;
      continue;
    }
    if (edges_seen == header->second)
      throw ParseError(lineno, "more edge lines than the declared " + std::to_string(header->second));
    try {
      const VertexId u = b.vertex(tok[0]);
      const VertexId v = b.vertex(tok[1]);
      if (u == v) throw ParseError(lineno, "self-loop on '" + tok[0] + "'");
      if (b.has_edge(u, v)) throw ParseError(lineno, "duplicate edge '" + tok[0] + " " + tok[1] + "'");
      b.add_edge(u, v);
    } catch (const DomainError& e) {
      throw ParseError(lineno, e.what());
    }
    if (b.vertex_count() > header->first)
      throw ParseError(lineno, "more distinct vertices than the declared " + std::to_string(header->first));
    ++edges_seen;
  }
  if (!header) throw ParseError(lineno == 0 ? 1 : lineno, "missing \"n m\" header");
  if (edges_seen != header->second)
    throw ParseError(header_line, "declared " + std::to_string(header->second) + " edges, found " +
                                      std::to_string(edges_seen));
  if (b.vertex_count() != header->first)
    throw ParseError(header_line, "declared " + std::to_string(header->first) + " vertices, found " +
                                      std::to_string(b.vertex_count()));
  return std::move(b).build();
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
  return out.str();
}

LineGraphMap line_graph(const Graph& g) {
  if (g.edge_count() == 0) throw DomainError("line graph of an edgeless graph");
  const auto& es = g.edges();
  GraphBuilder b;
  std::vector<VertexId> edge_to_vertex;
  edge_to_vertex.reserve(es.size());
  for (const auto& e : es) edge_to_vertex.push_back(b.add_vertex(g.label(e.u) + "-" + g.label(e.v)));
  for (std::size_t i = 0; i < es.size(); ++i) {
    for (std::size_t j = i + 1; j < es.size(); ++j) {
      const auto& a = es[i];
      const auto& c = es[j];
      if (a.u == c.u || a.u == c.v || a.v == c.u || a.v == c.v) b.add_edge(i, j);
    }
  }
  return {g, std::move(b).build(), std::move(edge_to_vertex)};
}

}  // namespace setrep
