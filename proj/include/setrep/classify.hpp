#pragma once

#include <optional>
#include <string>
#include <vector>

#include "setrep/graph.hpp"

namespace setrep {

enum class PeacockKind { tp1, tp2, tpd1, tpd2 };

std::string to_string(PeacockKind k);

struct Peacock {
  PeacockKind kind;
  /// Plume count per tailed vertex, largest first.
  std::vector<std::size_t> plume_counts;
  /// Tailed vertices, aligned with plume_counts.
  std::vector<VertexId> tailed;
  /// Number of degree-2 apexes for diamond-backs (the t of W_t).
  std::optional<std::size_t> fan_size;
};

struct CriticalVertex {
  VertexId vertex;
  /// Degree-1 neighbors ("plumes") of the vertex, in vertex order.
  std::vector<VertexId> plumes;

  std::size_t m() const noexcept { return plumes.size(); }
};

/// Triangle whose stalk alone has degree > 2; x and y have degree 2.
struct Wing {
  VertexId stalk, x, y;
};

/// Triangle with exactly one degree-2 vertex.
struct Semiwing {
  VertexId non_stalk, u, v;
};

struct ClassificationReport {
  bool is_k3 = false;
  bool is_k4 = false;
  /// t for G = W_t = tK1 ∨ K2, t >= 2.
  std::optional<std::size_t> windmill_t;
  bool is_3k2_join_k1 = false;
  /// Center of a star K_{1,n}.
  std::optional<VertexId> star_center;
  std::optional<Peacock> peacock;

  std::vector<VertexId> v2;
  std::vector<CriticalVertex> critical;
  std::vector<VertexId> inland;
  std::vector<Wing> wings;
  std::vector<Semiwing> semiwings;
  std::vector<VertexId> v3w;
  std::size_t gamma = 0;
  std::size_t gamma_prime = 0;

  /// Name of the special class the graph falls in ("K3", "K4", "W2", "3K2vK1",
  /// "star", "TP1", ...), or empty for a generic graph.
  std::string special_class() const;
};

/// Requires a connected graph with at least one edge (DomainError otherwise).
ClassificationReport classify(const Graph& g);

std::vector<Wing> find_wings(const Graph& g);
std::vector<Semiwing> find_semiwings(const Graph& g);

}  // namespace setrep
