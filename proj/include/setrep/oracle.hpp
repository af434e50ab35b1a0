#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "setrep/canonical.hpp"
#include "setrep/cliquecover.hpp"
#include "setrep/graph.hpp"
#include "setrep/representation.hpp"

namespace setrep {

/// s, d, a, u alone or the simple conjunctions sd, sa, sdu.
enum class OracleCategory { s, d, a, u, sd, sa, sdu };

std::string to_string(OracleCategory c);
std::optional<OracleCategory> parse_oracle_category(std::string_view name);

struct CategoryPredicate {
  bool simple = false;
  bool distinct = false;
  bool antichain = false;
  bool uniform = false;
};

CategoryPredicate predicate_of(OracleCategory c);

/// Category check on per-vertex membership masks (bit j = element j).
bool satisfies(std::span<const std::uint64_t> masks, const CategoryPredicate& pred);

struct SearchBudget {
  std::size_t max_universe = 12;
  std::optional<double> time_limit_seconds;
  std::optional<std::uint64_t> node_limit;
  /// Worker threads; 0 or 1 runs in the calling thread.
  unsigned threads = 0;
};

struct OracleStats {
  std::uint64_t nodes = 0;
  /// Edge-clique partitions (or clique multisets) reaching the completion step.
  std::uint64_t partitions = 0;
  /// Labeled representations whose category predicates were evaluated.
  std::uint64_t candidates = 0;
  /// Labeled representations passing the predicates at the reported level.
  std::uint64_t solutions = 0;
  double seconds = 0.0;
  /// Last universe size whose search ran to completion (0 if none).
  std::size_t completed_universe = 0;
};

struct OracleClass {
  CanonicalForm form;
  /// Least labeled solution (by membership masks) in the class; its sets
  /// follow the vertex order and labels of the searched graph.
  SetRepresentation representative;
};

struct OracleResult {
  /// Least universe size admitting a representation, when one was found.
  std::optional<std::size_t> theta;
  /// Classes at theta, in canonical-form order. Complete only if exhausted.
  std::vector<OracleClass> classes;
  bool exhausted = false;
  OracleStats stats;
  /// Empty, "time", "nodes" or "universe".
  std::string stop_reason;
};

/// Minimum-universe search for representations of `h` in category `c`, by
/// enumerating edge-clique partitions (simple categories) or clique multisets
/// (d, a, u alone), iterating the universe size upward.
/// Throws DomainError when h has no vertices or more than 64.
OracleResult oracle_search(const Graph& h, OracleCategory c, const SearchBudget& budget);

/// Every edge-clique partition of h with exactly p cliques. With
/// allow_trivial, singleton cliques fill the remainder as vertex multisets
/// and must cover any vertex left out; without it every clique has two or
/// more vertices. Each partition is produced once up to clique order; cliques
/// come out sorted by (size, vertices). Returns the number produced.
std::uint64_t enumerate_partitions(const Graph& h, std::size_t p, bool allow_trivial,
                                   const std::function<void(const CliqueCover&)>& visit);

struct DbeReport {
  std::size_t n = 0;
  /// Least |Q| > 1 over trivial-free edge-clique partitions of K_n.
  std::optional<std::size_t> minimum;
  /// Labeled partitions with |Q| = n, split by shape.
  std::uint64_t equality_cases = 0;
  std::uint64_t near_pencils = 0;
  std::uint64_t planes = 0;
  std::uint64_t other = 0;
  /// Isomorphism classes among the |Q| = n cases.
  std::size_t equality_classes = 0;
  /// minimum == n and every equality case is a near-pencil or a plane.
  bool confirmed = false;
};

/// Exhaustive check of the lower bound |Q| >= n for trivial-free partitions
/// of K_n with |Q| > 1. Supports 3 <= n <= 6, and n = 7 with allow_long.
DbeReport verify_dbe(std::size_t n, bool allow_long = false);

}  // namespace setrep
