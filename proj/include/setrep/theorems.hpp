#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "setrep/classify.hpp"
#include "setrep/graph.hpp"
#include "setrep/representation.hpp"

namespace setrep {

enum class Category { sd, sa, sdu };

std::string to_string(Category c);
std::optional<Category> parse_category(std::string_view name);

struct ThetaExact {
  std::size_t value;
};
struct ThetaOracleNeeded {
  std::string reason;
};
using Theta = std::variant<ThetaExact, ThetaOracleNeeded>;

struct TauExact {
  std::size_t value;
};
/// A count that depends on plane counts not known for orders >= 11,
/// e.g. "2+N_PP(133)".
struct TauSymbolic {
  std::string expression;
};
struct TauUnknown {
  std::string reason;
};
using Tau = std::variant<TauExact, TauSymbolic, TauUnknown>;

struct ThetaTauReport {
  Category category = Category::sd;
  Theta theta = ThetaOracleNeeded{};
  Tau tau = TauUnknown{};
  /// Identifier of the closed-form case applied, e.g. "linegraph.sd.gamma".
  std::string provenance;
  /// One representation per isomorphism class when they can all be built,
  /// over the vertices (and labels) of the target graph.
  std::optional<std::vector<SetRepresentation>> witnesses;
  /// Closed-form count before collapsing witness constructions that are
  /// isomorphic through a symmetry of the graph; set only when it differs
  /// from tau.
  std::optional<std::size_t> formula_tau;
};

std::optional<std::size_t> exact_theta(const ThetaTauReport& r);
std::optional<std::size_t> exact_tau(const ThetaTauReport& r);

/// Closed forms for K_n. n in {1, 2} reports oracleNeeded.
ThetaTauReport theta_tau_complete(std::size_t n, Category c);

/// Closed forms for the line graph of a connected graph g. Throws
/// DomainError for a disconnected or edgeless g.
ThetaTauReport theta_tau_linegraph(const Graph& g, Category c);

/// Representations of the line graph of g built from saturated stars and
/// singletons; vertex i of each result is edge i of g, labeled "u-v".
/// Throw TheoremNotApplicable for the excluded classes (K4, W_t, 3K2vK1,
/// stars and 1-tail peacocks for sd; K3, K4, W_t, stars and every peacock
/// for sa).
SetRepresentation witness_sd(const Graph& g);
/// One construction per subset of the 3-wing stalks, in subset order.
std::vector<SetRepresentation> witness_sd_variants(const Graph& g);
SetRepresentation witness_sa(const Graph& g);
/// Cartesian product of the per-vertex alternatives at every critical
/// vertex v with d(v) = m + 1 and m >= 2.
std::vector<SetRepresentation> witness_sa_variants(const Graph& g);

}  // namespace setrep
