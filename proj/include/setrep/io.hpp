#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "setrep/classify.hpp"
#include "setrep/cliquecover.hpp"
#include "setrep/geometry.hpp"
#include "setrep/oracle.hpp"
#include "setrep/representation.hpp"
#include "setrep/theorems.hpp"

namespace setrep {

using Json = nlohmann::ordered_json;

/// {"points": n, "lines": [[...]]} with points numbered 1..n; planes add
/// "order".
Json to_json(const FiniteLinearSpace& s);
Json to_json(const PlaneCertificate& p);
FiniteLinearSpace fls_from_json(const Json& j);

/// {"universe": [...], "sets": {"<label>": [...]}}. Unlabeled
/// representations use "1".."n" as labels.
Json to_json(const SetRepresentation& s);
/// Sets keep document order. Throws ParseError on a malformed document.
SetRepresentation representation_from_json(const Json& j);

/// Reorders the sets of `s` to follow the vertex order of `g`, matching by
/// label. Throws DomainError when the labels are not those of g.
SetRepresentation align_to(const SetRepresentation& s, const Graph& g);

/// {"graph": "<edge list>", "cliques": [[labels]]}.
Json to_json(const CliqueCover& q);
/// "graph" holds either an inline edge list (any text with a newline) or a
/// path, resolved against `base_dir` first and then the working directory.
CliqueCover cover_from_json(const Json& j, const std::filesystem::path& base_dir = {});
/// Graph named by a "graph" field, as for covers.
Graph graph_from_field(const std::string& field, const std::filesystem::path& base_dir = {});

Json to_json(const ClassificationReport& r, const Graph& g);
Json to_json(const ThetaTauReport& r);
/// ThetaTauReport shape with provenance "oracle" plus "exhausted" and
/// "statistics".
Json to_json(const OracleResult& r, OracleCategory c);
Json to_json(const DbeReport& r);

/// Reads and parses a JSON file; ParseError on failure.
Json load_json(const std::filesystem::path& path);

}  // namespace setrep
