#include "setrep/io.hpp"

#include <fstream>
#include <sstream>
#include <unordered_map>

#include "setrep/errors.hpp"

namespace setrep {
namespace {

Json labels_of(const Graph& g, const std::vector<VertexId>& vs) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(g.label(v));
  return out;
}

std::string set_label(const SetRepresentation& s, std::size_t i) {
  return s.labels().empty() ? std::to_string(i + 1) : s.labels()[i];
}

template <typename T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field \"") + key + "\": " + e.what());
  }
}

}  // namespace

Json to_json(const FiniteLinearSpace& s) {
  Json lines = Json::array();
  for (const auto& l : s.lines) {
    Json line = Json::array();
    for (auto p : l) line.push_back(p + 1);
    lines.push_back(std::move(line));
  }
  return Json{{"points", s.points}, {"lines", std::move(lines)}};
}

Json to_json(const PlaneCertificate& p) {
  Json j = to_json(p.space);
  j["order"] = p.order;
  return j;
}

FiniteLinearSpace fls_from_json(const Json& j) {
  FiniteLinearSpace s;
  s.points = field<std::size_t>(j, "points");
  for (const auto& raw : field<std::vector<std::vector<long long>>>(j, "lines")) {
    Line l;
    for (auto p : raw) {
      if (p < 1 || static_cast<std::size_t>(p) > s.points)
        throw ParseError("point " + std::to_string(p) + " outside 1.." + std::to_string(s.points));
      l.push_back(static_cast<std::size_t>(p - 1));
    }
    s.lines.push_back(std::move(l));
  }
  return s;
}

Json to_json(const SetRepresentation& s) {
  Json sets = Json::object();
  for (std::size_t i = 0; i < s.size(); ++i) sets[set_label(s, i)] = s.set(i);
  return Json{{"universe", s.universe()}, {"sets", std::move(sets)}};
}

SetRepresentation representation_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sets") || !j.at("sets").is_object())
    throw ParseError("a representation needs an object field \"sets\"");
  std::vector<std::string> labels;
  std::vector<std::vector<int>> sets;
  for (const auto& [label, value] : j.at("sets").items()) {
    labels.push_back(label);
    try {
      sets.push_back(value.get<std::vector<int>>());
    } catch (const nlohmann::json::exception&) {
      throw ParseError("set \"" + label + "\" is not a list of integers");
    }
  }
  SetRepresentation s(std::move(sets), std::move(labels));
  if (j.contains("universe")) {
    auto universe = field<std::vector<int>>(j, "universe");
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
    if (universe != s.universe()) throw ParseError("\"universe\" is not the union of the sets");
  }
  return s;
}

SetRepresentation align_to(const SetRepresentation& s, const Graph& g) {
  if (s.size() != g.vertex_count())
    throw DomainError(std::to_string(s.size()) + " sets for " + std::to_string(g.vertex_count()) + " vertices");
  if (s.labels().empty()) return s.with_labels(g.labels());
  // Sets named "1".."n" that name no vertex are taken in vertex order.
  bool positional = true;
  for (std::size_t i = 0; i < s.size() && positional; ++i)
    positional = s.labels()[i] == std::to_string(i + 1) && !g.find(s.labels()[i]);
  if (positional) return SetRepresentation(s.sets(), g.labels());
  std::vector<std::vector<int>> sets(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto v = g.find(s.labels()[i]);
    if (!v) throw DomainError("set label '" + s.labels()[i] + "' is not a vertex of the graph");
    if (seen[*v]) throw DomainError("vertex '" + s.labels()[i] + "' has two sets");
    seen[*v] = true;
    sets[*v] = s.set(i);
  }
  return SetRepresentation(std::move(sets), g.labels());
}

Json to_json(const CliqueCover& q) {
  Json cliques = Json::array();
  for (const auto& c : q.cliques) cliques.push_back(labels_of(q.base, c));
  return Json{{"graph", to_edge_list(q.base)}, {"cliques", std::move(cliques)}};
}

Graph graph_from_field(const std::string& text, const std::filesystem::path& base_dir) {
  if (text.find('\n') != std::string::npos) return parse_graph(text);
  std::filesystem::path p(text);
  if (p.is_relative() && !base_dir.empty() && std::filesystem::exists(base_dir / p)) p = base_dir / p;
  return load_graph(p.string());
}

CliqueCover cover_from_json(const Json& j, const std::filesystem::path& base_dir) {
  CliqueCover q{graph_from_field(field<std::string>(j, "graph"), base_dir), {}};
  for (const auto& raw : field<std::vector<std::vector<std::string>>>(j, "cliques")) {
    Clique c;
    for (const auto& label : raw) {
      const auto v = q.base.find(label);
      if (!v) throw ParseError("clique names unknown vertex '" + label + "'");
      c.push_back(*v);
    }
    q.cliques.push_back(std::move(c));
  }
  return q;
}

Json to_json(const ClassificationReport& r, const Graph& g) {
  Json j;
  j["isK3"] = r.is_k3;
  j["isK4"] = r.is_k4;
  j["windmillT"] = r.windmill_t ? Json(*r.windmill_t) : Json(nullptr);
  j["is3K2JoinK1"] = r.is_3k2_join_k1;
  j["starCenter"] = r.star_center ? Json(g.label(*r.star_center)) : Json(nullptr);
  if (r.peacock) {
    Json p;
    p["kind"] = to_string(r.peacock->kind);
    p["plumeCounts"] = r.peacock->plume_counts;
    p["tailed"] = labels_of(g, r.peacock->tailed);
    p["t"] = r.peacock->fan_size ? Json(*r.peacock->fan_size) : Json(nullptr);
    j["peacock"] = std::move(p);
  } else {
    j["peacock"] = nullptr;
  }
  j["specialClass"] = r.special_class().empty() ? Json(nullptr) : Json(r.special_class());
  j["V2"] = labels_of(g, r.v2);
  Json vc = Json::array();
  for (const auto& c : r.critical)
    vc.push_back(Json{{"vertex", g.label(c.vertex)}, {"m", c.m()}, {"plumes", labels_of(g, c.plumes)}});
  j["Vc"] = std::move(vc);
  j["Vi"] = labels_of(g, r.inland);
  Json wings = Json::array();
  for (const auto& w : r.wings) wings.push_back(labels_of(g, {w.stalk, w.x, w.y}));
  j["wings"] = std::move(wings);
  Json semi = Json::array();
  for (const auto& w : r.semiwings) semi.push_back(labels_of(g, {w.non_stalk, w.u, w.v}));
  j["semiwings"] = std::move(semi);
  j["V3w"] = labels_of(g, r.v3w);
  j["gamma"] = r.gamma;
  j["gammaPrime"] = r.gamma_prime;
  return j;
}

Json to_json(const ThetaTauReport& r) {
  Json j;
  j["category"] = to_string(r.category);
  if (const auto* e = std::get_if<ThetaExact>(&r.theta)) {
    j["theta"] = Json{{"exact", e->value}};
  } else {
    j["theta"] = Json{{"oracleNeeded", std::get<ThetaOracleNeeded>(r.theta).reason}};
  }
  if (const auto* e = std::get_if<TauExact>(&r.tau)) {
    j["tau"] = Json{{"exact", e->value}};
  } else if (const auto* s = std::get_if<TauSymbolic>(&r.tau)) {
    j["tau"] = Json{{"symbolic", s->expression}};
  } else {
    j["tau"] = Json{{"unknown", std::get<TauUnknown>(r.tau).reason}};
  }
  if (r.formula_tau) j["formulaTau"] = *r.formula_tau;
  j["provenance"] = r.provenance;
  if (r.witnesses) {
    Json w = Json::array();
    for (const auto& s : *r.witnesses) w.push_back(to_json(s));
    j["witnesses"] = std::move(w);
  }
  return j;
}

Json to_json(const OracleResult& r, OracleCategory c) {
  Json j;
  j["category"] = to_string(c);
  if (r.theta) {
    j["theta"] = Json{{"exact", *r.theta}};
  } else {
    j["theta"] = Json{{"unknown", "no representation found within the budget"}};
  }
  if (r.theta && r.exhausted) {
    j["tau"] = Json{{"exact", r.classes.size()}};
  } else {
    j["tau"] = Json{{"unknown", "search stopped before the level was exhausted"}};
  }
  j["provenance"] = "oracle";
  Json w = Json::array();
  for (const auto& cl : r.classes) w.push_back(to_json(cl.representative));
  j["witnesses"] = std::move(w);
  j["exhausted"] = r.exhausted;
  j["statistics"] = Json{{"nodes", r.stats.nodes},
                         {"partitions", r.stats.partitions},
                         {"candidates", r.stats.candidates},
                         {"solutions", r.stats.solutions},
                         {"completedUniverse", r.stats.completed_universe},
                         {"seconds", r.stats.seconds},
                         {"stopReason", r.stop_reason.empty() ? Json(nullptr) : Json(r.stop_reason)}};
  return j;
}

Json to_json(const DbeReport& r) {
  return Json{{"n", r.n},
              {"minimum", r.minimum ? Json(*r.minimum) : Json(nullptr)},
              {"equalityCases", r.equality_cases},
              {"nearPencils", r.near_pencils},
              {"planes", r.planes},
              {"other", r.other},
              {"equalityClasses", r.equality_classes},
              {"confirmed", r.confirmed}};
}

Json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace setrep
