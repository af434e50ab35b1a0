#include "setrep/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iomanip>

#include <CLI11.hpp>

#include "setrep/canonical.hpp"
#include "setrep/errors.hpp"
#include "setrep/io.hpp"

namespace setrep {
namespace {

namespace fs = std::filesystem;

struct BudgetFlags {
  std::size_t max_universe = 12;
  double time_limit = 60.0;
  std::optional<std::uint64_t> node_limit;

  void attach(CLI::App& cmd) {
    cmd.add_option("--max-universe", max_universe, "Largest universe size the oracle tries")->capture_default_str();
    cmd.add_option("--time-limit", time_limit, "Oracle wall-clock limit in seconds")->capture_default_str();
    cmd.add_option("--node-limit", node_limit, "Oracle search-node limit");
  }

  SearchBudget budget() const {
    SearchBudget b;
    b.max_universe = max_universe;
    b.time_limit_seconds = time_limit;
    b.node_limit = node_limit;
    if (const char* env = std::getenv("SETREP_THREADS")) {
      try {
        b.threads = static_cast<unsigned>(std::stoul(env));
      } catch (const std::exception&) {
        throw DomainError(std::string("SETREP_THREADS must be a nonnegative integer, got '") + env + "'");
      }
    }
    return b;
  }
};

std::string join(const Graph& g, const std::vector<VertexId>& vs) {
  if (vs.empty()) return "-";
  std::string s;
  for (auto v : vs) s += (s.empty() ? "" : " ") + g.label(v);
  return s;
}

std::string set_text(const std::vector<int>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

void print_rep(std::ostream& out, const SetRepresentation& s, const std::string& indent) {
  for (std::size_t i = 0; i < s.size(); ++i)
    out << indent << (s.labels().empty() ? std::to_string(i + 1) : s.labels()[i]) << ": " << set_text(s.set(i))
        << '\n';
}

std::string theta_text(const Theta& t) {
  if (const auto* e = std::get_if<ThetaExact>(&t)) return std::to_string(e->value);
  return "oracle needed (" + std::get<ThetaOracleNeeded>(t).reason + ")";
}

std::string tau_text(const Tau& t) {
  if (const auto* e = std::get_if<TauExact>(&t)) return std::to_string(e->value);
  if (const auto* s = std::get_if<TauSymbolic>(&t)) return s->expression;
  return "unknown (" + std::get<TauUnknown>(t).reason + ")";
}

void print_classification(std::ostream& out, const ClassificationReport& r, const Graph& g) {
  out << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
  out << "class: " << (r.special_class().empty() ? "generic" : r.special_class()) << '\n';
  if (r.peacock) {
    out << "peacock plumes:";
    for (std::size_t i = 0; i < r.peacock->tailed.size(); ++i)
      out << ' ' << g.label(r.peacock->tailed[i]) << '=' << r.peacock->plume_counts[i];
    out << '\n';
  }
  out << "V2: " << join(g, r.v2) << '\n';
  out << "Vc:";
  if (r.critical.empty()) out << " -";
  for (const auto& c : r.critical) out << ' ' << g.label(c.vertex) << "(m=" << c.m() << ')';
  out << '\n';
  out << "Vi: " << join(g, r.inland) << '\n';
  out << "wings:";
  if (r.wings.empty()) out << " -";
  for (const auto& w : r.wings) out << ' ' << g.label(w.stalk) << g.label(w.x) << g.label(w.y);
  out << '\n';
  out << "semiwings:";
  if (r.semiwings.empty()) out << " -";
  for (const auto& w : r.semiwings) out << ' ' << g.label(w.non_stalk) << g.label(w.u) << g.label(w.v);
  out << '\n';
  out << "V3w: " << join(g, r.v3w) << '\n';
  out << "gamma: " << r.gamma << "  gamma': " << r.gamma_prime << '\n';
}

void print_report(std::ostream& out, const ThetaTauReport& r) {
  out << to_string(r.category) << ": theta " << theta_text(r.theta) << ", tau " << tau_text(r.tau);
  if (r.formula_tau) out << " (closed form counts " << *r.formula_tau << " before symmetry)";
  out << " [" << r.provenance << "]\n";
}

void print_oracle(std::ostream& out, const OracleResult& r, OracleCategory c, const std::string& indent = "") {
  out << indent << "oracle " << to_string(c) << ": ";
  if (r.theta) {
    out << "theta " << *r.theta << ", " << r.classes.size() << " class" << (r.classes.size() == 1 ? "" : "es");
    out << (r.exhausted ? " (exhausted)" : " (incomplete: " + r.stop_reason + " limit)");
  } else {
    out << "no representation found (" << r.stop_reason << " limit)";
  }
  out << ", " << r.stats.nodes << " nodes, " << std::fixed << std::setprecision(3) << r.stats.seconds << " s\n";
  out.unsetf(std::ios::floatfield);
  for (std::size_t i = 0; i < r.classes.size(); ++i) {
    out << indent << "class " << i + 1 << ":\n";
    print_rep(out, r.classes[i].representative, indent + "  ");
  }
}

OracleCategory oracle_category(Category c) {
  switch (c) {
    case Category::sd: return OracleCategory::sd;
    case Category::sa: return OracleCategory::sa;
    case Category::sdu: return OracleCategory::sdu;
  }
  return OracleCategory::sd;
}

std::vector<Category> categories(const std::string& sel) {
  if (sel == "all") return {Category::sd, Category::sa, Category::sdu};
  const auto c = parse_category(sel);
  if (!c) throw DomainError("unknown category '" + sel + "' (expected sd, sa, sdu or all)");
  return {*c};
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

int cmd_analyze(const std::string& path, const std::string& category, bool json, bool use_oracle,
                const BudgetFlags& flags, std::ostream& out) {
  const Graph g = load_graph(path);
  const auto cls = classify(g);
  const auto cats = categories(category);
  Json reports = Json::array();
  if (!json) print_classification(out, cls, g);
  bool any_exact = false;
  bool incomplete = false;
  std::optional<LineGraphMap> lg;
  for (auto c : cats) {
    const auto r = theta_tau_linegraph(g, c);
    Json j = to_json(r);
    if (!json) print_report(out, r);
    if (exact_theta(r)) {
      any_exact = true;
    } else if (use_oracle) {
      if (!lg) lg = line_graph(g);
      const auto o = oracle_search(lg->line, oracle_category(c), flags.budget());
      incomplete = incomplete || !o.exhausted;
      j["oracle"] = to_json(o, oracle_category(c));
      if (!json) print_oracle(out, o, oracle_category(c), "  ");
    }
    reports.push_back(std::move(j));
  }
  if (json) emit(out, Json{{"classification", to_json(cls, g)}, {"reports", std::move(reports)}});
  if (incomplete) return exit_budget;
  if (!any_exact && !use_oracle) return exit_not_applicable;
  return exit_ok;
}

int cmd_linegraph(const std::string& path, bool json, std::ostream& out) {
  const Graph g = load_graph(path);
  const auto lg = line_graph(g);
  if (!json) {
    out << to_edge_list(lg.line);
    return exit_ok;
  }
  Json vertices = Json::array();
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    vertices.push_back(Json{{"vertex", lg.line.label(lg.edge_to_vertex[i])},
                            {"edge", Json::array({g.label(e.u), g.label(e.v)})}});
  }
  emit(out, Json{{"graph", to_edge_list(lg.line)}, {"vertices", std::move(vertices)}});
  return exit_ok;
}

int cmd_witness(const std::string& path, const std::string& category, bool variants, bool json,
                std::ostream& out, std::ostream& err) {
  const Graph g = load_graph(path);
  const auto c = parse_category(category);
  if (!c || *c == Category::sdu) throw DomainError("witness supports the categories sd and sa");
  std::vector<SetRepresentation> reps;
  try {
    if (*c == Category::sd) {
      reps = variants ? witness_sd_variants(g) : std::vector{witness_sd(g)};
    } else {
      reps = variants ? witness_sa_variants(g) : std::vector{witness_sa(g)};
    }
  } catch (const TheoremNotApplicable& e) {
    err << e.what() << ": no closed-form witness for this class; try `setrep oracle --line-graph-of " << path
        << " --category " << category << "`\n";
    return exit_not_applicable;
  }
  const std::string graph = to_edge_list(line_graph(g).line);
  if (json) {
    auto with_graph = [&](const SetRepresentation& s) {
      Json j = to_json(s);
      j["graph"] = graph;
      return j;
    };
    if (!variants) {
      emit(out, with_graph(reps.front()));
    } else {
      Json list = Json::array();
      for (const auto& s : reps) list.push_back(with_graph(s));
      emit(out, list);
    }
    return exit_ok;
  }
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (variants) out << "variant " << i + 1 << ":\n";
    out << (variants ? "  " : "") << "universe size " << reps[i].universe_size() << '\n';
    print_rep(out, reps[i], variants ? "  " : "");
  }
  return exit_ok;
}

int cmd_verify(const std::string& graph_path, const std::string& rep_path, bool of_line, bool json,
               std::ostream& out) {
  const Graph g = of_line ? line_graph(load_graph(graph_path)).line : load_graph(graph_path);
  const auto raw = representation_from_json(load_json(rep_path));
  const auto flags = category_flags(raw);
  std::optional<SetRepresentation> rep;
  std::string mismatch;
  try {
    rep = align_to(raw, g);
  } catch (const DomainError& e) {
    mismatch = e.what();
  }
  if (!rep) {
    if (json) {
      emit(out, Json{{"represents", false},
                     {"witness", nullptr},
                     {"reason", mismatch},
                     {"universeSize", raw.universe_size()},
                     {"flags",
                      Json{{"simple", flags.simple},
                           {"distinct", flags.distinct},
                           {"antichain", flags.antichain},
                           {"uniform", flags.uniform}}}});
    } else {
      out << "represents: false (" << mismatch << ")\nuniverse size: " << raw.universe_size() << '\n';
      out << std::boolalpha << "simple: " << flags.simple << "\ndistinct: " << flags.distinct << "\nantichain: " << flags.antichain
          << "\nuniform: " << flags.uniform << '\n';
    }
    return exit_ok;
  }
  const auto ok = represents(*rep, g);
  if (json) {
    Json j{{"represents", ok.ok},
           {"witness", ok.witness ? Json::array({g.label(ok.witness->first), g.label(ok.witness->second)})
                                  : Json(nullptr)},
           {"universeSize", rep->universe_size()},
           {"flags",
            Json{{"simple", flags.simple},
                 {"distinct", flags.distinct},
                 {"antichain", flags.antichain},
                 {"uniform", flags.uniform}}}};
    emit(out, j);
    return exit_ok;
  }
  out << "represents: " << (ok.ok ? "true" : "false");
  if (ok.witness) {
    const auto [i, j] = *ok.witness;
    out << " (" << g.label(i) << ", " << g.label(j) << ": "
        << (g.adjacent(i, j) ? "adjacent but disjoint" : "not adjacent but intersecting") << ')';
  }
  out << "\nuniverse size: " << rep->universe_size() << '\n';
  out << std::boolalpha << "simple: " << flags.simple << "\ndistinct: " << flags.distinct << "\nantichain: " << flags.antichain
      << "\nuniform: " << flags.uniform << '\n';
  return exit_ok;
}

int cmd_oracle(const std::string& path, const std::string& line_of, const std::string& category, bool json,
               const BudgetFlags& flags, std::ostream& out) {
  if (path.empty() == line_of.empty()) throw DomainError("give either a graph file or --line-graph-of");
  const auto c = parse_oracle_category(category);
  if (!c) throw DomainError("unknown category '" + category + "' (expected s, d, a, u, sd, sa or sdu)");
  const Graph h = path.empty() ? line_graph(load_graph(line_of)).line : load_graph(path);
  const auto r = oracle_search(h, *c, flags.budget());
  if (json) {
    emit(out, to_json(r, *c));
  } else {
    print_oracle(out, r, *c);
  }
  return r.exhausted ? exit_ok : exit_budget;
}

int cmd_planes(std::optional<int> order, std::optional<std::size_t> punctured, std::optional<std::size_t> pencil,
               std::ostream& out) {
  if (pencil) {
    if (order || punctured) throw DomainError("--near-pencil cannot be combined with --order or --puncture");
    emit(out, to_json(near_pencil(*pencil)));
    return exit_ok;
  }
  if (!order) throw DomainError("planes needs --order (or --near-pencil)");
  const auto plane = projective_plane(*order);
  if (!punctured || *punctured == 0) {
    emit(out, to_json(plane));
    return exit_ok;
  }
  // Removes the last h points.
  std::vector<std::size_t> removed;
  for (std::size_t i = 0; i < *punctured; ++i) removed.push_back(plane.space.points - 1 - i);
  emit(out, to_json(puncture(plane, removed)));
  return exit_ok;
}

int cmd_egp(const std::string& to_set, const std::string& to_cover, const std::string& graph_path,
            std::ostream& out) {
  if (to_set.empty() == to_cover.empty()) throw DomainError("egp needs exactly one of --to-set and --to-cover");
  if (!to_set.empty()) {
    const Json j = load_json(to_set);
    const auto q = cover_from_json(j, fs::path(to_set).parent_path());
    Json rep = to_json(egp_set(q));
    rep["graph"] = to_edge_list(q.base);
    emit(out, rep);
    return exit_ok;
  }
  const Json j = load_json(to_cover);
  Graph g;
  if (!graph_path.empty()) {
    g = load_graph(graph_path);
  } else if (j.contains("graph") && j.at("graph").is_string()) {
    g = graph_from_field(j.at("graph").get<std::string>(), fs::path(to_cover).parent_path());
  } else {
    throw DomainError("the representation has no \"graph\" field; pass --graph");
  }
  const auto rep = align_to(representation_from_json(j), g);
  emit(out, to_json(egp_cover(rep, g)));
  return exit_ok;
}

int cmd_dbe(std::size_t n, bool allow_long, bool json, std::ostream& out) {
  const auto r = verify_dbe(n, allow_long);
  if (json) {
    emit(out, to_json(r));
    return exit_ok;
  }
  out << "K" << n << ": minimum " << (r.minimum ? std::to_string(*r.minimum) : "-") << "; " << r.equality_cases
      << " equality cases (" << r.near_pencils << " near-pencil, " << r.planes << " plane, " << r.other
      << " other) in " << r.equality_classes << " class" << (r.equality_classes == 1 ? "" : "es") << '\n';
  if (r.confirmed) {
    out << (r.planes == 0 ? "minimum " + std::to_string(n) + "; all equality cases near-pencil"
                          : "minimum " + std::to_string(n) + "; equality cases are near-pencils and planes")
        << '\n';
  } else {
    out << "NOT confirmed\n";
  }
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum simple set representations of line graphs and complete graphs", "setrep"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable JSON output");

  std::string graph, category = "all", rep, line_of, to_set, to_cover, egp_graph;
  bool use_oracle = false, variants = false, allow_long = false, of_line = false;
  std::optional<int> order;
  std::optional<std::size_t> punctured, pencil;
  std::size_t dbe_n = 0;
  BudgetFlags budget;

  auto* analyze = app.add_subcommand("analyze", "Classify G and report theta/tau of its line graph");
  analyze->add_option("graph", graph, "Edge-list file")->required();
  analyze->add_option("--category", category, "sd, sa, sdu or all")->capture_default_str();
  analyze->add_flag("--oracle", use_oracle, "Run the oracle where no closed form gives theta");
  analyze->add_flag("--json", json, "JSON output");
  budget.attach(*analyze);

  auto* linegraph = app.add_subcommand("linegraph", "Print the line graph as an edge list");
  linegraph->add_option("graph", graph, "Edge-list file")->required();
  linegraph->add_flag("--json", json, "JSON output");

  auto* witness = app.add_subcommand("witness", "Build minimum representations from the closed forms");
  witness->add_option("graph", graph, "Edge-list file")->required();
  witness->add_option("--category", category, "sd or sa")->required();
  witness->add_flag("--variants", variants, "Every construction instead of one");
  witness->add_flag("--json", json, "JSON output");

  auto* verify = app.add_subcommand("verify", "Check a representation against a graph");
  verify->add_option("graph", graph, "Edge-list file")->required();
  verify->add_option("representation", rep, "Representation JSON file")->required();
  verify->add_flag("--line-graph", of_line, "Check against the line graph of the given graph");
  verify->add_flag("--json", json, "JSON output");

  auto* oracle = app.add_subcommand("oracle", "Exhaustive minimum-universe search");
  oracle->add_option("graph", graph, "Edge-list file of the represented graph");
  oracle->add_option("--line-graph-of", line_of, "Search the line graph of this edge-list file");
  oracle->add_option("--category", category, "s, d, a, u, sd, sa or sdu")->default_val("sd");
  oracle->add_flag("--json", json, "JSON output");
  budget.attach(*oracle);

  auto* planes = app.add_subcommand("planes", "Projective planes, punctured planes and near-pencils as JSON");
  planes->add_option("--order", order, "Plane order q");
  planes->add_option("--puncture", punctured, "Remove the last h points (h <= 2)");
  planes->add_option("--near-pencil", pencil, "Near-pencil on n points instead of a plane");

  auto* egp = app.add_subcommand("egp", "Convert between clique covers and set representations");
  egp->add_option("--to-set", to_set, "Cover JSON file");
  egp->add_option("--to-cover", to_cover, "Representation JSON file");
  egp->add_option("--graph", egp_graph, "Graph for --to-cover when the file has no \"graph\" field");

  auto* dbe = app.add_subcommand("dbe", "Exhaustive De Bruijn-Erdos check on K_n");
  dbe->add_option("--n", dbe_n, "Number of points")->required();
  dbe->add_flag("--long", allow_long, "Allow n = 7");
  dbe->add_flag("--json", json, "JSON output");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input_error;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(graph, category, json, use_oracle, budget, out);
    if (linegraph->parsed()) return cmd_linegraph(graph, json, out);
    if (witness->parsed()) return cmd_witness(graph, category, variants, json, out, err);
    if (verify->parsed()) return cmd_verify(graph, rep, of_line, json, out);
    if (oracle->parsed()) return cmd_oracle(graph, line_of, category, json, budget, out);
    if (planes->parsed()) return cmd_planes(order, punctured, pencil, out);
    if (egp->parsed()) return cmd_egp(to_set, to_cover, egp_graph, out);
    if (dbe->parsed()) return cmd_dbe(dbe_n, allow_long, json, out);
  } catch (const TheoremNotApplicable& e) {
    err << "error: " << e.what() << '\n';
    return exit_not_applicable;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_input_error;
  }
  return exit_input_error;
}

}  // namespace setrep
