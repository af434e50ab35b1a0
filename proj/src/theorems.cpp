#include "setrep/theorems.hpp"

#include <algorithm>
#include <array>

#include "setrep/canonical.hpp"
#include "setrep/cliquecover.hpp"
#include "setrep/errors.hpp"
#include "setrep/geometry.hpp"

namespace setrep {
namespace {

std::string npp_text(long long n) { return "N_PP(" + std::to_string(n) + ")"; }

bool constructible_order(int r) { return r == 2 || r == 3 || r == 4 || r == 5 || r == 7 || r == 8 || r == 9; }

// EGP image of the Desarguesian plane on n points, if n is a plane size
// we can build.
std::optional<SetRepresentation> plane_image(std::size_t n) {
  const auto r = plane_order_for(static_cast<long long>(n));
  if (!r || !constructible_order(*r)) return std::nullopt;
  return egp_set(fls_to_cover(projective_plane(*r).space));
}

SetRepresentation sunflower(std::size_t n) {
  std::vector<std::vector<int>> sets;
  for (std::size_t i = 0; i < n; ++i) sets.push_back({1, static_cast<int>(i) + 2});
  return SetRepresentation(std::move(sets), complete_graph(n).labels());
}

// Keeps one representation per isomorphism class, in input order.
std::vector<SetRepresentation> distinct_classes(const std::vector<SetRepresentation>& reps) {
  auto classes = partition_into_classes(reps);
  std::sort(classes.begin(), classes.end(),
            [](const IsomorphismClass& a, const IsomorphismClass& b) { return a.members.front() < b.members.front(); });
  std::vector<SetRepresentation> out;
  for (auto& c : classes) out.push_back(std::move(c.representative));
  return out;
}

ThetaTauReport oracle_only(std::size_t n, Category c) {
  ThetaTauReport r;
  r.category = c;
  r.theta = ThetaOracleNeeded{"K_" + std::to_string(n) + " is below the range of the closed forms (n >= 3)"};
  r.tau = TauUnknown{"run the oracle"};
  r.provenance = "complete.small";
  return r;
}

struct LineContext {
  LineGraphMap map;
  ClassificationReport cls;
  // Line vertices of the edges at each base vertex, in edge order.
  std::vector<std::vector<VertexId>> star;
};

LineContext line_context(const Graph& g) {
  LineContext ctx{line_graph(g), classify(g), {}};
  ctx.star.resize(g.vertex_count());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    ctx.star[e.u].push_back(ctx.map.edge_to_vertex[i]);
    ctx.star[e.v].push_back(ctx.map.edge_to_vertex[i]);
  }
  return ctx;
}

VertexId line_vertex(const LineContext& ctx, VertexId a, VertexId b) {
  const auto& edges = ctx.map.base.edges();
  for (std::size_t i = 0; i < edges.size(); ++i)
    if ((edges[i].u == a && edges[i].v == b) || (edges[i].u == b && edges[i].v == a)) return ctx.map.edge_to_vertex[i];
  throw DomainError("no edge between '" + ctx.map.base.label(a) + "' and '" + ctx.map.base.label(b) + "'");
}

SetRepresentation image(const LineContext& ctx, std::vector<Clique> cliques) {
  return egp_set(CliqueCover{ctx.map.line, std::move(cliques)});
}

// K4, K4-e (= W2) and K_{1,3}+e (= TP1 with one plume) are the graphs whose
// line graphs have automorphisms not induced by automorphisms of the graph.
// The two classes counted for them are exchanged by such an automorphism.
bool whitney_exception(const ClassificationReport& c) {
  return c.is_k4 || c.windmill_t == 2u ||
         (c.peacock && c.peacock->kind == PeacockKind::tp1 && c.peacock->plume_counts[0] == 1);
}

// Sets tau to the number of classes and keeps the closed-form count when the
// two differ.
void set_tau(ThetaTauReport& r, std::size_t classes, std::size_t formula) {
  r.tau = TauExact{classes};
  if (classes != formula) r.formula_tau = formula;
}

bool excluded_sd(const ClassificationReport& c) {
  return c.is_k4 || c.windmill_t || c.is_3k2_join_k1 || c.star_center ||
         (c.peacock && c.peacock->kind == PeacockKind::tp1);
}

bool excluded_sa(const ClassificationReport& c) {
  return c.is_k3 || c.is_k4 || c.windmill_t || c.star_center || c.peacock;
}

void require_sd(const ClassificationReport& c) {
  if (excluded_sd(c)) throw TheoremNotApplicable(c.special_class());
}

void require_sa(const ClassificationReport& c) {
  if (!excluded_sa(c)) return;
  throw TheoremNotApplicable(c.peacock ? "TP" : c.special_class());
}

// The stalk's third neighbor, outside its wing.
VertexId outer_neighbor(const Graph& g, const Wing& w) {
  for (auto u : neighbors(g, w.stalk))
    if (u != w.x && u != w.y) return u;
  throw DomainError("3-wing stalk without a third neighbor");
}

std::vector<Clique> sd_cover(const LineContext& ctx, std::uint64_t opened) {
  const Graph& g = ctx.map.base;
  std::vector<bool> skip(g.vertex_count(), false);
  std::vector<Clique> extra;
  for (std::size_t k = 0; k < ctx.cls.v3w.size(); ++k) {
    if (!(opened >> k & 1)) continue;
    const VertexId v = ctx.cls.v3w[k];
    const auto wing = *std::find_if(ctx.cls.wings.begin(), ctx.cls.wings.end(),
                                    [&](const Wing& w) { return w.stalk == v; });
    const VertexId w = outer_neighbor(g, wing);
    const VertexId vx = line_vertex(ctx, v, wing.x), vy = line_vertex(ctx, v, wing.y);
    const VertexId xy = line_vertex(ctx, wing.x, wing.y), vw = line_vertex(ctx, v, w);
    skip[v] = skip[wing.x] = skip[wing.y] = true;
    extra.push_back({vx, vy, xy});
    extra.push_back({vx, vw});
    extra.push_back({vy, vw});
  }
  std::vector<Clique> cliques;
  for (auto v : ctx.cls.v2)
    if (!skip[v]) cliques.push_back(ctx.star[v]);
  cliques.insert(cliques.end(), extra.begin(), extra.end());
  for (const auto& c : ctx.cls.critical)
    for (std::size_t j = 0; j + 1 < c.m(); ++j) cliques.push_back({line_vertex(ctx, c.vertex, c.plumes[j])});
  return cliques;
}

// Alternatives for the saturated star at a critical v with d(v) = m + 1:
// the whole star with a singleton per plume edge, the near-pencils and a
// plane. points = [v p1, ..., v pm, v u].
std::vector<std::vector<Clique>> star_alternatives(const std::vector<VertexId>& points) {
  const std::size_t d = points.size();
  const std::size_t m = d - 1;
  std::vector<std::vector<Clique>> out;

  std::vector<Clique> whole{points};
  for (std::size_t j = 0; j < m; ++j) whole.push_back({points[j]});
  out.push_back(std::move(whole));

  auto pencil = [&](std::size_t hub) {
    std::vector<Clique> cs;
    Clique big;
    for (std::size_t j = 0; j < d; ++j)
      if (j != hub) big.push_back(points[j]);
    cs.push_back(big);
    for (auto x : big) cs.push_back({points[hub], x});
    return cs;
  };
  out.push_back(pencil(m));
  if (m >= 3) out.push_back(pencil(0));

  if (const auto r = plane_order_for(static_cast<long long>(d)); r && constructible_order(*r)) {
    const auto plane = projective_plane(*r);
    std::vector<Clique> cs;
    for (const auto& l : plane.space.lines) {
      Clique c;
      for (auto p : l) c.push_back(points[p]);
      cs.push_back(std::move(c));
    }
    out.push_back(std::move(cs));
  }
  return out;
}

std::vector<const CriticalVertex*> sa_qualifying(const LineContext& ctx) {
  std::vector<const CriticalVertex*> out;
  for (const auto& c : ctx.cls.critical)
    if (c.m() >= 2 && ctx.map.base.degree(c.vertex) == c.m() + 1) out.push_back(&c);
  return out;
}

std::vector<Clique> sa_cover(const LineContext& ctx, const std::vector<const CriticalVertex*>& qual,
                             const std::vector<std::size_t>& choice) {
  const Graph& g = ctx.map.base;
  std::vector<bool> skip(g.vertex_count(), false);
  std::vector<Clique> extra;
  for (std::size_t k = 0; k < qual.size(); ++k) {
    const auto& c = *qual[k];
    if (choice[k] == 0) continue;
    std::vector<VertexId> points;
    for (auto p : c.plumes) points.push_back(line_vertex(ctx, c.vertex, p));
    for (auto u : neighbors(g, c.vertex))
      if (g.degree(u) > 1) points.push_back(line_vertex(ctx, c.vertex, u));
    const auto alts = star_alternatives(points);
    extra.insert(extra.end(), alts[choice[k]].begin(), alts[choice[k]].end());
    skip[c.vertex] = true;
  }
  std::vector<Clique> cliques;
  for (auto v : ctx.cls.v2)
    if (!skip[v]) cliques.push_back(ctx.star[v]);
  for (const auto& c : ctx.cls.critical) {
    if (skip[c.vertex]) continue;
    for (auto p : c.plumes) cliques.push_back({line_vertex(ctx, c.vertex, p)});
  }
  cliques.insert(cliques.end(), extra.begin(), extra.end());
  return cliques;
}

std::size_t alternative_count(std::size_t m) {
  std::vector<VertexId> points(m + 1);
  for (std::size_t i = 0; i <= m; ++i) points[i] = i;
  return star_alternatives(points).size();
}

ThetaTauReport from_complete(const LineContext& ctx, std::size_t n, Category c, const std::string& route) {
  auto r = theta_tau_complete(n, c);
  r.provenance = route + "+" + r.provenance;
  if (r.witnesses)
    for (auto& w : *r.witnesses) w = w.with_labels(ctx.map.line.labels());
  return r;
}

}  // namespace

std::string to_string(Category c) {
  switch (c) {
    case Category::sd: return "sd";
    case Category::sa: return "sa";
    case Category::sdu: return "sdu";
  }
  return "?";
}

std::optional<Category> parse_category(std::string_view name) {
  if (name == "sd") return Category::sd;
  if (name == "sa") return Category::sa;
  if (name == "sdu") return Category::sdu;
  return std::nullopt;
}

std::optional<std::size_t> exact_theta(const ThetaTauReport& r) {
  if (const auto* e = std::get_if<ThetaExact>(&r.theta)) return e->value;
  return std::nullopt;
}

std::optional<std::size_t> exact_tau(const ThetaTauReport& r) {
  if (const auto* e = std::get_if<TauExact>(&r.tau)) return e->value;
  return std::nullopt;
}

ThetaTauReport theta_tau_complete(std::size_t n, Category c) {
  if (n == 0) throw DomainError("K_0 has no vertices");
  if (n <= 2) return oracle_only(n, c);

  const auto npp = n_pp(static_cast<long long>(n));
  const auto plane = plane_image(n);
  // All planes on n points are built only when there is at most one.
  const bool planes_built = npp && (*npp == 0 || (*npp == 1 && plane));
  const auto pencil = egp_set(fls_to_cover(near_pencil(n)));

  ThetaTauReport r;
  r.category = c;
  switch (c) {
    case Category::sd:
    case Category::sa: {
      const bool sd = c == Category::sd;
      r.provenance = sd ? "complete.sd" : "complete.sa";
      r.theta = ThetaExact{n};
      const std::size_t base = sd ? 2 : 1;
      if (!npp) {
        r.tau = TauSymbolic{std::to_string(base) + "+" + npp_text(static_cast<long long>(n))};
        break;
      }
      r.tau = TauExact{base + static_cast<std::size_t>(*npp)};
      if (planes_built) {
        std::vector<SetRepresentation> w{pencil};
        if (plane) w.push_back(*plane);
        if (sd) w.push_back(egp_set(silly_partition(n)));
        r.witnesses = std::move(w);
      }
      break;
    }
    case Category::sdu: {
      if (n == 3) {
        r.provenance = "complete.sdu.triangle";
        r.theta = ThetaExact{3};
        r.tau = TauExact{1};
        r.witnesses = std::vector{pencil};
        break;
      }
      if (!npp) {
        r.provenance = "complete.sdu";
        r.theta = ThetaOracleNeeded{"depends on whether a plane on " + std::to_string(n) + " points exists"};
        r.tau = TauSymbolic{npp_text(static_cast<long long>(n)) + " if nonzero, else 1+" +
                            npp_text(static_cast<long long>(n) + 1)};
        break;
      }
      if (*npp >= 1) {
        r.provenance = "complete.sdu.plane";
        r.theta = ThetaExact{n};
        r.tau = TauExact{static_cast<std::size_t>(*npp)};
        if (planes_built) r.witnesses = std::vector{*plane};
        break;
      }
      r.provenance = "complete.sdu.plus-one";
      r.theta = ThetaExact{n + 1};
      const auto npp1 = n_pp(static_cast<long long>(n) + 1);
      if (!npp1) {
        r.tau = TauSymbolic{"1+" + npp_text(static_cast<long long>(n) + 1)};
        break;
      }
      r.tau = TauExact{1 + static_cast<std::size_t>(*npp1)};
      std::vector<SetRepresentation> w{sunflower(n)};
      if (*npp1 >= 1) {
        const auto order = plane_order_for(static_cast<long long>(n) + 1);
        if (*npp1 > 1 || !constructible_order(*order)) break;
        const std::array<std::size_t, 1> removed{0};
        auto punctured = puncture(projective_plane(*order), removed);
        w.push_back(egp_set(fls_to_cover(punctured)));
      }
      r.witnesses = std::move(w);
      break;
    }
  }
  return r;
}

ThetaTauReport theta_tau_linegraph(const Graph& g, Category c) {
  const LineContext ctx = line_context(g);
  const auto& cls = ctx.cls;

  if (cls.star_center) return from_complete(ctx, g.degree(*cls.star_center), c, "linegraph.star");
  if (cls.is_k3) return from_complete(ctx, 3, c, "linegraph.triangle");

  ThetaTauReport r;
  r.category = c;
  const std::string special = cls.special_class();
  switch (c) {
    case Category::sd: {
      if (excluded_sd(cls)) {
        r.provenance = "linegraph.sd.special";
        r.theta = ThetaOracleNeeded{special + " is outside the gamma formula"};
        if (cls.is_3k2_join_k1) {
          // With all three wings as triangles the rest is an octahedron, and
          // its two triangle decompositions differ by swapping the ends of
          // one rim edge.
          set_tau(r, 2, 3);
        } else {
          set_tau(r, whitney_exception(cls) ? 1 : 2, 2);
        }
        return r;
      }
      r.provenance = "linegraph.sd.gamma";
      r.theta = ThetaExact{cls.gamma};
      const std::size_t formula = std::size_t{1} << cls.v3w.size();
      auto classes = distinct_classes(witness_sd_variants(g));
      set_tau(r, classes.size(), formula);
      r.witnesses = std::move(classes);
      return r;
    }
    case Category::sa: {
      if (cls.peacock) {
        r.provenance = "linegraph.sa.peacock";
        r.theta = ThetaOracleNeeded{"peacocks are outside the gamma-prime formula"};
        const auto& pc = cls.peacock->plume_counts;
        std::size_t tau = 2;
        if (cls.peacock->kind == PeacockKind::tp2) {
          const std::size_t m1 = pc[0], m2 = pc[1];
          if (m1 >= 2 && m2 >= 2) {
            tau = m1 != m2 ? 5 : 4;
          } else if (m1 >= 2) {
            tau = 3;
          }
        }
        set_tau(r, whitney_exception(cls) ? 1 : tau, tau);
        return r;
      }
      if (excluded_sa(cls)) {
        r.provenance = "linegraph.sa.special";
        r.theta = ThetaOracleNeeded{special + " is outside the gamma-prime formula"};
        set_tau(r, whitney_exception(cls) ? 1 : 2, 2);
        return r;
      }
      r.provenance = "linegraph.sa.gamma-prime";
      r.theta = ThetaExact{cls.gamma_prime};
      std::size_t formula = 1;
      std::string symbolic;
      for (const auto* v : sa_qualifying(ctx)) {
        if (v->m() == 2) {
          formula *= 2;
          continue;
        }
        const auto npp = n_pp(static_cast<long long>(v->m()) + 1);
        if (!npp) {
          symbolic += "*(3+" + npp_text(static_cast<long long>(v->m()) + 1) + ")";
          continue;
        }
        formula *= 3 + static_cast<std::size_t>(*npp);
      }
      if (!symbolic.empty()) {
        r.tau = TauSymbolic{std::to_string(formula) + symbolic};
        return r;
      }
      auto variants = witness_sa_variants(g);
      if (variants.size() != formula) {
        // Some plane on m+1 points cannot be built; report the count alone.
        r.tau = TauExact{formula};
        return r;
      }
      auto classes = distinct_classes(variants);
      set_tau(r, classes.size(), formula);
      r.witnesses = std::move(classes);
      return r;
    }
    case Category::sdu: {
      const bool two = whitney_exception(cls);
      r.provenance = two ? "linegraph.sdu.special" : "linegraph.sdu.generic";
      r.theta = ThetaOracleNeeded{"no closed form for theta_sdu of this line graph"};
      set_tau(r, 1, two ? 2 : 1);
      return r;
    }
  }
  return r;
}

SetRepresentation witness_sd(const Graph& g) {
  const LineContext ctx = line_context(g);
  require_sd(ctx.cls);
  return image(ctx, sd_cover(ctx, 0));
}

std::vector<SetRepresentation> witness_sd_variants(const Graph& g) {
  const LineContext ctx = line_context(g);
  require_sd(ctx.cls);
  if (ctx.cls.v3w.size() >= 20) throw DomainError("too many 3-wings to enumerate");
  std::vector<SetRepresentation> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << ctx.cls.v3w.size()); ++s) out.push_back(image(ctx, sd_cover(ctx, s)));
  return out;
}

SetRepresentation witness_sa(const Graph& g) {
  const LineContext ctx = line_context(g);
  require_sa(ctx.cls);
  return image(ctx, sa_cover(ctx, {}, {}));
}

std::vector<SetRepresentation> witness_sa_variants(const Graph& g) {
  const LineContext ctx = line_context(g);
  require_sa(ctx.cls);
  const auto qual = sa_qualifying(ctx);
  std::vector<std::size_t> sizes;
  for (const auto* v : qual) sizes.push_back(alternative_count(v->m()));

  std::vector<SetRepresentation> out;
  std::vector<std::size_t> choice(qual.size(), 0);
  while (true) {
    out.push_back(image(ctx, sa_cover(ctx, qual, choice)));
    std::size_t k = 0;
    while (k < choice.size() && ++choice[k] == sizes[k]) choice[k++] = 0;
    if (k == choice.size()) break;
  }
  return out;
}

}  // namespace setrep
