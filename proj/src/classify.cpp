#include "setrep/classify.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "setrep/errors.hpp"

namespace setrep {
namespace {

struct WindmillShape {
  VertexId u, v;
  std::size_t t;
};

// W_t on the vertex subset `vs` of g (adjacency restricted to vs).
std::optional<WindmillShape> windmill_on(const Graph& g, const std::vector<VertexId>& vs) {
  const std::size_t n = vs.size();
  if (n < 4) return std::nullopt;
  VertexSet inside(g.vertex_count());
  for (auto v : vs) inside.set(v);
  std::vector<VertexId> hubs;
  std::size_t edge_ends = 0;
  for (auto v : vs) {
    const std::size_t d = (g.neighbors(v) & inside).count();
    edge_ends += d;
    if (d == n - 1) {
      hubs.push_back(v);
    } else if (d != 2) {
      return std::nullopt;
    }
  }
  if (hubs.size() != 2 || edge_ends != 2 * (2 * (n - 2) + 1)) return std::nullopt;
  for (auto v : vs) {
    if (v == hubs[0] || v == hubs[1]) continue;
    if (!g.adjacent(v, hubs[0]) || !g.adjacent(v, hubs[1])) return std::nullopt;
  }
  return WindmillShape{hubs[0], hubs[1], n - 2};
}

bool is_triangle_on(const Graph& g, const std::vector<VertexId>& vs) {
  return vs.size() == 3 && g.adjacent(vs[0], vs[1]) && g.adjacent(vs[0], vs[2]) && g.adjacent(vs[1], vs[2]);
}

bool is_friendship3(const Graph& g) {
  if (g.vertex_count() != 7 || g.edge_count() != 9) return false;
  std::optional<VertexId> center;
  for (VertexId v = 0; v < 7; ++v) {
    if (g.degree(v) == 6) {
      center = v;
    } else if (g.degree(v) != 2) {
      return false;
    }
  }
  if (!center) return false;
  for (VertexId v = 0; v < 7; ++v) {
    if (v == *center) continue;
    VertexSet others = g.neighbors(v);
    others.reset(*center);
    if (others.count() != 1) return false;
  }
  return true;
}

std::optional<VertexId> star_center_of(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2 || g.edge_count() != n - 1) return std::nullopt;
  for (VertexId v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) return v;
  return std::nullopt;
}

std::optional<Peacock> peacock_of(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> residue;
  std::vector<std::size_t> plumes(n, 0);
  bool any_plume = false;
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) == 1) {
      any_plume = true;
      const VertexId owner = g.neighbors(v).find_first();
      if (g.degree(owner) == 1) return std::nullopt;
      ++plumes[owner];
    } else {
      residue.push_back(v);
    }
  }
  if (!any_plume) return std::nullopt;

  std::vector<VertexId> tailed;
  for (auto v : residue)
    if (plumes[v] > 0) tailed.push_back(v);
  std::stable_sort(tailed.begin(), tailed.end(), [&](VertexId a, VertexId b) { return plumes[a] > plumes[b]; });

  Peacock out;
  out.tailed = tailed;
  for (auto v : tailed) out.plume_counts.push_back(plumes[v]);

  if (is_triangle_on(g, residue)) {
    if (tailed.size() == 1) {
      out.kind = PeacockKind::tp1;
    } else if (tailed.size() == 2) {
      out.kind = PeacockKind::tp2;
    } else {
      return std::nullopt;
    }
    return out;
  }
  if (const auto w = windmill_on(g, residue)) {
    for (auto v : tailed)
      if (v != w->u && v != w->v) return std::nullopt;
    out.kind = tailed.size() == 1 ? PeacockKind::tpd1 : PeacockKind::tpd2;
    out.fan_size = w->t;
    return out;
  }
  return std::nullopt;
}

}  // namespace

std::string to_string(PeacockKind k) {
  switch (k) {
    case PeacockKind::tp1: return "TP1";
    case PeacockKind::tp2: return "TP2";
    case PeacockKind::tpd1: return "TPd1";
    case PeacockKind::tpd2: return "TPd2";
  }
  return "?";
}

std::string ClassificationReport::special_class() const {
  if (is_k3) return "K3";
  if (is_k4) return "K4";
  if (windmill_t) return "W" + std::to_string(*windmill_t);
  if (is_3k2_join_k1) return "3K2vK1";
  if (star_center) return "star";
  if (peacock) return to_string(peacock->kind);
  return {};
}

std::vector<Wing> find_wings(const Graph& g) {
  std::vector<Wing> out;
  for (const auto& e : g.edges()) {
    // Enumerate each triangle once from its least vertex pair.
    const VertexId a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    const VertexSet common = g.neighbors(a) & g.neighbors(b);
    for (auto c = common.find_next(b); c != VertexSet::npos; c = common.find_next(c)) {
      const std::array<VertexId, 3> t{a, b, c};
      std::size_t big = 0;
      VertexId stalk = 0;
      for (auto v : t)
        if (g.degree(v) > 2) {
          ++big;
          stalk = v;
        }
      if (big != 1) continue;
      std::vector<VertexId> rest;
      for (auto v : t)
        if (v != stalk) rest.push_back(v);
      out.push_back({stalk, rest[0], rest[1]});
    }
  }
  std::sort(out.begin(), out.end(), [](const Wing& x, const Wing& y) {
    return std::tie(x.stalk, x.x, x.y) < std::tie(y.stalk, y.x, y.y);
  });
  return out;
}

std::vector<Semiwing> find_semiwings(const Graph& g) {
  std::vector<Semiwing> out;
  for (const auto& e : g.edges()) {
    const VertexId a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    const VertexSet common = g.neighbors(a) & g.neighbors(b);
    for (auto c = common.find_next(b); c != VertexSet::npos; c = common.find_next(c)) {
      const std::array<VertexId, 3> t{a, b, c};
      std::size_t low = 0;
      VertexId w = 0;
      for (auto v : t)
        if (g.degree(v) == 2) {
          ++low;
          w = v;
        }
      if (low != 1) continue;
      std::vector<VertexId> rest;
      for (auto v : t)
        if (v != w) rest.push_back(v);
      out.push_back({w, rest[0], rest[1]});
    }
  }
  std::sort(out.begin(), out.end(), [](const Semiwing& x, const Semiwing& y) {
    return std::tie(x.non_stalk, x.u, x.v) < std::tie(y.non_stalk, y.u, y.v);
  });
  return out;
}

ClassificationReport classify(const Graph& g) {
  if (g.edge_count() == 0) throw DomainError("classification needs at least one edge");
  if (!is_connected(g)) throw DomainError("classification needs a connected graph");

  const std::size_t n = g.vertex_count();
  ClassificationReport r;
  r.is_k3 = n == 3 && g.edge_count() == 3;
  r.is_k4 = n == 4 && g.edge_count() == 6;
  std::vector<VertexId> all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  if (const auto w = windmill_on(g, all)) r.windmill_t = w->t;
  r.is_3k2_join_k1 = is_friendship3(g);
  r.star_center = star_center_of(g);
  if (!r.is_k3 && !r.is_k4 && !r.windmill_t && !r.is_3k2_join_k1 && !r.star_center) r.peacock = peacock_of(g);

  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) < 2) continue;
    r.v2.push_back(v);
    CriticalVertex c{v, {}};
    for (auto u : neighbors(g, v))
      if (g.degree(u) == 1) c.plumes.push_back(u);
    if (c.plumes.empty()) {
      r.inland.push_back(v);
    } else {
      r.critical.push_back(std::move(c));
    }
  }
  r.wings = find_wings(g);
  r.semiwings = find_semiwings(g);
  for (const auto& w : r.wings)
    if (g.degree(w.stalk) == 3) r.v3w.push_back(w.stalk);
  std::sort(r.v3w.begin(), r.v3w.end());
  r.v3w.erase(std::unique(r.v3w.begin(), r.v3w.end()), r.v3w.end());

  std::size_t plumes = 0;
  for (const auto& c : r.critical) plumes += c.m();
  r.gamma = r.inland.size() + plumes;
  r.gamma_prime = r.gamma + r.critical.size();
  return r;
}

}  // namespace setrep
