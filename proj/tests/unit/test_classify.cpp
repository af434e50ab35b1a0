#include <doctest.h>

#include <random>
#include <set>

#include "setrep/classify.hpp"
#include "setrep/errors.hpp"
#include "support/brute.hpp"
#include "support/graphs.hpp"

using namespace setrep;

namespace {

std::set<std::string> names(const Graph& g, const std::vector<VertexId>& vs) {
  std::set<std::string> out;
  for (auto v : vs) out.insert(g.label(v));
  return out;
}

int special_flags(const ClassificationReport& r) {
  return r.is_k3 + r.is_k4 + r.windmill_t.has_value() + r.is_3k2_join_k1 + r.star_center.has_value() +
         r.peacock.has_value();
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("worked example graph") {
    const Graph g = parse_graph(graphs::fig5);
    const auto r = classify(g);
    REQUIRE(r.critical.size() == 1);
    CHECK(g.label(r.critical[0].vertex) == "c");
    CHECK(r.critical[0].m() == 1);
    CHECK(r.inland.size() == 7);
    CHECK(r.gamma == 8);
    CHECK(r.gamma_prime == 9);
    REQUIRE(r.wings.size() == 2);
    std::set<std::set<std::string>> wings;
    for (const auto& w : r.wings) {
      CHECK(g.label(w.stalk) == "c");
      wings.insert({g.label(w.x), g.label(w.y)});
    }
    CHECK(wings == std::set<std::set<std::string>>{{"d", "e"}, {"f", "g"}});
    CHECK(r.v3w.empty());
    CHECK(r.special_class().empty());
  }

  TEST_CASE("special classes") {
    CHECK(classify(complete_graph(3)).is_k3);
    CHECK(classify(complete_graph(3)).special_class() == "K3");
    const auto k4 = classify(complete_graph(4));
    CHECK(k4.is_k4);
    CHECK(k4.critical.empty());
    CHECK(k4.inland.size() == 4);
    CHECK(k4.gamma == 4);
    CHECK(classify(parse_graph(graphs::w2)).windmill_t == 2);
    CHECK(classify(parse_graph(graphs::w3)).windmill_t == 3);
    CHECK(classify(parse_graph(graphs::friendship3)).is_3k2_join_k1);
    CHECK(classify(parse_graph(graphs::friendship3)).special_class() == "3K2vK1");
    const Graph claw = parse_graph(graphs::claw);
    CHECK(claw.label(*classify(claw).star_center) == "v");
    // One edge is a star on either end; P3 too.
    CHECK(classify(parse_graph("2 1\na b")).star_center.has_value());
  }

  TEST_CASE("peacocks") {
    const Graph tp1 = parse_graph("5 5\nv x\nv y\nx y\nv p1\nv p2");
    const auto r = classify(tp1);
    REQUIRE(r.peacock);
    CHECK(r.peacock->kind == PeacockKind::tp1);
    CHECK(r.peacock->plume_counts == std::vector<std::size_t>{2});
    REQUIRE(r.critical.size() == 1);
    CHECK(tp1.label(r.critical[0].vertex) == "v");
    CHECK(r.gamma == 4);

    const auto tp1m1 = classify(parse_graph(graphs::tp1_single));
    REQUIRE(tp1m1.peacock);
    CHECK(tp1m1.peacock->kind == PeacockKind::tp1);
    CHECK(tp1m1.peacock->plume_counts == std::vector<std::size_t>{1});

    const auto tp2 = classify(parse_graph(graphs::tp2(2, 3)));
    REQUIRE(tp2.peacock);
    CHECK(tp2.peacock->kind == PeacockKind::tp2);
    CHECK(tp2.peacock->plume_counts == std::vector<std::size_t>{3, 2});

    const auto tpd1 = classify(parse_graph(graphs::tpd1));
    REQUIRE(tpd1.peacock);
    CHECK(tpd1.peacock->kind == PeacockKind::tpd1);
    CHECK(tpd1.peacock->fan_size == 2);
    const auto tpd2 = classify(parse_graph(graphs::tpd2));
    REQUIRE(tpd2.peacock);
    CHECK(tpd2.peacock->kind == PeacockKind::tpd2);

    // A plume on a degree-2 apex of W2 is not a diamond-back peacock.
    CHECK_FALSE(classify(parse_graph("5 6\nu v\nu a\nv a\nu b\nv b\na p")).peacock);
    // Pendant path of length two is not a plume.
    CHECK_FALSE(classify(parse_graph("5 5\nv x\nv y\nx y\nv a\na b")).peacock);
  }

  TEST_CASE("wings and semiwings") {
    const auto k3 = classify(complete_graph(3));
    CHECK(k3.wings.empty());
    CHECK(k3.semiwings.empty());
    const auto tp2 = classify(parse_graph(graphs::tp2(1, 1)));
    CHECK(tp2.wings.empty());
    CHECK(tp2.semiwings.size() == 1);
    const Graph g = parse_graph(graphs::one_3wing);
    const auto r = classify(g);
    CHECK(names(g, r.v3w) == std::set<std::string>{"v"});
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(classify(parse_graph("4 2\na b\nc d")), DomainError);
    CHECK_THROWS_AS(classify(GraphBuilder().build()), DomainError);
  }

  TEST_CASE("stars") {
    for (std::size_t n = 2; n <= 7; ++n) {
      GraphBuilder b;
      for (std::size_t i = 0; i < n; ++i) b.add_edge("c", "l" + std::to_string(i));
      const Graph g = std::move(b).build();
      const auto r = classify(g);
      CHECK(names(g, r.v2) == std::set<std::string>{"c"});
      REQUIRE(r.critical.size() == 1);
      CHECK(r.critical[0].m() == n);
      CHECK(r.gamma == n);
    }
  }

  TEST_CASE("structural invariants on random graphs") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t n = 2 + trial % 6;
      const Graph g = brute::random_connected(rng, n, n - 1 + trial % 5);
      const auto r = classify(g);
      CHECK(special_flags(r) <= 1);
      std::set<VertexId> v2(r.v2.begin(), r.v2.end()), split;
      for (const auto& c : r.critical) {
        CHECK(split.insert(c.vertex).second);
        CHECK(g.degree(c.vertex) >= 2);
        for (auto p : c.plumes) CHECK(g.degree(p) == 1);
      }
      for (auto v : r.inland) CHECK(split.insert(v).second);
      CHECK(split == v2);
      for (auto v : v2) CHECK(g.degree(v) >= 2);
      std::size_t sum_m = 0;
      for (const auto& c : r.critical) sum_m += c.m();
      CHECK(r.gamma == r.inland.size() + sum_m);
      CHECK(r.gamma_prime - r.gamma == r.critical.size());
      for (const auto& w : r.wings) {
        CHECK(g.degree(w.stalk) > 2);
        CHECK(g.degree(w.x) == 2);
        CHECK(g.degree(w.y) == 2);
        CHECK(g.adjacent(w.stalk, w.x));
        CHECK(g.adjacent(w.stalk, w.y));
        CHECK(g.adjacent(w.x, w.y));
      }
      for (const auto& w : r.semiwings) {
        CHECK((g.degree(w.non_stalk) == 2) + (g.degree(w.u) == 2) + (g.degree(w.v) == 2) == 1);
      }
      for (auto v : r.v3w) CHECK(g.degree(v) == 3);

      // Relabeling vertices keeps the wing structure.
      std::vector<std::string> labels = g.labels();
      std::reverse(labels.begin(), labels.end());
      std::vector<std::pair<VertexId, VertexId>> pairs;
      for (auto e : g.edges()) pairs.push_back({e.u, e.v});
      const Graph h = make_graph(labels, pairs);
      const auto s = classify(h);
      CHECK(s.wings.size() == r.wings.size());
      CHECK(s.semiwings.size() == r.semiwings.size());
      CHECK(s.special_class() == r.special_class());
    }
  }
}
