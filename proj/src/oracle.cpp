#include "setrep/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

#include "setrep/errors.hpp"
#include "setrep/geometry.hpp"

namespace setrep {
namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

struct Instance {
  std::size_t n = 0;
  Mask all = 0;
  std::vector<Mask> adj;
};

Instance make_instance(const Graph& h) {
  const std::size_t n = h.vertex_count();
  if (n == 0) throw DomainError("the graph has no vertices");
  if (n > 64) throw DomainError("the search supports at most 64 vertices");
  Instance in;
  in.n = n;
  in.all = n == 64 ? ~Mask{0} : bit(n) - 1;
  in.adj.assign(n, 0);
  for (const auto& e : h.edges()) {
    in.adj[e.u] |= bit(e.v);
    in.adj[e.v] |= bit(e.u);
  }
  return in;
}

// Shared stop condition for all workers of one search.
class Limits {
 public:
  Limits(std::optional<std::uint64_t> node_limit, std::optional<double> seconds) : node_limit_(node_limit) {
    if (seconds)
      deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(*seconds));
  }

  bool charge(std::uint64_t k) {
    const auto total = nodes_.fetch_add(k, std::memory_order_relaxed) + k;
    if (node_limit_ && total > *node_limit_) halt("nodes");
    if (deadline_ && Clock::now() > *deadline_) halt("time");
    return !stopped();
  }
  bool stopped() const { return stop_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(); }
  std::string reason() const {
    std::lock_guard lock(mu_);
    return reason_;
  }

 private:
  void halt(const char* why) {
    std::lock_guard lock(mu_);
    if (!stop_.exchange(true)) reason_ = why;
  }

  std::optional<std::uint64_t> node_limit_;
  std::optional<Clock::time_point> deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};
  mutable std::mutex mu_;
  std::string reason_;
};

// Size of a greedy independent set of `set` in the graph given by `unc`.
int greedy_independent(const std::vector<Mask>& unc, Mask set) {
  int k = 0;
  while (set) {
    const int w = std::countr_zero(set);
    set &= ~(bit(w) | unc[w]);
    ++k;
  }
  return k;
}

// Lower bound on the cliques every vertex still needs, plus singletons
// forced on untouched vertices with nothing left to cover.
struct Bound {
  std::size_t cliques = 0;
  std::size_t forced = 0;
};

Bound bound_of(const Instance& in, const std::vector<Mask>& unc, Mask touched) {
  Bound b;
  for (std::size_t v = 0; v < in.n; ++v) {
    if (unc[v] == 0) {
      if (!(touched & bit(v))) ++b.forced;
    } else {
      b.cliques = std::max<std::size_t>(b.cliques, greedy_independent(unc, unc[v]));
    }
  }
  return b;
}

// Calls f(C) for every clique C of the uncovered graph containing the least
// uncovered edge. Returns false if the graph has no uncovered edge.
template <typename F>
void cliques_on_first_edge(const std::vector<Mask>& unc, std::size_t n, F&& f) {
  std::size_t u = 0;
  while (u < n && unc[u] == 0) ++u;
  if (u == n) return;
  const int w = std::countr_zero(unc[u]);
  auto extend = [&](auto&& self, Mask clique, Mask cand) -> void {
    f(clique);
    while (cand) {
      const int x = std::countr_zero(cand);
      cand &= cand - 1;
      self(self, clique | bit(x), cand & unc[x]);
    }
  };
  extend(extend, bit(u) | bit(w), unc[u] & unc[w]);
}

bool has_uncovered(const std::vector<Mask>& unc) {
  return std::any_of(unc.begin(), unc.end(), [](Mask m) { return m != 0; });
}

// Depth-first walk over trivial-free edge-clique partitions. The clique that
// covers the least uncovered edge is chosen at each node, so every partition
// is reached exactly once.
template <typename Leaf>
class Walker {
 public:
  Walker(const Instance& in, std::size_t limit, bool trivial_ok, Limits& lim, Leaf& leaf)
      : in_(in), limit_(limit), trivial_ok_(trivial_ok), lim_(lim), leaf_(leaf) {}

  ~Walker() { flush(); }

  void walk(std::vector<Mask>& unc, std::vector<Mask>& chosen, Mask touched) {
    if (lim_.stopped()) return;
    if (++local_ == 1024) flush();
    const Bound b = bound_of(in_, unc, touched);
    if (!trivial_ok_ && b.forced > 0) return;
    if (chosen.size() + b.cliques + b.forced > limit_) return;
    if (!has_uncovered(unc)) {
      leaf_(chosen, touched);
      return;
    }
    cliques_on_first_edge(unc, in_.n, [&](Mask c) { descend(unc, chosen, touched, c); });
  }

  void descend(std::vector<Mask>& unc, std::vector<Mask>& chosen, Mask touched, Mask c) {
    std::vector<Mask> saved = unc;
    for (Mask rest = c; rest; rest &= rest - 1) unc[std::countr_zero(rest)] &= ~c;
    chosen.push_back(c);
    walk(unc, chosen, touched | c);
    chosen.pop_back();
    unc = std::move(saved);
  }

  void flush() {
    if (local_) lim_.charge(local_);
    local_ = 0;
  }

 private:
  const Instance& in_;
  std::size_t limit_;
  bool trivial_ok_;
  Limits& lim_;
  Leaf& leaf_;
  std::uint64_t local_ = 0;
};

// Every way to hand out `r` singletons over n vertices with each vertex in
// `need` receiving at least one; f gets the per-vertex counts.
template <typename F>
void singleton_counts(std::size_t n, Mask need, std::size_t r, F&& f) {
  std::vector<std::size_t> counts(n, 0);
  auto go = [&](auto&& self, std::size_t v, std::size_t left) -> bool {
    if (v + 1 == n) {
      if ((need & bit(v)) && left == 0) return true;
      counts[v] = left;
      const bool more = f(counts);
      counts[v] = 0;
      return more;
    }
    // Vertices after v that still need a singleton.
    const Mask later = need & ~((bit(v) << 1) - 1);
    const std::size_t reserve = std::popcount(later);
    const std::size_t lo = (need & bit(v)) ? 1 : 0;
    if (left < reserve + lo) return true;
    for (std::size_t c = lo; c + reserve <= left; ++c) {
      counts[v] = c;
      if (!self(self, v + 1, left - c)) {
        counts[v] = 0;
        return false;
      }
    }
    counts[v] = 0;
    return true;
  };
  go(go, 0, r);
}

struct ClassMap {
  std::map<CanonicalForm, std::vector<Mask>> best;
  std::uint64_t partitions = 0;
  std::uint64_t candidates = 0;
  std::uint64_t solutions = 0;

  void record(std::vector<Mask> masks, int universe) {
    ++solutions;
    auto form = canonical_labeling(masks, universe).form;
    auto [it, fresh] = best.try_emplace(std::move(form), masks);
    if (!fresh && masks < it->second) it->second = std::move(masks);
  }

  void merge(ClassMap&& other) {
    partitions += other.partitions;
    candidates += other.candidates;
    solutions += other.solutions;
    for (auto& [form, masks] : other.best) {
      auto [it, fresh] = best.try_emplace(form, masks);
      if (!fresh && masks < it->second) it->second = masks;
    }
  }
};

// Completes a trivial-free partition to universe size p with singletons and
// records every completion that passes the predicate.
struct CompletionLeaf {
  const Instance& in;
  std::size_t p;
  CategoryPredicate pred;
  Limits& lim;
  ClassMap out;

  void operator()(const std::vector<Mask>& chosen, Mask touched) {
    ++out.partitions;
    const std::size_t q = chosen.size();
    const Mask need = in.all & ~touched;
    if (q > p || static_cast<std::size_t>(std::popcount(need)) > p - q) return;
    std::vector<Mask> base(in.n, 0);
    for (std::size_t j = 0; j < q; ++j)
      for (Mask rest = chosen[j]; rest; rest &= rest - 1) base[std::countr_zero(rest)] |= bit(j);
    std::uint64_t local = 0;
    singleton_counts(in.n, need, p - q, [&](const std::vector<std::size_t>& counts) {
      if (++local == 256) {
        local = 0;
        if (!lim.charge(256)) return false;
      }
      std::vector<Mask> masks = base;
      std::size_t next = q;
      for (std::size_t v = 0; v < in.n; ++v)
        for (std::size_t k = 0; k < counts[v]; ++k) masks[v] |= bit(next++);
      ++out.candidates;
      if (satisfies(masks, pred)) out.record(std::move(masks), static_cast<int>(p));
      return true;
    });
    if (local) lim.charge(local);
  }
};

struct LevelOutcome {
  ClassMap classes;
  bool complete = false;
};

LevelOutcome search_simple_level(const Instance& in, std::size_t p, const CategoryPredicate& pred, Limits& lim,
                                 unsigned threads) {
  // Root branches: the cliques through the least edge, or one empty job.
  std::vector<std::optional<Mask>> jobs;
  cliques_on_first_edge(in.adj, in.n, [&](Mask c) { jobs.emplace_back(c); });
  if (jobs.empty()) jobs.emplace_back(std::nullopt);

  auto run = [&](std::atomic<std::size_t>& next, ClassMap& sink) {
    CompletionLeaf leaf{in, p, pred, lim, {}};
    {
      Walker walker(in, p, true, lim, leaf);
      for (std::size_t i = next++; i < jobs.size() && !lim.stopped(); i = next++) {
        std::vector<Mask> unc = in.adj;
        std::vector<Mask> chosen;
        if (jobs[i]) {
          walker.descend(unc, chosen, 0, *jobs[i]);
        } else {
          walker.walk(unc, chosen, 0);
        }
      }
    }
    sink = std::move(leaf.out);
  };

  std::atomic<std::size_t> next{0};
  LevelOutcome out;
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(jobs.size())));
  if (workers <= 1) {
    run(next, out.classes);
  } else {
    std::vector<ClassMap> sinks(workers);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back([&, w] { run(next, sinks[w]); });
    for (auto& t : pool) t.join();
    for (auto& s : sinks) out.classes.merge(std::move(s));
  }
  out.complete = !lim.stopped();
  return out;
}

std::vector<Mask> all_cliques(const Instance& in) {
  std::vector<Mask> out;
  auto extend = [&](auto&& self, Mask clique, Mask cand) -> void {
    out.push_back(clique);
    while (cand) {
      const int x = std::countr_zero(cand);
      cand &= cand - 1;
      self(self, clique | bit(x), cand & in.adj[x]);
    }
  };
  for (std::size_t v = 0; v < in.n; ++v) extend(extend, bit(v), in.adj[v] & ~((bit(v) << 1) - 1));
  std::sort(out.begin(), out.end());
  return out;
}

// Multisets of p cliques (repetition allowed) covering every vertex and edge.
LevelOutcome search_naive_level(const Instance& in, const std::vector<Mask>& cliques, std::size_t p,
                                const CategoryPredicate& pred, Limits& lim) {
  LevelOutcome out;
  std::vector<std::size_t> pick(p);
  std::uint64_t local = 0;
  auto go = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
    if (lim.stopped()) return;
    if (++local == 1024) {
      local = 0;
      lim.charge(1024);
    }
    if (depth == p) {
      ++out.classes.partitions;
      std::vector<Mask> masks(in.n, 0);
      std::vector<Mask> covered(in.n, 0);
      for (std::size_t j = 0; j < p; ++j) {
        const Mask c = cliques[pick[j]];
        for (Mask rest = c; rest; rest &= rest - 1) {
          const int v = std::countr_zero(rest);
          masks[v] |= bit(j);
          covered[v] |= c & ~bit(v);
        }
      }
      for (std::size_t v = 0; v < in.n; ++v)
        if (masks[v] == 0 || covered[v] != in.adj[v]) return;
      ++out.classes.candidates;
      if (satisfies(masks, pred)) out.classes.record(std::move(masks), static_cast<int>(p));
      return;
    }
    for (std::size_t i = from; i < cliques.size(); ++i) {
      pick[depth] = i;
      self(self, depth + 1, i);
    }
  };
  go(go, 0, 0);
  if (local) lim.charge(local);
  out.complete = !lim.stopped();
  return out;
}

CliqueCover to_cover(const Graph& h, const std::vector<Mask>& cliques) {
  CliqueCover q{h, {}};
  for (Mask c : cliques) {
    Clique k;
    for (Mask rest = c; rest; rest &= rest - 1) k.push_back(static_cast<VertexId>(std::countr_zero(rest)));
    q.cliques.push_back(std::move(k));
  }
  return canonical_sort(std::move(q));
}

}  // namespace

std::string to_string(OracleCategory c) {
  switch (c) {
    case OracleCategory::s: return "s";
    case OracleCategory::d: return "d";
    case OracleCategory::a: return "a";
    case OracleCategory::u: return "u";
    case OracleCategory::sd: return "sd";
    case OracleCategory::sa: return "sa";
    case OracleCategory::sdu: return "sdu";
  }
  return "?";
}

std::optional<OracleCategory> parse_oracle_category(std::string_view name) {
  for (auto c : {OracleCategory::s, OracleCategory::d, OracleCategory::a, OracleCategory::u, OracleCategory::sd,
                 OracleCategory::sa, OracleCategory::sdu})
    if (to_string(c) == name) return c;
  return std::nullopt;
}

CategoryPredicate predicate_of(OracleCategory c) {
  switch (c) {
    case OracleCategory::s: return {true, false, false, false};
    case OracleCategory::d: return {false, true, false, false};
    case OracleCategory::a: return {false, false, true, false};
    case OracleCategory::u: return {false, false, false, true};
    case OracleCategory::sd: return {true, true, false, false};
    case OracleCategory::sa: return {true, false, true, false};
    case OracleCategory::sdu: return {true, true, false, true};
  }
  return {};
}

bool satisfies(std::span<const std::uint64_t> masks, const CategoryPredicate& pred) {
  const std::size_t n = masks.size();
  if (pred.uniform)
    for (std::size_t i = 1; i < n; ++i)
      if (std::popcount(masks[i]) != std::popcount(masks[0])) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Mask a = masks[i], b = masks[j];
      if (pred.simple && std::popcount(a & b) > 1) return false;
      if (pred.distinct && a == b) return false;
      if (pred.antichain && ((a & b) == a || (a & b) == b)) return false;
    }
  }
  return true;
}

OracleResult oracle_search(const Graph& h, OracleCategory c, const SearchBudget& budget) {
  const auto start = Clock::now();
  const Instance in = make_instance(h);
  const CategoryPredicate pred = predicate_of(c);
  Limits lim(budget.node_limit, budget.time_limit_seconds);
  const std::size_t max_p = std::min<std::size_t>(budget.max_universe, 64);

  std::size_t p = 1;
  std::vector<Mask> cliques;
  if (pred.simple) {
    const Bound b = bound_of(in, in.adj, 0);
    p = std::max<std::size_t>(1, b.cliques + b.forced);
  } else {
    cliques = all_cliques(in);
  }

  OracleResult result;
  for (; p <= max_p; ++p) {
    LevelOutcome level = pred.simple ? search_simple_level(in, p, pred, lim, budget.threads)
                                     : search_naive_level(in, cliques, p, pred, lim);
    result.stats.partitions += level.classes.partitions;
    result.stats.candidates += level.classes.candidates;
    if (level.complete) result.stats.completed_universe = p;
    if (!level.classes.best.empty()) {
      result.theta = p;
      result.stats.solutions = level.classes.solutions;
      for (auto& [form, masks] : level.classes.best)
        result.classes.push_back({form, from_masks(masks, h.labels())});
      result.exhausted = level.complete;
      break;
    }
    if (!level.complete) break;
  }
  result.stop_reason = lim.reason();
  if (result.stop_reason.empty() && !result.theta) result.stop_reason = "universe";
  result.stats.nodes = lim.nodes();
  result.stats.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

std::uint64_t enumerate_partitions(const Graph& h, std::size_t p, bool allow_trivial,
                                   const std::function<void(const CliqueCover&)>& visit) {
  if (p == 0) throw DomainError("a partition needs at least one clique");
  const Instance in = make_instance(h);
  Limits lim(std::nullopt, std::nullopt);
  std::uint64_t count = 0;
  auto leaf = [&](const std::vector<Mask>& chosen, Mask touched) {
    const std::size_t q = chosen.size();
    if (!allow_trivial) {
      if (q == p) {
        ++count;
        visit(to_cover(h, chosen));
      }
      return;
    }
    const Mask need = in.all & ~touched;
    if (q > p || static_cast<std::size_t>(std::popcount(need)) > p - q) return;
    singleton_counts(in.n, need, p - q, [&](const std::vector<std::size_t>& counts) {
      std::vector<Mask> all = chosen;
      for (std::size_t v = 0; v < in.n; ++v) all.insert(all.end(), counts[v], bit(v));
      ++count;
      visit(to_cover(h, all));
      return true;
    });
  };
  Walker walker(in, p, allow_trivial, lim, leaf);
  std::vector<Mask> unc = in.adj;
  std::vector<Mask> chosen;
  walker.walk(unc, chosen, 0);
  return count;
}

DbeReport verify_dbe(std::size_t n, bool allow_long) {
  if (n < 3 || n > 7 || (n == 7 && !allow_long))
    throw DomainError("verify_dbe supports 3 <= n <= 6 (7 with the long flag), got " + std::to_string(n));
  const Graph kn = complete_graph(n);
  const Instance in = make_instance(kn);
  Limits lim(std::nullopt, std::nullopt);
  DbeReport r;
  r.n = n;
  std::map<CanonicalForm, int> classes;
  auto leaf = [&](const std::vector<Mask>& chosen, Mask) {
    const std::size_t q = chosen.size();
    if (q == 1) return;
    if (!r.minimum || q < *r.minimum) r.minimum = q;
    if (q != n) return;
    ++r.equality_cases;
    std::vector<Mask> masks(n, 0);
    for (std::size_t j = 0; j < q; ++j)
      for (Mask rest = chosen[j]; rest; rest &= rest - 1) masks[std::countr_zero(rest)] |= bit(j);
    classes.try_emplace(canonical_labeling(masks, static_cast<int>(q)).form, 0);

    const bool pencil = std::any_of(chosen.begin(), chosen.end(),
                                    [&](Mask c) { return static_cast<std::size_t>(std::popcount(c)) == n - 1; });
    if (pencil) {
      ++r.near_pencils;
      return;
    }
    FiniteLinearSpace s;
    s.points = n;
    for (Mask c : chosen) {
      Line l;
      for (Mask rest = c; rest; rest &= rest - 1) l.push_back(static_cast<std::size_t>(std::countr_zero(rest)));
      s.lines.push_back(std::move(l));
    }
    try {
      certify_plane(std::move(s));
      ++r.planes;
    } catch (const DomainError&) {
      ++r.other;
    }
  };
  Walker walker(in, n, false, lim, leaf);
  std::vector<Mask> unc = in.adj;
  std::vector<Mask> chosen;
  walker.walk(unc, chosen, 0);
  r.equality_classes = classes.size();
  r.confirmed = r.minimum == n && r.other == 0;
  return r;
}

}  // namespace setrep
