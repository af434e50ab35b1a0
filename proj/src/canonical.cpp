#include "setrep/canonical.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

#include "setrep/errors.hpp"

namespace setrep {
namespace {

// Individualization-refinement over universe elements. Cells of the ordered
// partition are identified by their start position, so individualizing e in
// cell c leaves e at c and moves the rest of the cell to c+1.
class Canonizer {
 public:
  Canonizer(std::span<const std::uint64_t> sets, int n) : sets_(sets.begin(), sets.end()), n_(n) {}

  CanonicalLabeling run() {
    std::vector<int> cell(n_, 0);
    std::vector<int> path;
    search(cell, path);
    CanonicalLabeling out;
    out.form.universe = n_;
    out.form.sets = best_cert_;
    out.order = best_order_;
    return out;
  }

 private:
  void refine(std::vector<int>& cell) const {
    int cells = count_cells(cell);
    std::vector<std::vector<int>> profile(sets_.size());
    std::vector<std::pair<std::vector<int>, int>> keyed(n_);
    while (cells < n_) {
      for (std::size_t s = 0; s < sets_.size(); ++s) {
        auto& p = profile[s];
        p.clear();
        for (std::uint64_t m = sets_[s]; m != 0; m &= m - 1) p.push_back(cell[std::countr_zero(m)]);
        std::sort(p.begin(), p.end());
      }
      for (int e = 0; e < n_; ++e) {
        std::vector<const std::vector<int>*> mine;
        for (std::size_t s = 0; s < sets_.size(); ++s)
          if (sets_[s] >> e & 1) mine.push_back(&profile[s]);
        std::sort(mine.begin(), mine.end(), [](auto* a, auto* b) { return *a < *b; });
        auto& key = keyed[e].first;
        key.clear();
        key.push_back(cell[e]);
        for (auto* p : mine) {
          key.push_back(-1 - static_cast<int>(p->size()));
          key.insert(key.end(), p->begin(), p->end());
        }
        keyed[e].second = e;
      }
      std::vector<int> idx(n_);
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return keyed[a].first < keyed[b].first; });
      std::vector<int> next(n_);
      for (int pos = 0; pos < n_; ++pos) {
        const int e = idx[pos];
        next[e] = (pos > 0 && keyed[e].first == keyed[idx[pos - 1]].first) ? next[idx[pos - 1]] : pos;
      }
      const int refined = count_cells(next);
      cell.swap(next);
      if (refined == cells) break;
      cells = refined;
    }
  }

  static int count_cells(const std::vector<int>& cell) {
    std::uint64_t starts = 0;
    for (int c : cell) starts |= std::uint64_t{1} << c;
    return std::popcount(starts);
  }

  void leaf(const std::vector<int>& cell) {
    std::vector<std::uint64_t> cert;
    cert.reserve(sets_.size());
    for (auto m : sets_) {
      std::uint64_t r = 0;
      for (; m != 0; m &= m - 1) r |= std::uint64_t{1} << cell[std::countr_zero(m)];
      cert.push_back(r);
    }
    std::sort(cert.begin(), cert.end());
    std::vector<int> order(n_);
    for (int e = 0; e < n_; ++e) order[cell[e]] = e;

    if (best_order_.empty() && n_ > 0) {
      best_cert_ = std::move(cert);
      best_order_ = std::move(order);
      return;
    }
    if (n_ == 0) return;
    if (cert == best_cert_) {
      std::vector<int> g(n_);
      for (int k = 0; k < n_; ++k) g[best_order_[k]] = order[k];
      automorphisms_.push_back(std::move(g));
    } else if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_order_ = std::move(order);
    }
  }

  // Orbit representative of `e` under the stored automorphisms that fix every
  // element of `path`.
  int orbit_root(int e, const std::vector<int>& path) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& g : automorphisms_) {
      if (!std::all_of(path.begin(), path.end(), [&](int p) { return g[p] == p; })) continue;
      for (int x = 0; x < n_; ++x) {
        const int a = find(x), b = find(g[x]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    return find(e);
  }

  void search(std::vector<int> cell, std::vector<int>& path) {
    refine(cell);
    if (count_cells(cell) == n_) {
      leaf(cell);
      return;
    }
    std::vector<int> size(n_, 0);
    for (int c : cell) ++size[c];
    int target = 0;
    while (size[target] <= 1) ++target;

    std::vector<int> tried_roots;
    for (int e = 0; e < n_; ++e) {
      if (cell[e] != target) continue;
      const int root = orbit_root(e, path);
      bool seen = false;
      for (int t : tried_roots) seen = seen || orbit_root(t, path) == root;
      if (seen) continue;
      tried_roots.push_back(e);
      std::vector<int> child = cell;
      for (int x = 0; x < n_; ++x)
        if (child[x] == target && x != e) child[x] = target + 1;
      path.push_back(e);
      search(std::move(child), path);
      path.pop_back();
    }
  }

  std::vector<std::uint64_t> sets_;
  int n_;
  std::vector<std::uint64_t> best_cert_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalLabeling canonical_labeling(std::span<const std::uint64_t> masks, int universe) {
  if (universe < 0 || universe > 64) throw DomainError("canonical labeling supports universes of at most 64 elements");
  if (universe == 0) return {CanonicalForm{0, std::vector<std::uint64_t>(masks.size(), 0)}, {}};
  return Canonizer(masks, universe).run();
}

CanonicalForm canonical_form(const SetRepresentation& s) {
  const auto masks = to_masks(s);
  return canonical_labeling(masks, static_cast<int>(s.universe_size())).form;
}

std::optional<std::vector<std::pair<int, int>>> isomorphic(const SetRepresentation& a, const SetRepresentation& b) {
  if (a.size() != b.size() || a.universe_size() != b.universe_size()) return std::nullopt;
  const auto ma = to_masks(a);
  const auto mb = to_masks(b);
  const int n = static_cast<int>(a.universe_size());
  const auto la = canonical_labeling(ma, n);
  const auto lb = canonical_labeling(mb, n);
  if (la.form != lb.form) return std::nullopt;
  std::vector<std::pair<int, int>> bijection;
  bijection.reserve(n);
  for (int k = 0; k < n; ++k) bijection.emplace_back(a.universe()[la.order[k]], b.universe()[lb.order[k]]);
  std::sort(bijection.begin(), bijection.end());
  return bijection;
}

std::vector<IsomorphismClass> partition_into_classes(std::span<const SetRepresentation> reps) {
  std::map<CanonicalForm, std::size_t> slot;
  std::vector<IsomorphismClass> classes;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    auto form = canonical_form(reps[i]);
    auto [it, inserted] = slot.emplace(form, classes.size());
    if (inserted) classes.push_back({std::move(form), reps[i], {}});
    classes[it->second].members.push_back(i);
  }
  std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) { return x.form < y.form; });
  return classes;
}

}  // namespace setrep
