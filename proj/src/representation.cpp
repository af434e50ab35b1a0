#include "setrep/representation.hpp"

#include <algorithm>
#include <bit>

#include "setrep/errors.hpp"

namespace setrep {

SetRepresentation::SetRepresentation(std::vector<std::vector<int>> sets, std::vector<std::string> labels)
    : sets_(std::move(sets)), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != sets_.size())
    throw DomainError("representation has " + std::to_string(sets_.size()) + " sets but " +
                      std::to_string(labels_.size()) + " labels");
  for (std::size_t i = 0; i < sets_.size(); ++i) {
    auto& s = sets_[i];
    if (s.empty())
      throw EmptySetError("empty set for vertex " + (labels_.empty() ? std::to_string(i) : "'" + labels_[i] + "'"));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    universe_.insert(universe_.end(), s.begin(), s.end());
  }
  std::sort(universe_.begin(), universe_.end());
  universe_.erase(std::unique(universe_.begin(), universe_.end()), universe_.end());
}

SetRepresentation SetRepresentation::with_labels(std::vector<std::string> labels) const {
  return SetRepresentation(sets_, std::move(labels));
}

namespace {

std::size_t intersection_size(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

}  // namespace

CategoryFlags category_flags(const SetRepresentation& s) {
  CategoryFlags f{true, true, true, true};
  const auto& sets = s.sets();
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].size() != sets[0].size()) f.uniform = false;
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      const std::size_t common = intersection_size(sets[i], sets[j]);
      if (common > 1) f.simple = false;
      if (sets[i] == sets[j]) f.distinct = false;
      if (common == sets[i].size() || common == sets[j].size()) f.antichain = false;
    }
  }
  return f;
}

RepresentsResult represents(const SetRepresentation& s, const Graph& h) {
  if (s.size() != h.vertex_count())
    throw DomainError("representation has " + std::to_string(s.size()) + " sets, graph has " +
                      std::to_string(h.vertex_count()) + " vertices");
  const auto& sets = s.sets();
  for (VertexId i = 0; i < sets.size(); ++i) {
    for (VertexId j = i + 1; j < sets.size(); ++j) {
      const bool meet = intersection_size(sets[i], sets[j]) > 0;
      if (meet != h.adjacent(i, j)) return {false, std::pair{i, j}};
    }
  }
  return {true, std::nullopt};
}

std::vector<std::uint64_t> to_masks(const SetRepresentation& s) {
  const auto& u = s.universe();
  if (u.size() > 64) throw DomainError("universe of size " + std::to_string(u.size()) + " exceeds 64");
  std::vector<std::uint64_t> out;
  out.reserve(s.size());
  for (const auto& set : s.sets()) {
    std::uint64_t m = 0;
    for (int x : set) {
      const auto pos = std::lower_bound(u.begin(), u.end(), x) - u.begin();
      m |= std::uint64_t{1} << pos;
    }
    out.push_back(m);
  }
  return out;
}

SetRepresentation from_masks(std::span<const std::uint64_t> masks, std::vector<std::string> labels,
                             int first_element) {
  std::vector<std::vector<int>> sets;
  sets.reserve(masks.size());
  for (auto m : masks) {
    std::vector<int> s;
    for (; m != 0; m &= m - 1) s.push_back(first_element + std::countr_zero(m));
    sets.push_back(std::move(s));
  }
  return SetRepresentation(std::move(sets), std::move(labels));
}

}  // namespace setrep
