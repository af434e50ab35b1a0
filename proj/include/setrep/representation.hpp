#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "setrep/graph.hpp"

namespace setrep {

/// Ordered family of nonempty integer sets, one per represented vertex. The
/// universe is always the union of the sets.
class SetRepresentation {
 public:
  SetRepresentation() = default;
  /// Sorts and deduplicates each set. Throws EmptySetError on an empty set
  /// and DomainError when `labels` is nonempty with the wrong length.
  explicit SetRepresentation(std::vector<std::vector<int>> sets, std::vector<std::string> labels = {});

  const std::vector<int>& universe() const noexcept { return universe_; }
  const std::vector<std::vector<int>>& sets() const noexcept { return sets_; }
  const std::vector<int>& set(std::size_t i) const { return sets_.at(i); }
  std::size_t size() const noexcept { return sets_.size(); }
  std::size_t universe_size() const noexcept { return universe_.size(); }

  /// Vertex labels; empty when the representation is unlabeled.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  SetRepresentation with_labels(std::vector<std::string> labels) const;

  /// Applies `f` to every universe element.
  template <typename F>
  SetRepresentation relabeled(F&& f) const {
    auto sets = sets_;
    for (auto& s : sets)
      for (auto& x : s) x = f(x);
    return SetRepresentation(std::move(sets), labels_);
  }

  friend bool operator==(const SetRepresentation&, const SetRepresentation&) = default;

 private:
  std::vector<int> universe_;
  std::vector<std::vector<int>> sets_;
  std::vector<std::string> labels_;
};

struct CategoryFlags {
  bool distinct = false;
  bool antichain = false;
  bool uniform = false;
  bool simple = false;

  friend bool operator==(const CategoryFlags&, const CategoryFlags&) = default;
};

/// Antichain treats equal sets as a violation, so antichain implies distinct.
CategoryFlags category_flags(const SetRepresentation& s);

struct RepresentsResult {
  bool ok = false;
  /// First pair (i < j) whose intersection disagrees with adjacency.
  std::optional<std::pair<VertexId, VertexId>> witness;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks S_i ∩ S_j ≠ ∅ ⇔ ij ∈ E(h) for all pairs. Throws DomainError when
/// the set count differs from the vertex count.
RepresentsResult represents(const SetRepresentation& s, const Graph& h);

/// Universe elements as bit positions 0..|U|-1, in sorted element order.
/// Throws DomainError when |U| > 64.
std::vector<std::uint64_t> to_masks(const SetRepresentation& s);
SetRepresentation from_masks(std::span<const std::uint64_t> masks, std::vector<std::string> labels = {},
                             int first_element = 1);

}  // namespace setrep
