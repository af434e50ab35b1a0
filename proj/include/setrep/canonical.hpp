#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "setrep/representation.hpp"

namespace setrep {

/// Isomorphism invariant of a set family: the multiset of sets relabeled to
/// universe positions 0..n-1 by the least ordering reachable through
/// refinement and individualization, stored sorted.
struct CanonicalForm {
  int universe = 0;
  std::vector<std::uint64_t> sets;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// order[k] is the input bit position placed at canonical position k.
  std::vector<int> order;
};

/// Canonical labeling of a family given as bitmasks over `universe` elements.
CanonicalLabeling canonical_labeling(std::span<const std::uint64_t> masks, int universe);

CanonicalForm canonical_form(const SetRepresentation& s);

/// Universe bijection (pairs element -> element') under which the multiset of
/// sets of `a` maps onto that of `b`; nullopt when none exists.
std::optional<std::vector<std::pair<int, int>>> isomorphic(const SetRepresentation& a, const SetRepresentation& b);

struct IsomorphismClass {
  CanonicalForm form;
  SetRepresentation representative;
  /// Indices into the input list, ascending.
  std::vector<std::size_t> members;
};

/// Groups representations by isomorphism; classes come out in canonical-form
/// order and each representative is its class's first input member.
std::vector<IsomorphismClass> partition_into_classes(std::span<const SetRepresentation> reps);

}  // namespace setrep
