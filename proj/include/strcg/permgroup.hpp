#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "strcg/perm.hpp"

namespace strcg {

// Cap for explicit element enumeration.
struct ElementBudget {
  std::uint64_t max_elements = 10'000'000;
};

namespace detail {
class Bsgs;
}

// A permutation group given by generators, with a base and strong generating
// set built at construction (randomized Schreier-Sims seeded from `seed`,
// followed by a deterministic verification pass, so order and membership are
// exact regardless of the seed). Base points are chosen as smallest moved
// points. Immutable; safe to share across threads.
class PermGroup {
 public:
  static constexpr std::uint64_t kDefaultSeed = 0x5eed5eed;

  PermGroup(int degree, std::vector<Permutation> generators,
            std::uint64_t seed = kDefaultSeed);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  std::uint64_t order() const;

  bool contains(const Permutation& x) const;
  bool contains(std::span<const int> images) const;

  // Base points of the stabilizer chain (0-based).
  const std::vector<int>& base() const;

  // Streams every group element as a 0-based image array; deterministic BFS
  // order. Return false from visit to stop early. Throws OverflowError when
  // the group has more than budget.max_elements elements.
  void for_each_element(const ElementBudget& budget,
                        const std::function<bool(std::span<const int>)>& visit) const;

  // Full element set, sorted; intended for small groups.
  std::vector<Permutation> elements(const ElementBudget& budget = {}) const;

  // |G| by BFS closure, independent of the BSGS (cross-check path).
  std::uint64_t closure_size(const ElementBudget& budget = {}) const;

  // Orbit partition of {0,...,degree-1}; parts sorted, listed by smallest point.
  std::vector<std::vector<int>> orbits() const;
  bool is_transitive() const;

 private:
  int degree_;
  std::vector<Permutation> gens_;
  std::shared_ptr<const detail::Bsgs> bsgs_;
};

// The element set of <g> (sorted); errors with OverflowError past the budget.
std::vector<Permutation> closure(const PermGroup& g, const ElementBudget& budget = {});

std::uint64_t group_order(const PermGroup& g);

// A ∩ B, computed by enumerating the group of smaller BSGS order and
// filtering by membership in the other. Sorted.
std::vector<Permutation> intersect(const PermGroup& a, const PermGroup& b,
                                   const ElementBudget& budget = {});

}  // namespace strcg
