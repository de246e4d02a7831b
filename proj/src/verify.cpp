#include "strcg/verify.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "strcg/errors.hpp"

namespace strcg {

namespace {

std::string subset_string(const std::vector<int>& subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(subset[i]);
  }
  out += '}';
  return out;
}

std::vector<int> mask_to_indices(unsigned mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

// Subgroup <rho_i : i in mask> of a permutation-engine rep.
PermGroup subset_group(const SggiRep& rep, unsigned mask, std::uint64_t seed) {
  std::vector<Permutation> gens;
  for (int i : mask_to_indices(mask)) gens.push_back(rep.perm_gens()[i]);
  if (gens.empty()) gens.push_back(Permutation(rep.degree()));
  return PermGroup(rep.degree(), std::move(gens), seed);
}

// Streams the smaller of a, b looking for an element of a ∩ b outside sub.
// Returns the witness element if one exists.
std::optional<Permutation> intersection_excess(const PermGroup& a, const PermGroup& b,
                                               const PermGroup& sub,
                                               const ElementBudget& budget) {
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  std::optional<Permutation> witness;
  small.for_each_element(budget, [&](std::span<const int> images) {
    if (large.contains(images) && !sub.contains(images)) {
      witness = Permutation::from_images(std::vector<int>(images.begin(), images.end()));
      return false;
    }
    return true;
  });
  return witness;
}

std::optional<FailureWitness> exhaustive_check(const SggiRep& rep,
                                               const ElementBudget& budget,
                                               std::uint64_t seed) {
  int n = rep.rank();
  unsigned full = (n >= 32) ? 0 : ((1u << n) - 1);
  if (n >= 32) throw std::invalid_argument("rank too large for exhaustive subset check");

  std::vector<std::optional<PermGroup>> groups(full + 1);
  auto group_of = [&](unsigned mask) -> const PermGroup& {
    if (!groups[mask]) groups[mask] = subset_group(rep, mask, seed);
    return *groups[mask];
  };

  // Unordered pairs with neither side contained in the other, in increasing
  // combined size; full-set and nested pairs are trivially satisfied.
  struct Pair {
    unsigned i, j;
  };
  std::vector<Pair> pairs;
  for (unsigned i = 1; i <= full; ++i) {
    for (unsigned j = i + 1; j <= full; ++j) {
      if ((i & j) == i || (i & j) == j) continue;
      pairs.push_back({i, j});
    }
  }
  std::stable_sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
    int sa = std::popcount(a.i) + std::popcount(a.j);
    int sb = std::popcount(b.i) + std::popcount(b.j);
    if (sa != sb) return sa < sb;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });

  for (const Pair& pr : pairs) {
    const PermGroup& gi = group_of(pr.i);
    const PermGroup& gj = group_of(pr.j);
    const PermGroup& gk = group_of(pr.i & pr.j);
    std::optional<Permutation> excess;
    try {
      excess = intersection_excess(gi, gj, gk, budget);
    } catch (const OverflowError& e) {
      throw OverflowError("closure overflow while enumerating the subgroup on " +
                              subset_string(mask_to_indices(
                                  group_of(pr.i).order() <= group_of(pr.j).order() ? pr.i
                                                                                   : pr.j)),
                          e.cap());
    }
    if (excess) {
      return IntersectionWitness{mask_to_indices(pr.i), mask_to_indices(pr.j),
                                 excess->cycle_string()};
    }
  }
  return std::nullopt;
}

// Facet recursion over index intervals [lo, hi): both facet subsequences
// recursively, then the single middle intersection. Memoized; the two
// facets share the middle interval.
class RecursiveChecker {
 public:
  RecursiveChecker(const SggiRep& rep, const ElementBudget& budget, std::uint64_t seed)
      : rep_(rep), budget_(budget), seed_(seed) {}

  std::optional<FailureWitness> run() { return check(0, rep_.rank()); }

 private:
  const SggiRep& rep_;
  const ElementBudget& budget_;
  std::uint64_t seed_;
  std::map<std::pair<int, int>, bool> done_;
  std::map<std::pair<int, int>, PermGroup> groups_;

  const PermGroup& interval_group(int lo, int hi) {
    auto key = std::make_pair(lo, hi);
    auto it = groups_.find(key);
    if (it == groups_.end()) {
      std::vector<Permutation> gens;
      for (int i = lo; i < hi; ++i) gens.push_back(rep_.perm_gens()[i]);
      if (gens.empty()) gens.push_back(Permutation(rep_.degree()));
      it = groups_.emplace(key, PermGroup(rep_.degree(), std::move(gens), seed_)).first;
    }
    return it->second;
  }

  std::optional<FailureWitness> check(int lo, int hi) {
    if (hi - lo <= 1) return std::nullopt;
    auto key = std::make_pair(lo, hi);
    if (done_.count(key)) return std::nullopt;
    if (hi - lo == 2) {
      if (rep_.perm_gens()[lo] == rep_.perm_gens()[lo + 1]) {
        return IntersectionWitness{{lo}, {lo + 1}, rep_.perm_gens()[lo].cycle_string()};
      }
      done_[key] = true;
      return std::nullopt;
    }
    if (auto w = check(lo, hi - 1)) return w;
    if (auto w = check(lo + 1, hi)) return w;
    const PermGroup& left = interval_group(lo, hi - 1);
    const PermGroup& right = interval_group(lo + 1, hi);
    const PermGroup& middle = interval_group(lo + 1, hi - 1);
    std::optional<Permutation> excess;
    try {
      excess = intersection_excess(left, right, middle, budget_);
    } catch (const OverflowError& e) {
      std::vector<int> span_lo, span_hi;
      for (int i = lo; i < hi - 1; ++i) span_lo.push_back(i);
      throw OverflowError(
          "closure overflow while enumerating the facet subgroup on " + subset_string(span_lo),
          e.cap());
    }
    if (excess) {
      std::vector<int> si, sj;
      for (int i = lo; i < hi - 1; ++i) si.push_back(i);
      for (int i = lo + 1; i < hi; ++i) sj.push_back(i);
      return IntersectionWitness{si, sj, excess->cycle_string()};
    }
    done_[key] = true;
    return std::nullopt;
  }
};

}  // namespace

std::string SchlafliType::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(entries[i]);
  }
  out += ']';
  return out;
}

VerificationReport check_sggi(const SggiRep& rep) {
  VerificationReport report;
  int n = rep.rank();
  report.pair_order_table.assign(n, std::vector<std::uint64_t>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      report.pair_order_table[i][j] = rep.product_order(i, j);
    }
  }

  report.is_sggi = true;
  for (int i = 0; i < n && report.is_sggi; ++i) {
    if (rep.generator_is_identity(i)) {
      report.is_sggi = false;
      report.failure_witness =
          PreconditionWitness{"generator " + std::to_string(i) + " is the identity"};
    } else if (!rep.generator_is_involution(i)) {
      report.is_sggi = false;
      report.failure_witness = PreconditionWitness{
          "generator " + std::to_string(i) + " is not an involution (order " +
          std::to_string(rep.generator_order(i)) + ")"};
    }
  }
  for (int i = 0; i < n && report.is_sggi; ++i) {
    for (int j = i + 2; j < n && report.is_sggi; ++j) {
      if (report.pair_order_table[i][j] > 2) {
        report.is_sggi = false;
        report.failure_witness = PreconditionWitness{
            "generators " + std::to_string(i) + " and " + std::to_string(j) +
            " do not commute"};
      }
    }
  }

  if (report.is_sggi) {
    SchlafliType type;
    for (int i = 1; i < n; ++i) type.entries.push_back(report.pair_order_table[i - 1][i]);
    report.is_irreducible =
        std::all_of(type.entries.begin(), type.entries.end(),
                    [](std::uint64_t p) { return p > 2; });
    report.schlafli = std::move(type);
  }
  return report;
}

SchlafliType schlafli_type(const SggiRep& rep) {
  VerificationReport report = check_sggi(rep);
  if (!report.is_sggi) throw std::invalid_argument("representation is not an sggi");
  return *report.schlafli;
}

bool is_irreducible(const SggiRep& rep) {
  VerificationReport report = check_sggi(rep);
  if (!report.is_sggi) throw std::invalid_argument("representation is not an sggi");
  return report.is_irreducible;
}

VerificationReport verify(const SggiRep& rep, VerifyMethod method,
                          const ElementBudget& budget, std::uint64_t seed) {
  VerificationReport report = check_sggi(rep);
  report.method = method;
  if (!report.is_sggi) return report;

  SggiRep prep = rep.to_permutation(budget);
  std::optional<FailureWitness> witness;
  if (method == VerifyMethod::exhaustive) {
    witness = exhaustive_check(prep, budget, seed);
  } else {
    witness = RecursiveChecker(prep, budget, seed).run();
  }
  if (witness) {
    report.is_string_c_group = false;
    report.failure_witness = std::move(witness);
  } else {
    report.is_string_c_group = true;
  }
  report.group_order = prep.group(budget, seed).order();
  return report;
}

std::vector<SggiRep> search_reps(const PermGroup& group, int rank,
                                 const ElementBudget& budget,
                                 std::uint64_t search_bound) {
  if (rank < 2) throw std::invalid_argument("search rank must be at least 2");
  std::uint64_t order = group.order();
  if (order > search_bound) {
    throw std::invalid_argument("group order " + std::to_string(order) +
                                " exceeds the exhaustive search bound " +
                                std::to_string(search_bound));
  }

  std::vector<Permutation> involutions;
  for (const Permutation& x : group.elements(budget)) {
    if (x.is_involution()) involutions.push_back(x);
  }

  std::vector<SggiRep> results;
  std::vector<const Permutation*> chosen;
  auto extend = [&](auto&& self, int pos) -> void {
    if (pos == rank) {
      std::vector<Permutation> gens;
      gens.reserve(rank);
      for (const Permutation* p : chosen) gens.push_back(*p);
      PermGroup generated(group.degree(), gens);
      if (generated.order() != order) return;
      SggiRep rep(group.degree(), std::move(gens));
      VerificationReport report = verify(rep, VerifyMethod::recursive, budget);
      if (report.is_string_c_group && report.is_irreducible) {
        results.push_back(std::move(rep));
      }
      return;
    }
    for (const Permutation& cand : involutions) {
      bool ok = true;
      for (int j = 0; j < pos && ok; ++j) {
        if (pos - j > 1) {
          ok = ((*chosen[j] * cand).order() <= 2);  // commuting property
        } else {
          ok = ((*chosen[j] * cand).order() > 2);  // irreducibility
        }
      }
      if (!ok) continue;
      chosen.push_back(&cand);
      self(self, pos + 1);
      chosen.pop_back();
    }
  };
  extend(extend, 0);
  return results;
}

}  // namespace strcg
