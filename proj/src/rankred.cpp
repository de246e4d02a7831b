#include "strcg/rankred.hpp"

#include <stdexcept>

#include "strcg/errors.hpp"

namespace strcg {

namespace {

// Membership of target in the dihedral group <x, y> for involutions x, y:
// its 2|xy| elements are the alternating words (xy)^i and (xy)^i x.
template <typename E>
bool dihedral_contains(const E& x, const E& y, const E& target, const E& identity) {
  E c = x * y;
  E power = identity;
  do {
    if (power == target) return true;
    if (power * x == target) return true;
    power = power * c;
  } while (!(power == identity));
  return false;
}

// Is rho_t in <rho_a rho_b, rho_y>?
bool native_dihedral_contains(const SggiRep& rep, int a, int b, int y, int t) {
  if (rep.engine() == SggiRep::Engine::permutation) {
    const auto& g = rep.perm_gens();
    return dihedral_contains(g[a] * g[b], g[y], g[t], Permutation(rep.degree()));
  }
  const auto& g = rep.matrix_gens();
  return dihedral_contains(g[a] * g[b], g[y], g[t],
                           Matrix::identity(g[t].field(), g[t].dim()));
}

SggiRep build_reduced(const SggiRep& rep, Direction direction) {
  int n = rep.rank();
  if (rep.engine() == SggiRep::Engine::permutation) {
    const auto& g = rep.perm_gens();
    std::vector<Permutation> out;
    out.reserve(n - 1);
    if (direction == Direction::left) {
      out.push_back(g[1]);
      out.push_back(g[0] * g[2]);
      for (int i = 3; i < n; ++i) out.push_back(g[i]);
    } else {
      for (int i = 0; i <= n - 4; ++i) out.push_back(g[i]);
      out.push_back(g[n - 1] * g[n - 3]);
      out.push_back(g[n - 2]);
    }
    return SggiRep(rep.degree(), std::move(out), rep.label());
  }
  const auto& g = rep.matrix_gens();
  std::vector<Matrix> out;
  out.reserve(n - 1);
  if (direction == Direction::left) {
    out.push_back(g[1]);
    out.push_back(g[0] * g[2]);
    for (int i = 3; i < n; ++i) out.push_back(g[i]);
  } else {
    for (int i = 0; i <= n - 4; ++i) out.push_back(g[i]);
    out.push_back(g[n - 1] * g[n - 3]);
    out.push_back(g[n - 2]);
  }
  return SggiRep(std::move(out), rep.label());
}

}  // namespace

ReductionOutcome reduce_once(const SggiRep& rep, Direction direction,
                             const ElementBudget& budget, bool force,
                             std::optional<bool> input_verified, std::uint64_t seed) {
  int n = rep.rank();
  if (n < 4) {
    throw std::invalid_argument("rank reduction requires rank >= 4 (got " +
                                std::to_string(n) + ")");
  }
  VerificationReport sggi = check_sggi(rep);
  if (!sggi.is_sggi) {
    std::string detail = "input is not an sggi";
    if (sggi.failure_witness) {
      if (auto* pre = std::get_if<PreconditionWitness>(&*sggi.failure_witness)) {
        detail += ": " + pre->detail;
      }
    }
    throw std::invalid_argument(detail);
  }
  if (!sggi.is_irreducible) {
    throw std::invalid_argument("input is not irreducible (some consecutive product has order <= 2)");
  }

  bool verified = input_verified
                      ? *input_verified
                      : verify(rep, VerifyMethod::recursive, budget, seed).is_string_c_group;
  if (!verified && !force) {
    throw std::invalid_argument(
        "input is not a verified string C-group; pass force to reduce anyway");
  }

  ReductionOutcome out{build_reduced(rep, direction), direction,
                       false, false, false, false, 0, 0, std::nullopt};

  if (direction == Direction::left) {
    out.theorem_condition = native_dihedral_contains(rep, 0, 2, 3, 0);
    out.odd_condition = rep.product_order(2, 3) % 2 == 1;
  } else {
    out.theorem_condition = native_dihedral_contains(rep, n - 1, n - 3, n - 4, n - 1);
    out.odd_condition = rep.product_order(n - 3, n - 4) % 2 == 1;
  }

  out.original_order = rep.group(budget, seed).order();
  out.reduced_order = out.reduced.group(budget, seed).order();
  out.group_preserved = out.original_order == out.reduced_order;
  out.guaranteed = out.theorem_condition && verified;
  return out;
}

std::optional<int> guaranteed_run_length(const SchlafliType& type, RunVariant variant) {
  int n = static_cast<int>(type.entries.size()) + 1;  // rank
  if (n < 4) {
    throw std::invalid_argument("Schlafli type too short; rank >= 4 required");
  }
  // entries[idx] is p_{idx+1}
  int first = variant == RunVariant::second_entry ? 1 : 2;
  std::optional<int> t;
  for (int j = 0; j <= n - 3; ++j) {
    int idx = first + j;
    if (idx >= static_cast<int>(type.entries.size())) break;
    if (type.entries[idx] % 2 == 0) break;
    t = j;
  }
  return t;
}

ReductionChain reduce_iterate(const SggiRep& rep, int target_rank, bool verify_each,
                              const ElementBudget& budget, std::uint64_t seed) {
  if (target_rank < 3 || target_rank >= rep.rank()) {
    throw std::invalid_argument("target rank must satisfy 3 <= target < rank");
  }
  ReductionChain chain;
  SggiRep current = rep;
  std::optional<bool> current_verified;  // first step verifies internally
  bool force_current = false;

  while (current.rank() > target_rank) {
    ReductionOutcome outcome{current, Direction::left,
                             false, false, false, false, 0, 0, std::nullopt};
    try {
      outcome = reduce_once(current, Direction::left, budget, force_current,
                            current_verified, seed);
    } catch (const std::invalid_argument& e) {
      if (chain.steps.empty()) throw;  // bad original input; no progress to keep
      chain.stop_reason = e.what();
      return chain;
    } catch (const OverflowError& e) {
      if (chain.steps.empty()) throw;
      chain.stop_reason = e.what();
      return chain;
    }

    if (!outcome.group_preserved) {
      chain.stop_reason = "group not preserved";
      chain.rejected_step = std::move(outcome);
      return chain;
    }
    if (verify_each) {
      outcome.reduced_report = verify(outcome.reduced, VerifyMethod::recursive, budget, seed);
      if (!outcome.reduced_report->is_string_c_group) {
        chain.stop_reason = "verification failed";
        chain.rejected_step = std::move(outcome);
        return chain;
      }
      current_verified = true;
      force_current = false;
    } else {
      // a guaranteed step is a verified string C-group; no need to re-run
      // verification before the next step
      if (outcome.guaranteed) {
        current_verified = true;
        force_current = false;
      } else {
        current_verified = false;
        force_current = true;
      }
    }
    current = outcome.reduced;
    chain.steps.push_back(std::move(outcome));
  }
  chain.stop_reason = "target rank reached";
  chain.reached_target = true;
  return chain;
}

}  // namespace strcg
