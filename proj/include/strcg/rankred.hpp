#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "strcg/rep.hpp"
#include "strcg/verify.hpp"

namespace strcg {

enum class Direction { left, right };

// One application of the rank-reduction substitution. Left direction maps
// (rho_0, ..., rho_{n-1}) to (rho_1, rho_0 rho_2, rho_3, ..., rho_{n-1});
// right is the mirror image (rho_0, ..., rho_{n-4}, rho_{n-1} rho_{n-3},
// rho_{n-2}), equal to reversing, reducing left, and reversing back.
//
// The reduced sequence is always constructed; the hypotheses are reported
// as flags, never used as gates.
struct ReductionOutcome {
  SggiRep reduced;
  Direction direction = Direction::left;
  // rho_0 in <rho_0 rho_2, rho_3> (mirrored for right reduction), decided by
  // enumerating the dihedral group as alternating words.
  bool theorem_condition = false;
  // |rho_2 rho_3| odd (mirrored for right); implies theorem_condition.
  bool odd_condition = false;
  // Orders of the generated groups agree (BSGS on the permutation engine).
  bool group_preserved = false;
  // theorem_condition and the input was a verified irreducible string
  // C-group of rank >= 4.
  bool guaranteed = false;
  std::uint64_t original_order = 0;
  std::uint64_t reduced_order = 0;
  // Verification of the reduced representation, when a caller requested it.
  std::optional<VerificationReport> reduced_report;
};

// Requires rank >= 4, a valid sggi, and irreducibility. The input must
// verify as a string C-group unless force is set (then guaranteed stays
// false). input_verified short-circuits the internal verification when the
// caller already knows the answer.
ReductionOutcome reduce_once(const SggiRep& rep, Direction direction,
                             const ElementBudget& budget = {}, bool force = false,
                             std::optional<bool> input_verified = std::nullopt,
                             std::uint64_t seed = PermGroup::kDefaultSeed);

// Where the examined odd run starts. Iterated reduction consumes type
// entries from p_3 onward (each step needs the current third entry odd);
// the stricter second-entry convention is computed as well so callers can
// report both.
enum class RunVariant { second_entry, third_entry };

// Length of the leading odd run in the Schlafli type that licenses iterated
// reduction: t = max{ j in {0..n-3} : p_{s+i} odd for all 0 <= i <= j },
// where s is 2 or 3 by variant and an entry past p_{n-1} ends the run.
// Absent when the first required entry is even or missing. Guaranteed ranks
// are n - i for i in {0..t}.
std::optional<int> guaranteed_run_length(const SchlafliType& type, RunVariant variant);

struct ReductionChain {
  std::vector<ReductionOutcome> steps;  // accepted steps only
  // The step that ended the chain early, if any (not counted in steps).
  std::optional<ReductionOutcome> rejected_step;
  std::string stop_reason;
  bool reached_target = false;
};

// Iterated left reduction down to target_rank (3 <= target_rank < rank).
// Stops early when a step fails to preserve the group order, when
// verify_each is set and the reduced representation fails verification, or
// when a step's preconditions fail (the reason is recorded, progress kept).
ReductionChain reduce_iterate(const SggiRep& rep, int target_rank, bool verify_each,
                              const ElementBudget& budget = {},
                              std::uint64_t seed = PermGroup::kDefaultSeed);

}  // namespace strcg
