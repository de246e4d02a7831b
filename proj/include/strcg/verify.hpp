#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "strcg/rep.hpp"

namespace strcg {

// Orders of consecutive generator products [p_1, ..., p_{n-1}].
struct SchlafliType {
  std::vector<std::uint64_t> entries;

  std::string to_string() const;  // "[4,4,6]"
  bool operator==(const SchlafliType&) const = default;
};

enum class VerifyMethod { exhaustive, recursive };

// An element of <rho_i : i in I> ∩ <rho_j : j in J> outside <rho_k : k in I∩J>.
struct IntersectionWitness {
  std::vector<int> subset_i;
  std::vector<int> subset_j;
  std::string element;
};

struct PreconditionWitness {
  std::string detail;
};

using FailureWitness = std::variant<IntersectionWitness, PreconditionWitness>;

struct VerificationReport {
  bool is_sggi = false;
  // pair_order_table[i][j] = |rho_i rho_j| (diagonal is 1 for involutions).
  std::vector<std::vector<std::uint64_t>> pair_order_table;
  std::optional<SchlafliType> schlafli;  // present iff is_sggi
  bool is_irreducible = false;
  bool is_string_c_group = false;
  VerifyMethod method = VerifyMethod::recursive;
  std::optional<FailureWitness> failure_witness;
  std::optional<std::uint64_t> group_order;  // filled by verify()
};

// Involution and commuting-property checks; failures are report content,
// never exceptions. Fills the pair order table and, when the checks pass,
// the Schlafli type and irreducibility flag.
VerificationReport check_sggi(const SggiRep& rep);

// These two require the rep to pass check_sggi and throw otherwise.
SchlafliType schlafli_type(const SggiRep& rep);
bool is_irreducible(const SggiRep& rep);

// Full string C-group verification.
//
// exhaustive: tests <rho_I> ∩ <rho_J> = <rho_{I∩J}> over all unordered
// subset pairs with neither side contained in the other, in increasing
// size, stopping at the first failure.
//
// recursive: checks the two facet subsequences recursively and the single
// intersection <rho_0..rho_{n-2}> ∩ <rho_1..rho_{n-1}> = <rho_1..rho_{n-2}>,
// with rank <= 2 base cases. The two methods agree on every input.
//
// Matrix representations are converted to permutations first; conversion
// and subgroup enumeration both respect the budget.
VerificationReport verify(const SggiRep& rep, VerifyMethod method,
                          const ElementBudget& budget = {},
                          std::uint64_t seed = PermGroup::kDefaultSeed);

// Every ordered involution sequence of the given rank that generates the
// whole group and verifies as an irreducible string C-group. Exhaustive;
// the group order must not exceed search_bound.
std::vector<SggiRep> search_reps(const PermGroup& group, int rank,
                                 const ElementBudget& budget = {},
                                 std::uint64_t search_bound = 2000);

}  // namespace strcg
