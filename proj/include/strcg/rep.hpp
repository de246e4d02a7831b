#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "strcg/matrix.hpp"
#include "strcg/perm.hpp"
#include "strcg/permgroup.hpp"

namespace strcg {

// An ordered generator sequence rho_0, ..., rho_{n-1} over one of the two
// group engines. The central object: verification, reduction, and the CLI
// all operate on SggiRep values. Nothing about the sggi axioms is assumed
// at construction; checks live in verify.hpp.
class SggiRep {
 public:
  enum class Engine { permutation, matrix };

  // Permutation engine; gens may be empty (rank 0) since the degree is given.
  SggiRep(int degree, std::vector<Permutation> gens, std::string label = "");
  // Matrix engine; gens must be non-empty and share field/dimension.
  explicit SggiRep(std::vector<Matrix> gens, std::string label = "");

  Engine engine() const;
  int rank() const;
  const std::string& label() const { return label_; }
  SggiRep with_label(std::string label) const;

  // Permutation-engine accessors.
  int degree() const;
  const std::vector<Permutation>& perm_gens() const;
  // Matrix-engine accessors.
  const std::vector<Matrix>& matrix_gens() const;
  const FieldPtr& field() const;
  int dim() const;

  bool generator_is_identity(int i) const;
  bool generator_is_involution(int i) const;
  bool generators_equal(int i, int j) const;
  std::uint64_t generator_order(int i) const;
  // |rho_i rho_j|
  std::uint64_t product_order(int i, int j) const;

  // Subsequence (rho_i : i in indices, in the given order).
  SggiRep sub(const std::vector<int>& indices) const;
  SggiRep reversed() const;
  // Relabels every generator by g (permutation engine only).
  SggiRep conjugated(const Permutation& g) const;

  // Faithful permutation form; the identity transform on the permutation
  // engine, matrix_rep_to_perm on the matrix engine.
  SggiRep to_permutation(const ElementBudget& budget = {}) const;

  PermGroup group(const ElementBudget& budget = {},
                  std::uint64_t seed = PermGroup::kDefaultSeed) const;

  // Engine-native display of one generator (cycle string / row list).
  std::string generator_string(int i) const;

  bool operator==(const SggiRep& rhs) const;

 private:
  struct PermData {
    int degree;
    std::vector<Permutation> gens;
  };
  struct MatData {
    std::vector<Matrix> gens;
  };

  std::variant<PermData, MatData> data_;
  std::string label_;
};

}  // namespace strcg
