#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "strcg/gf.hpp"
#include "strcg/perm.hpp"
#include "strcg/permgroup.hpp"

namespace strcg {

// Square matrix over a finite field, acting on row vectors: x maps to xM,
// so row i of M is the image of basis vector e_i and products compose
// left-to-right like permutations.
class Matrix {
 public:
  using Elem = FiniteField::Elem;

  Matrix(FieldPtr field, int dim);  // zero matrix
  static Matrix identity(FieldPtr field, int dim);
  static Matrix from_rows(FieldPtr field, const std::vector<std::vector<int>>& rows);

  const FieldPtr& field() const { return field_; }
  int dim() const { return dim_; }

  Elem at(int r, int c) const { return a_[r * dim_ + c]; }
  void set(int r, int c, Elem v) { a_[r * dim_ + c] = v; }

  Matrix operator*(const Matrix& rhs) const;
  Matrix transpose() const;
  std::optional<Matrix> inverse() const;  // nullopt when singular
  bool is_invertible() const { return inverse().has_value(); }

  bool is_identity() const;
  bool operator==(const Matrix& rhs) const;

  // Least k >= 1 with M^k = I; requires invertibility, throws past the cap.
  std::uint64_t order(std::uint64_t cap = 1'000'000) const;

  std::vector<Elem> apply_row(std::span<const Elem> x) const;

  // "[[1,0],[0,1]]"; extension-field entries as coefficient lists.
  std::string to_string() const;

 private:
  FieldPtr field_;
  int dim_;
  std::vector<Elem> a_;  // row-major
};

// Symmetric bilinear form B(x, y) = x F y^T.
class BilinearForm {
 public:
  explicit BilinearForm(Matrix gram);  // validates symmetry

  const Matrix& gram() const { return gram_; }
  const FieldPtr& field() const { return gram_.field(); }
  int dim() const { return gram_.dim(); }

  FiniteField::Elem evaluate(std::span<const FiniteField::Elem> x,
                             std::span<const FiniteField::Elem> y) const;
  bool nondegenerate() const { return gram_.is_invertible(); }

 private:
  Matrix gram_;
};

// True iff M F M^T = F under the row-vector action.
bool is_isometry(const Matrix& m, const BilinearForm& form);

// Reflection in the 1-space <v> relative to the form:
// x maps to x - 2 B(x,v)/B(v,v) v. Requires odd characteristic and
// B(v,v) != 0; the result is an involutory isometry negating v and fixing
// v-perp pointwise.
Matrix reflection(const BilinearForm& form, std::span<const FiniteField::Elem> v);

// Permutation image of a matrix representation on the q^d - 1 nonzero row
// vectors. Vectors are ordered lexicographically by coordinate tuple with
// the first coordinate most significant, field elements by canonical code;
// under that order the 1-based point of a vector is exactly its base-q
// value, which is the point dictionary.
class MatrixPermImage {
 public:
  MatrixPermImage(FieldPtr field, int dim, std::vector<Permutation> perms);

  const std::vector<Permutation>& perms() const { return perms_; }
  const FieldPtr& field() const { return field_; }
  int dim() const { return dim_; }
  std::uint64_t domain_size() const;  // q^d - 1

  std::vector<FiniteField::Elem> point_vector(std::uint64_t point) const;  // 1-based
  std::uint64_t vector_point(std::span<const FiniteField::Elem> v) const;

 private:
  FieldPtr field_;
  int dim_;
  std::vector<Permutation> perms_;
};

// Faithful conversion to permutations of the nonzero vectors; errors when
// q^d - 1 exceeds the budget or a generator is singular.
MatrixPermImage matrix_rep_to_perm(const std::vector<Matrix>& gens,
                                   const ElementBudget& budget = {});

}  // namespace strcg
