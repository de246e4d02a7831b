#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace strcg {

// Permutation of the 1-based domain {1,...,m}. Internally points are stored
// 0-based; all text I/O (cycle notation) is 1-based.
//
// Products compose left-to-right: (a * b) applies a first, then b.
class Permutation {
 public:
  // Identity on m points.
  explicit Permutation(int degree);

  // images[i] is the 0-based image of point i. Must be a bijection.
  static Permutation from_images(std::vector<int> images);

  // Disjoint-cycle notation, 1-based, e.g. "(1,2)(3,4)". Spaces are allowed
  // as separators; "()" or an empty string denotes the identity.
  static Permutation from_cycles(int degree, std::string_view text);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int point) const { return img_[point]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  bool is_involution() const;  // order divides 2 and not identity
  int smallest_moved_point() const;  // -1 for the identity

  Permutation inverse() const;
  Permutation operator*(const Permutation& rhs) const;

  // Least k >= 1 with p^k = id; equals lcm of cycle lengths.
  std::uint64_t order() const;

  // Nontrivial cycles, each rotated to start at its smallest point, sorted
  // by that point. 0-based.
  std::vector<std::vector<int>> cycles() const;

  // Canonical 1-based cycle notation: "(1,2)(3,4)"; identity is "()".
  std::string cycle_string() const;

  bool operator==(const Permutation&) const = default;
  std::strong_ordering operator<=>(const Permutation& rhs) const {
    return img_ <=> rhs.img_;
  }

 private:
  Permutation() = default;
  std::vector<int> img_;
};

// a then b; degrees must match.
Permutation compose(const Permutation& a, const Permutation& b);

std::uint64_t element_order(const Permutation& a);

// g^-1 * p * g, the relabeling of p by g.
Permutation conjugate(const Permutation& p, const Permutation& g);

}  // namespace strcg
