#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace strcg {

// GF(p^k) in a polynomial basis. Elements are canonical codes
// sum a_i p^i for the reduced polynomial a_0 + a_1 x + ... + a_{k-1} x^{k-1},
// so codes run over 0..p^k-1 and code order is the documented element order.
//
// The modulus is a monic irreducible polynomial of degree k over GF(p),
// stored as coefficients c_0..c_k (little-endian, c_k = 1). When none is
// supplied the default is the lexicographically smallest monic irreducible,
// comparing coefficient vectors as base-p integers; for GF(4) that is
// x^2 + x + 1.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  static std::shared_ptr<const FiniteField> prime(int p);
  static std::shared_ptr<const FiniteField> extension(int p, int k);
  static std::shared_ptr<const FiniteField> extension(int p, int k,
                                                      std::vector<int> modulus);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  std::uint64_t order() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;  // throws std::domain_error on zero
  Elem pow(Elem a, std::uint64_t e) const;

  // Integer reduced mod p, as a constant polynomial.
  Elem from_int(long long v) const;
  // Little-endian coefficients, any integers, length <= k; reduced mod p.
  Elem from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(Elem a) const;

  bool is_valid(Elem a) const { return a < q_; }

  // "3" or "2^2"
  std::string name() const;

  bool operator==(const FiniteField& rhs) const {
    return p_ == rhs.p_ && k_ == rhs.k_ && modulus_ == rhs.modulus_;
  }

  static std::vector<int> default_modulus(int p, int k);

 private:
  FiniteField(int p, int k, std::vector<int> modulus);

  int p_;
  int k_;
  std::uint64_t q_;
  std::vector<int> modulus_;       // c_0..c_k
  std::vector<Elem> reduce_pows_;  // x^(k+t) mod modulus, t = 0..k-2, as codes
};

using FieldPtr = std::shared_ptr<const FiniteField>;

}  // namespace strcg
