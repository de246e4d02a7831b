#include "strcg/gf.hpp"

#include <algorithm>
#include <stdexcept>

namespace strcg {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int mod_p(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

// Little-endian coefficient vectors over GF(p), top coefficient nonzero or
// the vector empty (the zero polynomial).
using Poly = std::vector<int>;

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mod(Poly f, const Poly& g, int p) {
  // g monic
  f = trim(std::move(f));
  int dg = static_cast<int>(g.size()) - 1;
  while (static_cast<int>(f.size()) - 1 >= dg) {
    int shift = static_cast<int>(f.size()) - 1 - dg;
    int lead = f.back();
    for (int i = 0; i <= dg; ++i) {
      f[shift + i] = mod_p(f[shift + i] - static_cast<long long>(lead) * g[i], p);
    }
    f = trim(std::move(f));
  }
  return f;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& g, int p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      c[i + j] = mod_p(c[i + j] + static_cast<long long>(a[i]) * b[j], p);
    }
  }
  return poly_mod(std::move(c), g, p);
}

bool poly_divides(const Poly& d, const Poly& f, int p) {
  return poly_mod(f, d, p).empty();
}

// Enumerates monic polynomials of degree deg in base-p order of their
// non-leading coefficients.
bool next_monic(Poly& f, int p) {
  for (std::size_t i = 0; i + 1 < f.size(); ++i) {
    if (++f[i] < p) return true;
    f[i] = 0;
  }
  return false;
}

bool is_irreducible(const Poly& f, int p) {
  int k = static_cast<int>(f.size()) - 1;
  if (k <= 0) return false;
  if (k == 1) return true;
  if (f[0] == 0) return false;  // x divides
  for (int d = 1; 2 * d <= k; ++d) {
    Poly g(d + 1, 0);
    g[d] = 1;
    do {
      if (poly_divides(g, f, p)) return false;
    } while (next_monic(g, p));
  }
  return true;
}

}  // namespace

std::vector<int> FiniteField::default_modulus(int p, int k) {
  if (k == 1) return {0, 1};  // x; unused for prime fields
  Poly f(k + 1, 0);
  f[k] = 1;
  do {
    if (is_irreducible(f, p)) return f;
  } while (next_monic(f, p));
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

FiniteField::FiniteField(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw std::invalid_argument("field characteristic must be prime");
  if (k_ < 1 || k_ > 16) {
    throw std::invalid_argument("extension degree must be in 1..16");
  }
  q_ = 1;
  for (int i = 0; i < k_; ++i) {
    if (q_ > UINT32_MAX / static_cast<std::uint64_t>(p_)) {
      throw std::invalid_argument("field order too large");
    }
    q_ *= p_;
  }
  if (static_cast<int>(modulus_.size()) != k_ + 1 || modulus_[k_] != 1) {
    throw std::invalid_argument("modulus must be monic of degree k");
  }
  for (int c : modulus_) {
    if (c < 0 || c >= p_) throw std::invalid_argument("modulus coefficient out of range");
  }
  if (k_ > 1 && !is_irreducible(modulus_, p_)) {
    throw std::invalid_argument("modulus is not irreducible over GF(p)");
  }
  // x^(k+t) mod modulus, used to fold products back into degree < k
  if (k_ > 1) {
    Poly x{0, 1};
    Poly cur(k_ + 1, 0);
    cur[k_] = 1;
    cur = poly_mod(cur, modulus_, p_);
    for (int t = 0; t <= k_ - 2; ++t) {
      Elem code = 0;
      Elem mult = 1;
      for (int i = 0; i < k_; ++i) {
        int c = i < static_cast<int>(cur.size()) ? cur[i] : 0;
        code += static_cast<Elem>(c) * mult;
        mult *= p_;
      }
      reduce_pows_.push_back(code);
      cur = poly_mul_mod(cur, x, modulus_, p_);
    }
  }
}

std::shared_ptr<const FiniteField> FiniteField::prime(int p) {
  return extension(p, 1);
}

std::shared_ptr<const FiniteField> FiniteField::extension(int p, int k) {
  return extension(p, k, default_modulus(p, k));
}

std::shared_ptr<const FiniteField> FiniteField::extension(int p, int k,
                                                          std::vector<int> modulus) {
  return std::shared_ptr<const FiniteField>(new FiniteField(p, k, std::move(modulus)));
}

FiniteField::Elem FiniteField::add(Elem a, Elem b) const {
  if (k_ == 1) return (a + b) % p_;
  Elem out = 0;
  Elem mult = 1;
  for (int i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::neg(Elem a) const {
  if (k_ == 1) return a == 0 ? 0 : p_ - a;
  Elem out = 0;
  Elem mult = 1;
  for (int i = 0; i < k_; ++i) {
    int d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * mult;
    a /= p_;
    mult *= p_;
  }
  return out;
}

FiniteField::Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

FiniteField::Elem FiniteField::mul(Elem a, Elem b) const {
  if (k_ == 1) {
    return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  int da[16], db[16];
  for (int i = 0; i < k_; ++i) {
    da[i] = a % p_;
    a /= p_;
    db[i] = b % p_;
    b /= p_;
  }
  // convolve, then fold x^(k+t) terms through the reduction table
  int prod[32] = {0};
  for (int i = 0; i < k_; ++i) {
    if (da[i] == 0) continue;
    for (int j = 0; j < k_; ++j) {
      prod[i + j] = static_cast<int>(
          (prod[i + j] + static_cast<long long>(da[i]) * db[j]) % p_);
    }
  }
  Elem out = 0;
  Elem mult = 1;
  for (int i = 0; i < k_; ++i) {
    out += static_cast<Elem>(prod[i]) * mult;
    mult *= p_;
  }
  for (int t = 0; t <= k_ - 2; ++t) {
    int c = prod[k_ + t];
    if (c == 0) continue;
    Elem folded = reduce_pows_[t];
    // out += c * folded, digit-wise
    Elem acc = 0;
    Elem m2 = 1;
    Elem o = out;
    Elem f = folded;
    for (int i = 0; i < k_; ++i) {
      int digit = static_cast<int>(
          (o % p_ + static_cast<long long>(c) * (f % p_)) % p_);
      acc += static_cast<Elem>(digit) * m2;
      o /= p_;
      f /= p_;
      m2 *= p_;
    }
    out = acc;
  }
  return out;
}

FiniteField::Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem out = 1;
  Elem base = a;
  while (e) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

FiniteField::Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inversion of zero field element");
  return pow(a, q_ - 2);
}

FiniteField::Elem FiniteField::from_int(long long v) const {
  return static_cast<Elem>(mod_p(v, p_));
}

FiniteField::Elem FiniteField::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > k_) {
    throw std::invalid_argument("coefficient list longer than field degree");
  }
  Elem out = 0;
  Elem mult = 1;
  for (int i = 0; i < k_; ++i) {
    int c = i < static_cast<int>(coeffs.size()) ? mod_p(coeffs[i], p_) : 0;
    out += static_cast<Elem>(c) * mult;
    mult *= p_;
  }
  return out;
}

std::vector<int> FiniteField::coeffs(Elem a) const {
  std::vector<int> out(k_);
  for (int i = 0; i < k_; ++i) {
    out[i] = a % p_;
    a /= p_;
  }
  return out;
}

std::string FiniteField::name() const {
  if (k_ == 1) return std::to_string(p_);
  return std::to_string(p_) + "^" + std::to_string(k_);
}

}  // namespace strcg
