#include "strcg/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace strcg {

namespace {

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t q = a / g;
  if (b != 0 && q > UINT64_MAX / b) {
    throw std::overflow_error("element order exceeds 64 bits");
  }
  return q * b;
}

}  // namespace

Permutation::Permutation(int degree) {
  if (degree <= 0) throw std::invalid_argument("permutation degree must be positive");
  img_.resize(degree);
  std::iota(img_.begin(), img_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
  if (images.empty()) throw std::invalid_argument("permutation degree must be positive");
  std::vector<char> seen(images.size(), 0);
  for (int x : images) {
    if (x < 0 || x >= static_cast<int>(images.size()) || seen[x]) {
      throw std::invalid_argument("image list is not a bijection");
    }
    seen[x] = 1;
  }
  Permutation p;
  p.img_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(int degree, std::string_view text) {
  Permutation p(degree);
  std::vector<char> used(degree, 0);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (text[i] == ',' || text[i] == ' ') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
        throw std::invalid_argument("unexpected character in cycle notation");
      }
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      if (value < 1 || value > degree) {
        throw std::invalid_argument("cycle point out of range 1.." + std::to_string(degree));
      }
      if (used[value - 1]) throw std::invalid_argument("point repeated in cycle notation");
      used[value - 1] = 1;
      cycle.push_back(value - 1);
    }
    if (i >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      p.img_[cycle[k]] = cycle[(k + 1) % cycle.size()];
    }
    skip_ws();
  }
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

bool Permutation::is_involution() const {
  bool moved = false;
  for (int i = 0; i < degree(); ++i) {
    if (img_[img_[i]] != i) return false;
    if (img_[i] != i) moved = true;
  }
  return moved;
}

int Permutation::smallest_moved_point() const {
  for (int i = 0; i < degree(); ++i) {
    if (img_[i] != i) return i;
  }
  return -1;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  Permutation p;
  p.img_ = std::move(inv);
  return p;
}

Permutation Permutation::operator*(const Permutation& rhs) const {
  if (degree() != rhs.degree()) {
    throw std::invalid_argument("degree mismatch in permutation product");
  }
  std::vector<int> res(img_.size());
  for (int i = 0; i < degree(); ++i) res[i] = rhs.img_[img_[i]];
  Permutation p;
  p.img_ = std::move(res);
  return p;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = img_[j];
      ++len;
    }
    ord = lcm_checked(ord, len);
  }
  return ord;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(j);
      j = img_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cyc : cs) {
    out += '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(cyc[k] + 1);
    }
    out += ')';
  }
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

std::uint64_t element_order(const Permutation& a) { return a.order(); }

Permutation conjugate(const Permutation& p, const Permutation& g) {
  return g.inverse() * p * g;
}

}  // namespace strcg
