#pragma once

#include <random>
#include <string>
#include <vector>

#include "strcg/perm.hpp"
#include "strcg/permgroup.hpp"
#include "strcg/rep.hpp"

namespace strcg::testutil {

inline std::string fixture_path(const std::string& name) {
  return std::string(STRCG_FIXTURE_DIR) + "/" + name;
}

inline Permutation cyc(int degree, const std::string& text) {
  return Permutation::from_cycles(degree, text);
}

// Dihedral group of order 2k acting on k points.
inline PermGroup dihedral_group(int k) {
  std::vector<int> rot(k), refl(k);
  for (int i = 0; i < k; ++i) {
    rot[i] = (i + 1) % k;
    refl[i] = (k - 1 - i) % k;
  }
  return PermGroup(k, {Permutation::from_images(rot), Permutation::from_images(refl)});
}

// Random non-identity involution of Sym(degree).
inline Permutation random_involution(int degree, std::mt19937& rng) {
  std::vector<int> points(degree);
  for (int i = 0; i < degree; ++i) points[i] = i;
  std::shuffle(points.begin(), points.end(), rng);
  int max_pairs = degree / 2;
  int pairs = 1 + static_cast<int>(rng() % max_pairs);
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  for (int t = 0; t < pairs; ++t) {
    img[points[2 * t]] = points[2 * t + 1];
    img[points[2 * t + 1]] = points[2 * t];
  }
  return Permutation::from_images(std::move(img));
}

// Random involution sequence satisfying the commuting property; retries
// until one is found.
inline SggiRep random_sggi(int degree, int rank, std::mt19937& rng) {
  while (true) {
    std::vector<Permutation> gens;
    bool ok = true;
    for (int i = 0; i < rank && ok; ++i) {
      // retry each position a few times before restarting the sequence
      bool placed = false;
      for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
        Permutation cand = random_involution(degree, rng);
        placed = true;
        for (int j = 0; j + 1 < i && placed; ++j) {
          placed = (gens[j] * cand).order() <= 2;
        }
        if (placed) gens.push_back(std::move(cand));
      }
      ok = placed;
    }
    if (ok) return SggiRep(degree, std::move(gens));
  }
}

}  // namespace strcg::testutil
