#include "strcg/permgroup.hpp"

#include <algorithm>
#include <cstring>
#include <random>
#include <stdexcept>

#include "strcg/errors.hpp"

namespace strcg {

namespace detail {

namespace {

std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
  if (b != 0 && a > UINT64_MAX / b) {
    throw std::overflow_error("group order exceeds 64 bits");
  }
  return a * b;
}

}  // namespace

// Stabilizer chain with Schreier-vector transversals. One level per base
// point; level i stores the strong generators fixing all earlier base points
// and the orbit of its own base point under them.
class Bsgs {
 public:
  Bsgs(int degree, const std::vector<Permutation>& input, std::uint64_t seed)
      : degree_(degree) {
    for (const auto& g : input) {
      if (!g.is_identity()) extend_base_for(g);
    }
    for (const auto& g : input) {
      if (!g.is_identity()) add_strong_generator(g, 0);
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) rebuild_orbit(i);

    randomized_warmup(input, seed);
    complete();  // deterministic Schreier-generator verification
    build_transversal_cache();
  }

  std::uint64_t order() const {
    std::uint64_t n = 1;
    for (const auto& lvl : levels_) {
      n = mul_checked(n, static_cast<std::uint64_t>(lvl.orbit.size()));
    }
    return n;
  }

  const std::vector<int>& base() const { return base_; }

  bool contains(std::span<const int> images) const {
    thread_local std::vector<int> g, tmp;
    g.assign(images.begin(), images.end());
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      int beta = g[base_[i]];
      if (levels_[i].where[beta] < 0) return false;
      apply_inverse_transversal(i, beta, g, tmp);
    }
    for (int x = 0; x < degree_; ++x) {
      if (g[x] != x) return false;
    }
    return true;
  }

 private:
  struct Level {
    int base_point = -1;
    std::vector<Permutation> gens;
    std::vector<int> where;   // point -> orbit position, -1 outside
    std::vector<int> orbit;   // BFS order, orbit[0] == base_point
    std::vector<int> parent;  // point -> predecessor in the Schreier tree
    std::vector<int> via;     // point -> index into gens
    // inv_transversal[where[beta]] = image array of u_beta^{-1}; only cached
    // for small degrees.
    std::vector<std::vector<int>> inv_transversal;
  };

  int degree_;
  std::vector<int> base_;
  std::vector<Level> levels_;

  static constexpr int kTransversalCacheMaxDegree = 4096;

  void extend_base_for(const Permutation& g) {
    for (int b : base_) {
      if (g.apply(b) != b) return;
    }
    int p = g.smallest_moved_point();
    if (p < 0) return;
    base_.push_back(p);
    Level lvl;
    lvl.base_point = p;
    levels_.push_back(std::move(lvl));
  }

  // g must fix base points 0..level-1.
  void add_strong_generator(const Permutation& g, std::size_t level) {
    for (std::size_t l = level; l < levels_.size(); ++l) {
      levels_[l].gens.push_back(g);
      if (g.apply(base_[l]) != base_[l]) break;
    }
  }

  void rebuild_orbit(std::size_t i) {
    Level& lvl = levels_[i];
    lvl.where.assign(degree_, -1);
    lvl.parent.assign(degree_, -1);
    lvl.via.assign(degree_, -1);
    lvl.orbit.clear();
    lvl.orbit.push_back(lvl.base_point);
    lvl.where[lvl.base_point] = 0;
    for (std::size_t qi = 0; qi < lvl.orbit.size(); ++qi) {
      int pt = lvl.orbit[qi];
      for (std::size_t gi = 0; gi < lvl.gens.size(); ++gi) {
        int im = lvl.gens[gi].apply(pt);
        if (lvl.where[im] < 0) {
          lvl.where[im] = static_cast<int>(lvl.orbit.size());
          lvl.orbit.push_back(im);
          lvl.parent[im] = pt;
          lvl.via[im] = static_cast<int>(gi);
        }
      }
    }
  }

  // u_beta as a permutation: base_point^{u_beta} = beta.
  Permutation transversal(std::size_t i, int beta) const {
    const Level& lvl = levels_[i];
    std::vector<int> path;  // generator indices, application order root->beta
    int cur = beta;
    while (cur != lvl.base_point) {
      path.push_back(lvl.via[cur]);
      cur = lvl.parent[cur];
    }
    Permutation u(degree_);
    for (auto it = path.rbegin(); it != path.rend(); ++it) {
      u = u * lvl.gens[*it];
    }
    return u;
  }

  // g := g * u_beta^{-1}, in place; tmp is scratch.
  void apply_inverse_transversal(std::size_t i, int beta, std::vector<int>& g,
                                 std::vector<int>& tmp) const {
    const Level& lvl = levels_[i];
    if (!lvl.inv_transversal.empty()) {
      const std::vector<int>& uinv = lvl.inv_transversal[lvl.where[beta]];
      tmp.resize(degree_);
      for (int x = 0; x < degree_; ++x) tmp[x] = uinv[g[x]];
      g.swap(tmp);
      return;
    }
    Permutation uinv = transversal(i, beta).inverse();
    tmp.resize(degree_);
    for (int x = 0; x < degree_; ++x) tmp[x] = uinv.apply(g[x]);
    g.swap(tmp);
  }

  // Sifts g through levels >= start. Returns the first level whose orbit
  // rejects it (levels_.size() when it passes every level); g becomes the
  // residue.
  std::size_t strip(std::vector<int>& g, std::size_t start,
                    std::vector<int>& tmp) const {
    for (std::size_t i = start; i < levels_.size(); ++i) {
      int beta = g[base_[i]];
      if (levels_[i].where[beta] < 0) return i;
      apply_inverse_transversal(i, beta, g, tmp);
    }
    return levels_.size();
  }

  static bool is_identity_images(const std::vector<int>& g) {
    for (std::size_t x = 0; x < g.size(); ++x) {
      if (g[x] != static_cast<int>(x)) return false;
    }
    return true;
  }

  // Inserts the residue as a strong generator at levels start..j, extending
  // the base when it fixes every current base point. Returns the level at
  // which processing must resume.
  std::size_t absorb_residue(const std::vector<int>& images, std::size_t start,
                             std::size_t j) {
    Permutation h = Permutation::from_images(images);
    if (j == levels_.size()) {
      extend_base_for(h);  // appends exactly one level: h fixes b_0..b_{j-1}
    }
    for (std::size_t l = start; l <= j && l < levels_.size(); ++l) {
      levels_[l].gens.push_back(h);
      rebuild_orbit(l);
    }
    return j < levels_.size() ? j : levels_.size() - 1;
  }

  void randomized_warmup(const std::vector<Permutation>& input, std::uint64_t seed) {
    std::vector<const Permutation*> pool;
    for (const auto& g : input) {
      if (!g.is_identity()) pool.push_back(&g);
    }
    if (pool.empty()) return;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<int> g, tmp;
    for (int round = 0; round < 24; ++round) {
      Permutation w(degree_);
      int len = 1 + static_cast<int>(rng() % 12);
      for (int k = 0; k < len; ++k) w = w * *pool[pick(rng)];
      g = w.images();
      std::size_t j = strip(g, 0, tmp);
      if (!is_identity_images(g)) absorb_residue(g, 0, j);
    }
  }

  // Classic deterministic Schreier-Sims pass: at each level every Schreier
  // generator must sift to the identity through the lower levels.
  // levels_ may grow inside the loop, so it is indexed fresh each time and
  // the short-circuit on `clean` keeps every access behind the check.
  void complete() {
    if (levels_.empty()) return;
    std::vector<int> g, tmp;
    std::size_t i = levels_.size() - 1;
    while (true) {
      bool clean = true;
      for (std::size_t oi = 0; clean && oi < levels_[i].orbit.size(); ++oi) {
        int beta = levels_[i].orbit[oi];
        Permutation u_beta = transversal(i, beta);
        for (std::size_t gi = 0; clean && gi < levels_[i].gens.size(); ++gi) {
          Permutation s = levels_[i].gens[gi];
          Permutation u_gamma = transversal(i, s.apply(beta));
          Permutation schreier = u_beta * s * u_gamma.inverse();
          g = schreier.images();
          std::size_t j = strip(g, i + 1, tmp);
          if (!is_identity_images(g)) {
            i = absorb_residue(g, i + 1, j);
            clean = false;
          }
        }
      }
      if (clean) {
        if (i == 0) break;
        --i;
      }
    }
  }

  void build_transversal_cache() {
    if (degree_ > kTransversalCacheMaxDegree) return;
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      Level& lvl = levels_[i];
      lvl.inv_transversal.resize(lvl.orbit.size());
      for (std::size_t oi = 0; oi < lvl.orbit.size(); ++oi) {
        lvl.inv_transversal[oi] = transversal(i, lvl.orbit[oi]).inverse().images();
      }
    }
  }
};

namespace {

// Open-addressing set of packed permutation image arrays; keys are stored
// contiguously in insertion order so BFS closures stay cache-friendly at
// millions of elements.
class PackedPermSet {
 public:
  explicit PackedPermSet(int degree)
      : degree_(degree),
        width_(degree <= 0x100 ? 1 : (degree <= 0x10000 ? 2 : 4)),
        key_bytes_(static_cast<std::size_t>(degree) * width_),
        table_(kInitialSlots, kEmpty) {}

  std::size_t size() const { return count_; }

  bool insert(std::span<const int> images) {
    pack(images, scratch_);
    std::uint64_t h = hash_bytes(scratch_.data());
    std::size_t mask = table_.size() - 1;
    std::size_t slot = static_cast<std::size_t>(h) & mask;
    while (table_[slot] != kEmpty) {
      if (equals_at(table_[slot], scratch_.data())) return false;
      slot = (slot + 1) & mask;
    }
    data_.insert(data_.end(), scratch_.begin(), scratch_.end());
    table_[slot] = static_cast<std::uint32_t>(count_);
    ++count_;
    if (count_ * 2 >= table_.size()) grow();
    return true;
  }

  bool contains(std::span<const int> images) const {
    pack(images, scratch_);
    std::uint64_t h = hash_bytes(scratch_.data());
    std::size_t mask = table_.size() - 1;
    std::size_t slot = static_cast<std::size_t>(h) & mask;
    while (table_[slot] != kEmpty) {
      if (equals_at(table_[slot], scratch_.data())) return true;
      slot = (slot + 1) & mask;
    }
    return false;
  }

  void get(std::size_t idx, std::vector<int>& out) const {
    out.resize(degree_);
    const std::uint8_t* p = data_.data() + idx * key_bytes_;
    switch (width_) {
      case 1:
        for (int i = 0; i < degree_; ++i) out[i] = p[i];
        break;
      case 2:
        for (int i = 0; i < degree_; ++i) {
          std::uint16_t v;
          std::memcpy(&v, p + 2 * i, 2);
          out[i] = v;
        }
        break;
      default:
        for (int i = 0; i < degree_; ++i) {
          std::uint32_t v;
          std::memcpy(&v, p + 4 * i, 4);
          out[i] = static_cast<int>(v);
        }
    }
  }

 private:
  static constexpr std::size_t kInitialSlots = 1u << 10;
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  void pack(std::span<const int> images, std::vector<std::uint8_t>& out) const {
    out.resize(key_bytes_);
    switch (width_) {
      case 1:
        for (int i = 0; i < degree_; ++i) out[i] = static_cast<std::uint8_t>(images[i]);
        break;
      case 2:
        for (int i = 0; i < degree_; ++i) {
          std::uint16_t v = static_cast<std::uint16_t>(images[i]);
          std::memcpy(out.data() + 2 * i, &v, 2);
        }
        break;
      default:
        for (int i = 0; i < degree_; ++i) {
          std::uint32_t v = static_cast<std::uint32_t>(images[i]);
          std::memcpy(out.data() + 4 * i, &v, 4);
        }
    }
  }

  std::uint64_t hash_bytes(const std::uint8_t* key) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < key_bytes_; ++i) {
      h ^= key[i];
      h *= 0x100000001b3ull;
    }
    h ^= h >> 29;
    h *= 0xbf58476d1ce4e5b9ull;
    h ^= h >> 32;
    return h;
  }

  bool equals_at(std::uint32_t idx, const std::uint8_t* key) const {
    return std::memcmp(data_.data() + static_cast<std::size_t>(idx) * key_bytes_, key,
                       key_bytes_) == 0;
  }

  void grow() {
    std::vector<std::uint32_t> old = std::move(table_);
    table_.assign(old.size() * 2, kEmpty);
    std::size_t mask = table_.size() - 1;
    for (std::uint32_t idx : old) {
      if (idx == kEmpty) continue;
      std::uint64_t h = hash_bytes(data_.data() + static_cast<std::size_t>(idx) * key_bytes_);
      std::size_t slot = static_cast<std::size_t>(h) & mask;
      while (table_[slot] != kEmpty) slot = (slot + 1) & mask;
      table_[slot] = idx;
    }
  }

  int degree_;
  int width_;
  std::size_t key_bytes_;
  std::size_t count_ = 0;
  std::vector<std::uint8_t> data_;
  std::vector<std::uint32_t> table_;
  mutable std::vector<std::uint8_t> scratch_;
};

}  // namespace

}  // namespace detail

PermGroup::PermGroup(int degree, std::vector<Permutation> generators, std::uint64_t seed)
    : degree_(degree), gens_(std::move(generators)) {
  if (degree_ <= 0) throw std::invalid_argument("group degree must be positive");
  if (gens_.empty()) throw std::invalid_argument("generator list must be non-empty");
  for (const auto& g : gens_) {
    if (g.degree() != degree_) {
      throw std::invalid_argument("generator degree mismatch");
    }
  }
  bsgs_ = std::make_shared<const detail::Bsgs>(degree_, gens_, seed);
}

std::uint64_t PermGroup::order() const { return bsgs_->order(); }

bool PermGroup::contains(const Permutation& x) const {
  if (x.degree() != degree_) throw std::invalid_argument("degree mismatch in membership test");
  return bsgs_->contains(x.images());
}

bool PermGroup::contains(std::span<const int> images) const {
  if (static_cast<int>(images.size()) != degree_) {
    throw std::invalid_argument("degree mismatch in membership test");
  }
  return bsgs_->contains(images);
}

const std::vector<int>& PermGroup::base() const { return bsgs_->base(); }

void PermGroup::for_each_element(
    const ElementBudget& budget,
    const std::function<bool(std::span<const int>)>& visit) const {
  if (budget.max_elements == 0) throw std::invalid_argument("element budget must be positive");
  detail::PackedPermSet seen(degree_);
  std::vector<int> cur(degree_), next(degree_);
  for (int i = 0; i < degree_; ++i) cur[i] = i;
  seen.insert(cur);
  if (!visit(cur)) return;
  for (std::size_t head = 0; head < seen.size(); ++head) {
    seen.get(head, cur);
    for (const auto& g : gens_) {
      const std::vector<int>& gi = g.images();
      for (int x = 0; x < degree_; ++x) next[x] = gi[cur[x]];
      if (seen.size() >= budget.max_elements && !seen.contains(next)) {
        throw OverflowError("closure overflow", budget.max_elements);
      }
      if (seen.insert(next)) {
        if (!visit(next)) return;
      }
    }
  }
}

std::vector<Permutation> PermGroup::elements(const ElementBudget& budget) const {
  std::vector<Permutation> out;
  for_each_element(budget, [&](std::span<const int> images) {
    out.push_back(Permutation::from_images(std::vector<int>(images.begin(), images.end())));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t PermGroup::closure_size(const ElementBudget& budget) const {
  std::uint64_t n = 0;
  for_each_element(budget, [&](std::span<const int>) {
    ++n;
    return true;
  });
  return n;
}

std::vector<std::vector<int>> PermGroup::orbits() const {
  std::vector<std::vector<int>> parts;
  std::vector<char> seen(degree_, 0);
  for (int start = 0; start < degree_; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit{start};
    seen[start] = 1;
    for (std::size_t qi = 0; qi < orbit.size(); ++qi) {
      for (const auto& g : gens_) {
        int im = g.apply(orbit[qi]);
        if (!seen[im]) {
          seen[im] = 1;
          orbit.push_back(im);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    parts.push_back(std::move(orbit));
  }
  return parts;
}

bool PermGroup::is_transitive() const { return orbits().size() == 1; }

std::vector<Permutation> closure(const PermGroup& g, const ElementBudget& budget) {
  return g.elements(budget);
}

std::uint64_t group_order(const PermGroup& g) { return g.order(); }

std::vector<Permutation> intersect(const PermGroup& a, const PermGroup& b,
                                   const ElementBudget& budget) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in intersection");
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& large = a.order() <= b.order() ? b : a;
  std::vector<Permutation> out;
  small.for_each_element(budget, [&](std::span<const int> images) {
    if (large.contains(images)) {
      out.push_back(Permutation::from_images(std::vector<int>(images.begin(), images.end())));
    }
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace strcg
