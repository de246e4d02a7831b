#include "strcg/rep.hpp"

#include <stdexcept>

namespace strcg {

SggiRep::SggiRep(int degree, std::vector<Permutation> gens, std::string label)
    : data_(PermData{degree, std::move(gens)}), label_(std::move(label)) {
  const auto& d = std::get<PermData>(data_);
  if (d.degree <= 0) throw std::invalid_argument("degree must be positive");
  for (const auto& g : d.gens) {
    if (g.degree() != d.degree) throw std::invalid_argument("generator degree mismatch");
  }
}

SggiRep::SggiRep(std::vector<Matrix> gens, std::string label)
    : data_(MatData{std::move(gens)}), label_(std::move(label)) {
  const auto& d = std::get<MatData>(data_);
  if (d.gens.empty()) throw std::invalid_argument("matrix representation needs generators");
  for (const auto& g : d.gens) {
    if (g.dim() != d.gens.front().dim() || !(*g.field() == *d.gens.front().field())) {
      throw std::invalid_argument("matrix generators must share field and dimension");
    }
  }
}

SggiRep::Engine SggiRep::engine() const {
  return std::holds_alternative<PermData>(data_) ? Engine::permutation : Engine::matrix;
}

int SggiRep::rank() const {
  if (engine() == Engine::permutation) {
    return static_cast<int>(std::get<PermData>(data_).gens.size());
  }
  return static_cast<int>(std::get<MatData>(data_).gens.size());
}

SggiRep SggiRep::with_label(std::string label) const {
  SggiRep out = *this;
  out.label_ = std::move(label);
  return out;
}

int SggiRep::degree() const { return std::get<PermData>(data_).degree; }

const std::vector<Permutation>& SggiRep::perm_gens() const {
  return std::get<PermData>(data_).gens;
}

const std::vector<Matrix>& SggiRep::matrix_gens() const {
  return std::get<MatData>(data_).gens;
}

const FieldPtr& SggiRep::field() const {
  return std::get<MatData>(data_).gens.front().field();
}

int SggiRep::dim() const { return std::get<MatData>(data_).gens.front().dim(); }

bool SggiRep::generator_is_identity(int i) const {
  if (engine() == Engine::permutation) return perm_gens()[i].is_identity();
  return matrix_gens()[i].is_identity();
}

bool SggiRep::generator_is_involution(int i) const {
  if (engine() == Engine::permutation) return perm_gens()[i].is_involution();
  const Matrix& m = matrix_gens()[i];
  return !m.is_identity() && (m * m).is_identity();
}

bool SggiRep::generators_equal(int i, int j) const {
  if (engine() == Engine::permutation) return perm_gens()[i] == perm_gens()[j];
  return matrix_gens()[i] == matrix_gens()[j];
}

std::uint64_t SggiRep::generator_order(int i) const {
  if (engine() == Engine::permutation) return perm_gens()[i].order();
  return matrix_gens()[i].order();
}

std::uint64_t SggiRep::product_order(int i, int j) const {
  if (engine() == Engine::permutation) {
    return (perm_gens()[i] * perm_gens()[j]).order();
  }
  return (matrix_gens()[i] * matrix_gens()[j]).order();
}

SggiRep SggiRep::sub(const std::vector<int>& indices) const {
  for (int i : indices) {
    if (i < 0 || i >= rank()) throw std::out_of_range("generator index out of range");
  }
  if (engine() == Engine::permutation) {
    std::vector<Permutation> gens;
    gens.reserve(indices.size());
    for (int i : indices) gens.push_back(perm_gens()[i]);
    return SggiRep(degree(), std::move(gens), label_);
  }
  std::vector<Matrix> gens;
  gens.reserve(indices.size());
  for (int i : indices) gens.push_back(matrix_gens()[i]);
  return SggiRep(std::move(gens), label_);
}

SggiRep SggiRep::reversed() const {
  std::vector<int> idx(rank());
  for (int i = 0; i < rank(); ++i) idx[i] = rank() - 1 - i;
  return sub(idx);
}

SggiRep SggiRep::conjugated(const Permutation& g) const {
  std::vector<Permutation> gens;
  gens.reserve(perm_gens().size());
  for (const auto& p : perm_gens()) gens.push_back(conjugate(p, g));
  return SggiRep(degree(), std::move(gens), label_);
}

SggiRep SggiRep::to_permutation(const ElementBudget& budget) const {
  if (engine() == Engine::permutation) return *this;
  MatrixPermImage image = matrix_rep_to_perm(matrix_gens(), budget);
  return SggiRep(static_cast<int>(image.domain_size()), image.perms(), label_);
}

PermGroup SggiRep::group(const ElementBudget& budget, std::uint64_t seed) const {
  SggiRep p = to_permutation(budget);
  std::vector<Permutation> gens = p.perm_gens();
  if (gens.empty()) gens.push_back(Permutation(p.degree()));  // trivial group
  return PermGroup(p.degree(), std::move(gens), seed);
}

std::string SggiRep::generator_string(int i) const {
  if (engine() == Engine::permutation) return perm_gens()[i].cycle_string();
  return matrix_gens()[i].to_string();
}

bool SggiRep::operator==(const SggiRep& rhs) const {
  if (engine() != rhs.engine() || rank() != rhs.rank()) return false;
  if (engine() == Engine::permutation) {
    return degree() == rhs.degree() && perm_gens() == rhs.perm_gens();
  }
  return matrix_gens() == rhs.matrix_gens();
}

}  // namespace strcg
