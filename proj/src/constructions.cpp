#include "strcg/constructions.hpp"

#include <stdexcept>

#include "strcg/cpr.hpp"

namespace strcg {

namespace {

Matrix scaled(const Matrix& m, FiniteField::Elem s) {
  Matrix out = m;
  const FiniteField& f = *m.field();
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j) out.set(i, j, f.mul(s, m.at(i, j)));
  }
  return out;
}

SggiRep a11_example(int which) {
  // The three rank-6 CPR graphs for Alt(11): paths on 11 nodes with doubled
  // edges where two labels share an edge.
  std::vector<CprEdge> edges;
  switch (which) {
    case 1:
      edges = {{1, 2, 0}, {1, 2, 2},  {2, 3, 1},  {3, 4, 0},  {4, 5, 1},  {5, 6, 2},
               {6, 7, 3}, {10, 11, 3}, {7, 8, 4}, {9, 10, 4}, {8, 9, 5},  {10, 11, 5}};
      break;
    case 2:
      edges = {{1, 2, 0}, {3, 4, 0},  {2, 3, 1},  {4, 5, 1},  {3, 4, 2},  {5, 6, 2},
               {6, 7, 3}, {10, 11, 3}, {7, 8, 4}, {9, 10, 4}, {8, 9, 5},  {10, 11, 5}};
      break;
    default:
      edges = {{1, 2, 0}, {3, 4, 0}, {2, 3, 1}, {4, 5, 1}, {3, 4, 2},  {5, 6, 2},
               {6, 7, 3}, {8, 9, 3}, {7, 8, 4}, {9, 10, 4}, {8, 9, 5}, {10, 11, 5}};
      break;
  }
  CprGraph graph(11, 6, std::move(edges));
  return cpr_to_rep(graph).with_label("A11-rank6-" + std::to_string(which));
}

SggiRep o4minus3_example() {
  BilinearForm form = o4minus3_form();
  std::vector<std::vector<FiniteField::Elem>> basis(4, std::vector<FiniteField::Elem>(4, 0));
  for (int i = 0; i < 4; ++i) basis[i][i] = 1;
  return reflection_rep(form, basis, {+1, -1, +1, -1}).with_label("O4minus3");
}

}  // namespace

SggiRep simplex_rep(int m) {
  if (m < 3) throw std::invalid_argument("simplex requires m >= 3");
  std::vector<Permutation> gens;
  gens.reserve(m - 1);
  for (int i = 1; i < m; ++i) {
    gens.push_back(Permutation::from_cycles(m, "(" + std::to_string(i) + "," +
                                                   std::to_string(i + 1) + ")"));
  }
  return SggiRep(m, std::move(gens), "simplex:" + std::to_string(m));
}

SggiRep reflection_rep(const BilinearForm& form,
                       const std::vector<std::vector<FiniteField::Elem>>& vectors,
                       const std::vector<int>& signs) {
  if (vectors.size() != signs.size()) {
    throw std::invalid_argument("vectors and signs must have equal length");
  }
  if (vectors.empty()) throw std::invalid_argument("empty vector list");
  const FiniteField& f = *form.field();
  std::vector<Matrix> gens;
  gens.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (signs[i] != 1 && signs[i] != -1) {
      throw std::invalid_argument("signs must be +1 or -1");
    }
    Matrix r = reflection(form, vectors[i]);
    gens.push_back(signs[i] == 1 ? r : scaled(r, f.neg(f.one())));
  }
  return SggiRep(std::move(gens));
}

BilinearForm o4minus3_form() {
  FieldPtr f3 = FiniteField::prime(3);
  return BilinearForm(Matrix::from_rows(
      f3, {{1, 1, 0, 0}, {1, 2, 1, 0}, {0, 1, 1, 2}, {0, 0, 2, 1}}));
}

ExampleRegistry::ExampleRegistry() {
  builders_["O4minus3"] = [] { return o4minus3_example(); };
  builders_["A11-rank6-1"] = [] { return a11_example(1); };
  builders_["A11-rank6-2"] = [] { return a11_example(2); };
  builders_["A11-rank6-3"] = [] { return a11_example(3); };
}

const ExampleRegistry& ExampleRegistry::instance() {
  static ExampleRegistry registry;
  return registry;
}

std::vector<std::string> ExampleRegistry::names() const {
  std::vector<std::string> out;
  for (const auto& [name, fn] : builders_) out.push_back(name);
  out.push_back("simplex:<m>");
  return out;
}

bool ExampleRegistry::has(const std::string& name) const {
  if (builders_.count(name)) return true;
  return name.rfind("simplex:", 0) == 0;
}

SggiRep ExampleRegistry::build(const std::string& name) const {
  auto it = builders_.find(name);
  if (it != builders_.end()) return it->second();
  if (name.rfind("simplex:", 0) == 0) {
    std::string arg = name.substr(8);
    std::size_t pos = 0;
    int m = 0;
    try {
      m = std::stoi(arg, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != arg.size() || m < 3) {
      throw std::invalid_argument("bad simplex parameter '" + arg + "' (need integer m >= 3)");
    }
    return simplex_rep(m);
  }
  std::string known;
  for (const std::string& n : names()) {
    if (!known.empty()) known += ", ";
    known += n;
  }
  throw std::invalid_argument("unknown example '" + name + "'; registered: " + known);
}

SggiRep builtin_example(const std::string& name) {
  return ExampleRegistry::instance().build(name);
}

}  // namespace strcg
