#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "strcg/matrix.hpp"
#include "strcg/rep.hpp"

namespace strcg {

// The (m-1)-simplex representation of Sym(m): rho_i = (i+1, i+2), rank m-1,
// Schlafli type all 3's. Requires m >= 3.
SggiRep simplex_rep(int m);

// Generators signs[i] * reflection(form, vectors[i]); signs are +1 or -1.
// Nothing sggi-like is assumed or checked here.
SggiRep reflection_rep(const BilinearForm& form,
                       const std::vector<std::vector<FiniteField::Elem>>& vectors,
                       const std::vector<int>& signs);

// Named builders for the worked examples:
//   "O4minus3"      reflection representation of O-(4, F_3)
//   "A11-rank6-1/2/3"  the three rank-6 CPR-graph representations of Alt(11)
//   "simplex:<m>"   simplex of Sym(m), m >= 3
class ExampleRegistry {
 public:
  static const ExampleRegistry& instance();

  std::vector<std::string> names() const;
  bool has(const std::string& name) const;
  SggiRep build(const std::string& name) const;  // lists names on failure

 private:
  ExampleRegistry();
  std::map<std::string, std::function<SggiRep()>> builders_;
};

SggiRep builtin_example(const std::string& name);

// The Gram matrix of the O4minus3 reflection example over GF(3), exposed
// for reuse in tests.
BilinearForm o4minus3_form();

}  // namespace strcg
