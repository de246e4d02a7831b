#pragma once

#include <optional>
#include <string>

#include "strcg/cpr.hpp"
#include "strcg/matrix.hpp"
#include "strcg/rep.hpp"

namespace strcg {

// A parsed representation file. Three kinds:
//
//   kind: permutation          kind: matrix                     kind: cpr
//   degree: m                  field: p^k [modulus: c0,..,ck]   nodes: m
//   gen: (1,2)(3,4)            dim: d                           rank: n
//   ...                        form: [[...],...]   (optional)   edge: u v label
//                              gen: [[...],...]                 ...
//
// Permutation generators use 1-based disjoint-cycle notation with fixed
// points omitted ("()" is the identity). Matrix entries are integers over a
// prime field and little-endian coefficient lists over an extension field.
// emit produces a canonical form that reparses to an equal value; canonical
// files round-trip byte-exactly.
struct RepFile {
  enum class Kind { permutation, matrix, cpr };

  Kind kind;
  std::optional<SggiRep> rep;        // permutation / matrix kinds
  std::optional<BilinearForm> form;  // matrix kind, when a form line is present
  std::optional<CprGraph> graph;     // cpr kind
};

RepFile parse_rep_file(const std::string& text);  // throws ParseError
std::string emit_rep_file(const RepFile& file);

RepFile load_rep_file(const std::string& path);
void save_rep_file(const RepFile& file, const std::string& path);

// The representation a file denotes; converts cpr graphs via cpr_to_rep.
SggiRep rep_of(const RepFile& file);

// Wraps a representation for writing (permutation or matrix kind).
RepFile to_rep_file(const SggiRep& rep);

}  // namespace strcg
