#pragma once

#include <string>
#include <vector>

#include "strcg/rep.hpp"

namespace strcg {

struct CprEdge {
  int u;  // 1-based, u < v
  int v;
  int label;  // 0..rank-1

  bool operator==(const CprEdge&) const = default;
};

// Labelled multigraph on the permutation domain: the label-i edges form a
// partial matching whose transpositions multiply to the involution rho_i.
// Edges are kept in canonical order, sorted by (label, u, v).
class CprGraph {
 public:
  CprGraph(int node_count, int rank, std::vector<CprEdge> edges);

  int node_count() const { return node_count_; }
  int rank() const { return rank_; }
  const std::vector<CprEdge>& edges() const { return edges_; }

  bool operator==(const CprGraph&) const = default;

 private:
  int node_count_;
  int rank_;
  std::vector<CprEdge> edges_;
};

// Text format:
//   kind: cpr
//   nodes: <m>
//   rank: <n>
//   edge: <u> <v> <label>   (one line per edge)
// Parse errors carry 1-based line numbers; emit produces canonical form
// (header, then edges sorted by (label, u, v)), so parse-emit is the
// identity on canonical text.
CprGraph cpr_parse(const std::string& text);
std::string cpr_emit(const CprGraph& graph);

// rho_i = product of the transpositions (u v) over label-i edges.
SggiRep cpr_to_rep(const CprGraph& graph);

// Inverse encoding; every generator must be an involution.
CprGraph rep_to_cpr(const SggiRep& rep);

// Connected components of the subgraph on the selected labels; every node
// appears, isolated ones as singletons. Components are sorted and listed by
// smallest node (1-based). The rep restricted to those labels is transitive
// iff there is one component.
std::vector<std::vector<int>> connectivity(const CprGraph& graph,
                                           const std::vector<int>& labels);

}  // namespace strcg
