#include "strcg/cpr.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "strcg/errors.hpp"

namespace strcg {

namespace {

bool canonical_less(const CprEdge& a, const CprEdge& b) {
  if (a.label != b.label) return a.label < b.label;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

// Validates one edge against the graph bounds and the per-label matching;
// messages are shared between the constructor and the parser.
std::string edge_problem(const CprEdge& e, int node_count, int rank,
                         std::set<std::pair<int, int>>& matched,
                         std::set<std::tuple<int, int, int>>& triples) {
  if (e.u < 1 || e.u > node_count || e.v < 1 || e.v > node_count) {
    return "edge node out of range 1.." + std::to_string(node_count);
  }
  if (e.u >= e.v) return "edge must satisfy u < v";
  if (e.label < 0 || e.label >= rank) {
    return "label out of range 0.." + std::to_string(rank - 1);
  }
  if (!triples.insert({e.u, e.v, e.label}).second) {
    return "duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
           " " + std::to_string(e.label);
  }
  for (int node : {e.u, e.v}) {
    if (!matched.insert({e.label, node}).second) {
      return "matching violation at node " + std::to_string(node) + ", label " +
             std::to_string(e.label);
    }
  }
  return {};
}

}  // namespace

CprGraph::CprGraph(int node_count, int rank, std::vector<CprEdge> edges)
    : node_count_(node_count), rank_(rank), edges_(std::move(edges)) {
  if (node_count_ < 1) throw std::invalid_argument("node count must be positive");
  if (rank_ < 0) throw std::invalid_argument("rank must be non-negative");
  std::set<std::pair<int, int>> matched;
  std::set<std::tuple<int, int, int>> triples;
  for (const CprEdge& e : edges_) {
    std::string problem = edge_problem(e, node_count_, rank_, matched, triples);
    if (!problem.empty()) throw std::invalid_argument(problem);
  }
  std::sort(edges_.begin(), edges_.end(), canonical_less);
}

CprGraph cpr_parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  int nodes = -1, rank = -1;
  bool kind_seen = false;
  std::vector<CprEdge> edges;
  std::set<std::pair<int, int>> matched;
  std::set<std::tuple<int, int, int>> triples;

  auto fail = [&](const std::string& msg) -> ParseError { return ParseError(lineno, msg); };

  while (std::getline(in, line)) {
    ++lineno;
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw fail("expected 'key: value'");
    std::string key = line.substr(start, colon - start);
    std::string value = line.substr(colon + 1);

    if (key == "kind") {
      std::istringstream vs(value);
      std::string v;
      vs >> v;
      if (v != "cpr") throw fail("expected kind: cpr");
      kind_seen = true;
    } else if (key == "nodes") {
      if (!kind_seen) throw fail("kind must come first");
      if (!(std::istringstream(value) >> nodes) || nodes < 1) {
        throw fail("nodes must be a positive integer");
      }
    } else if (key == "rank") {
      if (nodes < 0) throw fail("nodes must come before rank");
      if (!(std::istringstream(value) >> rank) || rank < 0) {
        throw fail("rank must be a non-negative integer");
      }
    } else if (key == "edge") {
      if (rank < 0) throw fail("header (kind/nodes/rank) must come before edges");
      CprEdge e{};
      std::istringstream vs(value);
      if (!(vs >> e.u >> e.v >> e.label)) throw fail("expected 'edge: u v label'");
      std::string rest;
      if (vs >> rest) throw fail("trailing tokens after edge");
      std::string problem = edge_problem(e, nodes, rank, matched, triples);
      if (!problem.empty()) throw fail(problem);
      edges.push_back(e);
    } else {
      throw fail("unknown key '" + key + "'");
    }
  }
  if (!kind_seen) throw ParseError(lineno, "missing 'kind: cpr'");
  if (nodes < 0) throw ParseError(lineno, "missing 'nodes:'");
  if (rank < 0) throw ParseError(lineno, "missing 'rank:'");
  return CprGraph(nodes, rank, std::move(edges));
}

std::string cpr_emit(const CprGraph& graph) {
  std::string out = "kind: cpr\n";
  out += "nodes: " + std::to_string(graph.node_count()) + "\n";
  out += "rank: " + std::to_string(graph.rank()) + "\n";
  for (const CprEdge& e : graph.edges()) {
    out += "edge: " + std::to_string(e.u) + " " + std::to_string(e.v) + " " +
           std::to_string(e.label) + "\n";
  }
  return out;
}

SggiRep cpr_to_rep(const CprGraph& graph) {
  int m = graph.node_count();
  std::vector<std::vector<int>> images(graph.rank());
  for (auto& img : images) {
    img.resize(m);
    std::iota(img.begin(), img.end(), 0);
  }
  for (const CprEdge& e : graph.edges()) {
    std::swap(images[e.label][e.u - 1], images[e.label][e.v - 1]);
  }
  std::vector<Permutation> gens;
  gens.reserve(images.size());
  for (auto& img : images) gens.push_back(Permutation::from_images(std::move(img)));
  return SggiRep(m, std::move(gens));
}

CprGraph rep_to_cpr(const SggiRep& rep) {
  if (rep.engine() != SggiRep::Engine::permutation) {
    throw std::invalid_argument("CPR encoding requires the permutation engine");
  }
  std::vector<CprEdge> edges;
  for (int i = 0; i < rep.rank(); ++i) {
    const Permutation& g = rep.perm_gens()[i];
    if (!g.is_involution()) {
      throw std::invalid_argument("generator " + std::to_string(i) +
                                  " is not an involution");
    }
    for (const auto& cyc : g.cycles()) {
      edges.push_back({cyc[0] + 1, cyc[1] + 1, i});
    }
  }
  return CprGraph(rep.degree(), rep.rank(), std::move(edges));
}

std::vector<std::vector<int>> connectivity(const CprGraph& graph,
                                           const std::vector<int>& labels) {
  std::vector<char> selected(graph.rank(), 0);
  for (int l : labels) {
    if (l < 0 || l >= graph.rank()) {
      throw std::invalid_argument("label " + std::to_string(l) + " out of range 0.." +
                                  std::to_string(graph.rank() - 1));
    }
    selected[l] = 1;
  }
  // union-find over 1-based nodes
  std::vector<int> parent(graph.node_count() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const CprEdge& e : graph.edges()) {
    if (!selected[e.label]) continue;
    parent[find(e.u)] = find(e.v);
  }
  std::map<int, std::vector<int>> comps;
  for (int node = 1; node <= graph.node_count(); ++node) {
    comps[find(node)].push_back(node);
  }
  std::vector<std::vector<int>> out;
  out.reserve(comps.size());
  for (auto& [root, nodes] : comps) out.push_back(std::move(nodes));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace strcg
