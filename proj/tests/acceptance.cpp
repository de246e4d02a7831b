// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Run via ctest (test name "acceptance") or directly.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <vector>

#include "strcg/constructions.hpp"
#include "strcg/cpr.hpp"
#include "strcg/rankred.hpp"
#include "strcg/repfile.hpp"
#include "strcg/verify.hpp"

#include "test_util.hpp"

using namespace strcg;

namespace {

int failures = 0;
std::vector<std::string> notes;

void note(const std::string& text) { notes.push_back(text); }

#define REQUIRE_TRUE(cond)                                          \
  do {                                                              \
    if (!(cond)) {                                                  \
      note(std::string("    failed: ") + #cond + " at line " +      \
           std::to_string(__LINE__));                               \
      return false;                                                 \
    }                                                               \
  } while (0)

void run(int number, const std::string& name, const std::function<bool()>& body) {
  notes.clear();
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("[%s] criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", number,
              name.c_str(), seconds);
  if (!ok) {
    ++failures;
    for (const std::string& n : notes) std::printf("%s\n", n.c_str());
    if (!error.empty()) std::printf("    exception: %s\n", error.c_str());
  }
}

void skip(int number, const std::string& name, const std::string& why) {
  std::printf("[SKIP] criterion %d: %s (%s)\n", number, name.c_str(), why.c_str());
}

std::uint64_t factorial(int m) {
  std::uint64_t f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

// The fixture corpus: every registry entry plus the simplexes used by the
// chain criterion.
std::vector<SggiRep> fixture_corpus() {
  std::vector<SggiRep> out;
  out.push_back(builtin_example("O4minus3"));
  for (int i = 1; i <= 3; ++i) out.push_back(builtin_example("A11-rank6-" + std::to_string(i)));
  for (int m = 5; m <= 8; ++m) out.push_back(simplex_rep(m));
  return out;
}

std::vector<SggiRep> random_sggi_corpus(int count) {
  std::mt19937 rng(0xacce97ed);
  std::vector<SggiRep> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    int degree = 4 + static_cast<int>(rng() % 4);  // Sym(<= 7)
    int rank = 3 + static_cast<int>(rng() % 2);
    out.push_back(strcg::testutil::random_sggi(degree, rank, rng));
  }
  return out;
}

bool criterion1_o4minus3_end_to_end() {
  BilinearForm form = o4minus3_form();
  auto f3 = form.field();
  std::vector<std::vector<FiniteField::Elem>> basis(4, std::vector<FiniteField::Elem>(4, 0));
  for (int i = 0; i < 4; ++i) basis[i][i] = 1;
  SggiRep rep = reflection_rep(form, basis, {+1, -1, +1, -1});

  const std::vector<Matrix> expected = {
      Matrix::from_rows(f3, {{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}),
      Matrix::from_rows(f3, {{2, 1, 0, 0}, {0, 1, 0, 0}, {0, 1, 2, 0}, {0, 0, 0, 2}}),
      Matrix::from_rows(f3, {{1, 0, 0, 0}, {0, 1, 1, 0}, {0, 0, 2, 0}, {0, 0, 2, 1}}),
      Matrix::from_rows(f3, {{2, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 1}, {0, 0, 0, 1}})};
  REQUIRE_TRUE(rep.matrix_gens() == expected);

  VerificationReport report = verify(rep, VerifyMethod::recursive);
  REQUIRE_TRUE(report.is_string_c_group);
  REQUIRE_TRUE(report.schlafli->entries == (std::vector<std::uint64_t>{4, 4, 6}));
  std::uint64_t q = 3;
  REQUIRE_TRUE(report.group_order == 2 * q * q * (q * q + 1) * (q * q - 1));
  REQUIRE_TRUE(report.group_order == 1440);

  ReductionOutcome out = reduce_once(rep, Direction::left);
  REQUIRE_TRUE(out.reduced.rank() == 3);
  REQUIRE_TRUE(out.group_preserved);
  REQUIRE_TRUE(!out.theorem_condition);
  VerificationReport reduced = verify(out.reduced, VerifyMethod::recursive);
  REQUIRE_TRUE(reduced.is_string_c_group);
  REQUIRE_TRUE(reduced.schlafli->entries == (std::vector<std::uint64_t>{6, 6}));
  return true;
}

bool criterion2_a11_corpus() {
  const std::vector<std::vector<std::uint64_t>> expected_types = {
      {5, 3, 6, 3, 5}, {5, 5, 6, 3, 5}, {5, 5, 6, 5, 5}};
  for (int i = 1; i <= 3; ++i) {
    std::string name = "A11-rank6-" + std::to_string(i);
    RepFile file = load_rep_file(strcg::testutil::fixture_path(name + ".cpr"));
    SggiRep rep = rep_of(file);
    REQUIRE_TRUE(rep.rank() == 6);
    VerificationReport report = verify(rep, VerifyMethod::recursive);
    REQUIRE_TRUE(report.is_string_c_group);
    REQUIRE_TRUE(report.schlafli->entries == expected_types[i - 1]);
    REQUIRE_TRUE(report.group_order == 19958400);
    REQUIRE_TRUE(report.group_order == factorial(11) / 2);
    for (Direction dir : {Direction::left, Direction::right}) {
      ReductionOutcome out = reduce_once(rep, dir, {}, false, true);
      REQUIRE_TRUE(!out.group_preserved);
      REQUIRE_TRUE(out.reduced.group().orbits().size() >= 2);
    }
  }
  return true;
}

bool criterion3_simplex_chains() {
  for (int m = 5; m <= 8; ++m) {
    SggiRep rep = simplex_rep(m);
    VerificationReport report = verify(rep, VerifyMethod::recursive);
    REQUIRE_TRUE(report.is_string_c_group);
    REQUIRE_TRUE(report.schlafli->entries ==
                 std::vector<std::uint64_t>(m - 2, 3));
    ReductionChain chain = reduce_iterate(rep, 3, true);
    REQUIRE_TRUE(chain.reached_target);
    REQUIRE_TRUE(chain.steps.size() == static_cast<std::size_t>(m - 4));
    int expected_rank = m - 2;
    for (const auto& step : chain.steps) {
      REQUIRE_TRUE(step.reduced.rank() == expected_rank--);
      REQUIRE_TRUE(step.group_preserved);
      REQUIRE_TRUE(step.reduced_order == factorial(m));
      REQUIRE_TRUE(step.reduced_report && step.reduced_report->is_string_c_group);
    }
  }
  return true;
}

bool criterion4_odd_order_identity() {
  std::vector<SggiRep> corpus = fixture_corpus();
  for (SggiRep& rep : random_sggi_corpus(200)) corpus.push_back(std::move(rep));
  int checked = 0;
  for (const SggiRep& rep : corpus) {
    if (rep.rank() < 4) continue;
    std::uint64_t p3 = rep.product_order(2, 3);
    if (p3 % 2 == 0) continue;
    ++checked;
    if (rep.engine() == SggiRep::Engine::permutation) {
      const auto& g = rep.perm_gens();
      Permutation word = g[0] * g[2] * g[3];
      Permutation acc(rep.degree());
      for (std::uint64_t t = 0; t < p3; ++t) acc = acc * word;
      REQUIRE_TRUE(acc == g[0]);
    } else {
      const auto& g = rep.matrix_gens();
      Matrix word = g[0] * g[2] * g[3];
      Matrix acc = Matrix::identity(rep.field(), rep.dim());
      for (std::uint64_t t = 0; t < p3; ++t) acc = acc * word;
      REQUIRE_TRUE(acc == g[0]);
    }
    // the implication odd_condition => theorem_condition, through the
    // reduction flags where reduction is legal (irreducible input), and
    // otherwise nothing more to check: the elementwise identity above is
    // itself the membership witness
    if (check_sggi(rep).is_irreducible) {
      ReductionOutcome out = reduce_once(rep, Direction::left, {}, true, std::nullopt);
      REQUIRE_TRUE(out.odd_condition);
      REQUIRE_TRUE(out.theorem_condition);
    }
  }
  REQUIRE_TRUE(checked > 0);
  return true;
}

bool criterion5_dihedral_search() {
  for (int k : {3, 4, 5, 6}) {  // orders 6, 8, 10, 12
    PermGroup dptr = strcg::testutil::dihedral_group(k);
    REQUIRE_TRUE(dptr.order() == 2 * static_cast<std::uint64_t>(k));
    REQUIRE_TRUE(!search_reps(dptr, 2).empty());
    REQUIRE_TRUE(search_reps(dptr, 3).empty());
  }
  return true;
}

bool criterion6_method_agreement() {
  std::vector<SggiRep> corpus = fixture_corpus();
  for (SggiRep& rep : random_sggi_corpus(200)) corpus.push_back(std::move(rep));
  for (const SggiRep& rep : corpus) {
    VerificationReport a = verify(rep, VerifyMethod::exhaustive);
    VerificationReport b = verify(rep, VerifyMethod::recursive);
    REQUIRE_TRUE(a.is_string_c_group == b.is_string_c_group);
  }
  return true;
}

bool criterion7_oracle_cross_checks() {
  // BSGS order vs BFS closure size on every corpus group of order <= 1e5
  std::vector<PermGroup> groups;
  for (const SggiRep& rep : fixture_corpus()) groups.push_back(rep.group());
  for (int k : {3, 4, 5, 6}) groups.push_back(strcg::testutil::dihedral_group(k));
  for (const SggiRep& rep : random_sggi_corpus(50)) groups.push_back(rep.group());
  int checked = 0;
  for (const PermGroup& g : groups) {
    if (g.order() > 100000) continue;
    ++checked;
    REQUIRE_TRUE(g.order() == g.closure_size());
  }
  REQUIRE_TRUE(checked >= 8);

  // orbits of cpr_to_rep match connectivity components
  std::mt19937 rng(0x0c0ffee);
  std::vector<CprGraph> graphs;
  for (int i = 1; i <= 3; ++i) {
    graphs.push_back(
        rep_to_cpr(builtin_example("A11-rank6-" + std::to_string(i))));
  }
  for (int trial = 0; trial < 100; ++trial) {
    int m = 3 + static_cast<int>(rng() % 10);
    int n = 2 + static_cast<int>(rng() % 4);
    std::vector<CprEdge> edges;
    for (int label = 0; label < n; ++label) {
      std::vector<int> nodes(m);
      for (int i = 0; i < m; ++i) nodes[i] = i + 1;
      std::shuffle(nodes.begin(), nodes.end(), rng);
      int pairs = static_cast<int>(rng() % (m / 2 + 1));
      for (int t = 0; t < pairs; ++t) {
        int u = nodes[2 * t], v = nodes[2 * t + 1];
        edges.push_back({std::min(u, v), std::max(u, v), label});
      }
    }
    graphs.emplace_back(m, n, std::move(edges));
  }
  for (const CprGraph& graph : graphs) {
    SggiRep rep = cpr_to_rep(graph);
    std::vector<int> all(graph.rank());
    for (int i = 0; i < graph.rank(); ++i) all[i] = i;
    std::vector<int> subset;
    for (int l : all) {
      if (rng() % 2) subset.push_back(l);
    }
    for (const auto& labels : {all, subset}) {
      std::vector<Permutation> gens;
      for (int l : labels) gens.push_back(rep.perm_gens()[l]);
      if (gens.empty()) gens.push_back(Permutation(graph.node_count()));
      PermGroup restricted(graph.node_count(), gens);
      auto orbit_parts = restricted.orbits();
      for (auto& part : orbit_parts) {
        for (int& x : part) ++x;
      }
      REQUIRE_TRUE(orbit_parts == connectivity(graph, labels));
    }
  }
  return true;
}

bool even_orthogonal_fixture_check(const std::string& path) {
  RepFile file = load_rep_file(path);
  SggiRep rep = rep_of(file);
  REQUIRE_TRUE(rep.engine() == SggiRep::Engine::matrix);
  REQUIRE_TRUE(rep.field()->characteristic() == 2);
  std::uint64_t expected = rep.field()->order() + 1;  // 2^k + 1
  VerificationReport report = verify(rep, VerifyMethod::recursive);
  REQUIRE_TRUE(report.is_string_c_group);
  for (std::uint64_t p : report.schlafli->entries) {
    REQUIRE_TRUE(p % 2 == 1);
    REQUIRE_TRUE(p == expected);
  }
  if (rep.rank() >= 4) {
    ReductionOutcome out = reduce_once(rep, Direction::left, {}, false, true);
    REQUIRE_TRUE(out.odd_condition);
    REQUIRE_TRUE(out.guaranteed);
    REQUIRE_TRUE(out.group_preserved);
  }
  return true;
}

}  // namespace

int main() {
  run(1, "O4minus3 example end-to-end", criterion1_o4minus3_end_to_end);
  run(2, "Alt(11) rank-6 corpus: types, order, intransitive reductions",
      criterion2_a11_corpus);
  run(3, "simplex chains for 5 <= m <= 8", criterion3_simplex_chains);
  run(4, "odd-order membership identity and implication", criterion4_odd_order_identity);
  run(5, "dihedral search: rank 2 only", criterion5_dihedral_search);
  run(6, "method agreement on corpus plus 200 random sggis",
      criterion6_method_agreement);
  run(7, "oracle cross-checks: BSGS/closure and orbits/connectivity",
      criterion7_oracle_cross_checks);

  std::string even_path = strcg::testutil::fixture_path("even-orthogonal.rep");
  if (std::filesystem::exists(even_path)) {
    run(8, "even-characteristic orthogonal fixture (all-odd types)",
        [&] { return even_orthogonal_fixture_check(even_path); });
  } else {
    skip(8, "even-characteristic orthogonal fixture (all-odd types)",
         "no fixture supplied; the external high-rank construction is out of scope");
  }

  if (failures == 0) std::printf("all acceptance criteria passed\n");
  return failures;
}
