#include <doctest.h>

#include "strcg/constructions.hpp"
#include "strcg/rankred.hpp"

#include "test_util.hpp"

using namespace strcg;
using testutil::cyc;

TEST_CASE("left reduction of the Sym(5) simplex") {
  ReductionOutcome out = reduce_once(simplex_rep(5), Direction::left);
  CHECK(out.reduced.rank() == 3);
  CHECK(schlafli_type(out.reduced).entries == std::vector<std::uint64_t>{4, 6});
  CHECK(out.group_preserved);
  CHECK(out.original_order == 120);
  CHECK(out.reduced_order == 120);
  CHECK(out.odd_condition);
  CHECK(out.theorem_condition);  // odd_condition implies it
  CHECK(out.guaranteed);
  CHECK(verify(out.reduced, VerifyMethod::exhaustive).is_string_c_group);
}

TEST_CASE("left reduction of the O4minus3 representation") {
  ReductionOutcome out = reduce_once(builtin_example("O4minus3"), Direction::left);
  CHECK(out.reduced.rank() == 3);
  CHECK(out.reduced.engine() == SggiRep::Engine::matrix);
  CHECK(schlafli_type(out.reduced).entries == std::vector<std::uint64_t>{6, 6});
  CHECK(out.group_preserved);
  CHECK_FALSE(out.theorem_condition);  // rho_0 is outside the dihedral group
  CHECK_FALSE(out.odd_condition);
  CHECK_FALSE(out.guaranteed);
  CHECK(verify(out.reduced, VerifyMethod::recursive).is_string_c_group);
}

TEST_CASE("reduction of the Alt(11) representations breaks transitivity") {
  SggiRep rep = builtin_example("A11-rank6-1");
  ReductionOutcome out = reduce_once(rep, Direction::left);
  CHECK_FALSE(out.group_preserved);
  CHECK(out.reduced_order < out.original_order);
  // the reduced generators all fix point 1
  for (const Permutation& g : out.reduced.perm_gens()) {
    CHECK(g.apply(0) == 0);
  }
  auto parts = out.reduced.group().orbits();
  CHECK(parts.size() >= 2);
}

TEST_CASE("right reduction mirrors left reduction of the reversal") {
  for (const char* name : {"simplex:6", "O4minus3", "A11-rank6-2"}) {
    SggiRep rep = builtin_example(name);
    ReductionOutcome right = reduce_once(rep, Direction::right, {}, true);
    ReductionOutcome mirrored = reduce_once(rep.reversed(), Direction::left, {}, true);
    CHECK(right.reduced == mirrored.reduced.reversed());
    CHECK(right.theorem_condition == mirrored.theorem_condition);
    CHECK(right.odd_condition == mirrored.odd_condition);
    CHECK(right.group_preserved == mirrored.group_preserved);
  }
}

TEST_CASE("reduction preconditions") {
  CHECK_THROWS_AS(reduce_once(simplex_rep(4), Direction::left), std::invalid_argument);
  // rank 3 simplex: too short
  SggiRep reducible(6, {cyc(6, "(1,2)"), cyc(6, "(3,4)"), cyc(6, "(5,6)"), cyc(6, "(1,2)")});
  CHECK_THROWS_AS(reduce_once(reducible, Direction::left), std::invalid_argument);

  // unverified input requires force
  SggiRep rep(2, {cyc(2, "(1,2)"), cyc(2, "(1,2)")});
  CHECK_THROWS_AS(reduce_once(rep, Direction::left), std::invalid_argument);
}

TEST_CASE("odd order of rho_2 rho_3 forces the membership identity") {
  std::vector<SggiRep> corpus;
  for (int m = 5; m <= 8; ++m) corpus.push_back(simplex_rep(m));
  corpus.push_back(builtin_example("O4minus3"));
  for (int i = 1; i <= 3; ++i) {
    corpus.push_back(builtin_example("A11-rank6-" + std::to_string(i)));
  }
  for (const SggiRep& rep : corpus) {
    std::uint64_t p3 = rep.product_order(2, 3);
    if (p3 % 2 == 0) continue;
    if (rep.engine() == SggiRep::Engine::permutation) {
      const auto& g = rep.perm_gens();
      Permutation word = g[0] * g[2] * g[3];
      Permutation acc(rep.degree());
      for (std::uint64_t t = 0; t < p3; ++t) acc = acc * word;
      CHECK(acc == g[0]);
    } else {
      const auto& g = rep.matrix_gens();
      Matrix word = g[0] * g[2] * g[3];
      Matrix acc = Matrix::identity(rep.field(), rep.dim());
      for (std::uint64_t t = 0; t < p3; ++t) acc = acc * word;
      CHECK(acc == g[0]);
    }
    ReductionOutcome out = reduce_once(rep, Direction::left, {}, true);
    CHECK(out.odd_condition);
    CHECK(out.theorem_condition);
  }
}

TEST_CASE("guaranteed run length, both variants") {
  SchlafliType t333{{3, 3, 3}};
  CHECK(guaranteed_run_length(t333, RunVariant::second_entry) == 1);
  CHECK(guaranteed_run_length(t333, RunVariant::third_entry) == 0);

  SchlafliType t446{{4, 4, 6}};
  CHECK_FALSE(guaranteed_run_length(t446, RunVariant::second_entry).has_value());
  CHECK_FALSE(guaranteed_run_length(t446, RunVariant::third_entry).has_value());

  SchlafliType t3333{{3, 3, 3, 3}};
  CHECK(guaranteed_run_length(t3333, RunVariant::second_entry) == 2);
  CHECK(guaranteed_run_length(t3333, RunVariant::third_entry) == 1);

  // a type whose two variants genuinely differ in the first entry examined:
  // p_2 = 4 is even (second-entry run empty) while p_3, p_4 are odd
  SchlafliType t3433{{3, 4, 3, 3}};
  CHECK_FALSE(guaranteed_run_length(t3433, RunVariant::second_entry).has_value());
  CHECK(guaranteed_run_length(t3433, RunVariant::third_entry) == 1);

  CHECK_THROWS_AS(guaranteed_run_length(SchlafliType{{3, 3}}, RunVariant::second_entry),
                  std::invalid_argument);
}

TEST_CASE("type inheritance q_i = p_{i+1} for i >= 3") {
  for (int m = 6; m <= 8; ++m) {
    SggiRep rep = simplex_rep(m);
    SchlafliType original = schlafli_type(rep);
    ReductionOutcome out = reduce_once(rep, Direction::left);
    SchlafliType reduced = schlafli_type(out.reduced);
    int n = rep.rank();
    for (int i = 3; i <= n - 2; ++i) {
      CHECK(reduced.entries[i - 1] == original.entries[i]);
    }
  }
}

TEST_CASE("iterated reduction of the Sym(6) simplex reaches rank 3") {
  ReductionChain chain = reduce_iterate(simplex_rep(6), 3, true);
  CHECK(chain.reached_target);
  CHECK(chain.stop_reason == "target rank reached");
  REQUIRE(chain.steps.size() == 2);
  int expected_rank = 4;
  for (const auto& step : chain.steps) {
    CHECK(step.reduced.rank() == expected_rank--);
    CHECK(step.group_preserved);
    CHECK(step.reduced_order == 720);
    REQUIRE(step.reduced_report.has_value());
    CHECK(step.reduced_report->is_string_c_group);
  }
}

TEST_CASE("iterated reduction stops when the group is not preserved") {
  ReductionChain chain = reduce_iterate(builtin_example("A11-rank6-1"), 5, false);
  CHECK(chain.steps.empty());
  CHECK_FALSE(chain.reached_target);
  CHECK(chain.stop_reason == "group not preserved");
  REQUIRE(chain.rejected_step.has_value());
  CHECK_FALSE(chain.rejected_step->group_preserved);
}

TEST_CASE("O4minus3 chain: single step to rank 3, unguaranteed but verified") {
  ReductionChain chain = reduce_iterate(builtin_example("O4minus3"), 3, true);
  CHECK(chain.reached_target);
  REQUIRE(chain.steps.size() == 1);
  CHECK(chain.steps[0].reduced_report->is_string_c_group);
  CHECK_FALSE(chain.steps[0].guaranteed);
}

TEST_CASE("guaranteed reductions verify at the lower rank") {
  // whenever a verified irreducible string C-group of rank >= 4 satisfies
  // the membership hypothesis, the reduced sequence verifies at rank n-1
  // with the group order intact
  std::vector<SggiRep> corpus;
  for (int m = 5; m <= 8; ++m) corpus.push_back(simplex_rep(m));
  corpus.push_back(builtin_example("O4minus3"));
  for (int i = 1; i <= 3; ++i) {
    corpus.push_back(builtin_example("A11-rank6-" + std::to_string(i)));
  }
  int applied = 0;
  for (const SggiRep& rep : corpus) {
    if (rep.rank() < 4) continue;
    VerificationReport report = verify(rep, VerifyMethod::recursive);
    if (!report.is_string_c_group || !report.is_irreducible) continue;
    for (Direction dir : {Direction::left, Direction::right}) {
      ReductionOutcome out = reduce_once(rep, dir, {}, false, true);
      if (!out.theorem_condition) continue;
      ++applied;
      CHECK(out.group_preserved);
      VerificationReport reduced = verify(out.reduced, VerifyMethod::recursive);
      CHECK(reduced.is_string_c_group);
      CHECK(out.reduced.rank() == rep.rank() - 1);
      CHECK(reduced.group_order == report.group_order);
    }
  }
  CHECK(applied > 0);
}

TEST_CASE("iterate validates the target rank") {
  CHECK_THROWS_AS(reduce_iterate(simplex_rep(6), 2, false), std::invalid_argument);
  // simplex_rep(6) has rank 5, so a target of 5 is not below the current rank
  CHECK_THROWS_AS(reduce_iterate(simplex_rep(6), 5, false), std::invalid_argument);
}
