#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dtls/oracle.hpp"
#include "dtls/random_instance.hpp"
#include "dtls/tree_ops.hpp"
#include "fixtures.hpp"

using namespace dtls;
using namespace dtls::test;

TEST_CASE("subset oracle on the fixtures") {
  // blue/red/blue: one error whatever the threshold.
  LocalSearchInstance f1(f1_data(), f1_tree(), ProblemKind::Adjust, 1);
  OracleResult r1 = brute_force_adjust_subsets(f1);
  CHECK(r1.min_errors == 1);
  CHECK(r1.script.edits.empty());  // smallest subset wins ties

  // blue/red/red: adjusting the root to 1 fixes everything.
  LocalSearchInstance f3(f3_data(), f3_tree(), ProblemKind::Adjust, 1);
  OracleResult r3 = brute_force_adjust_subsets(f3);
  CHECK(r3.min_errors == 0);
  REQUIRE(r3.script.edits.size() == 1);
  CHECK(r3.script.edits[0].new_threshold == 1.0);
  DecisionTree edited = apply_edits(f3_tree(), r3.script);
  CHECK(count_errors(edited, f3_data()) == 0);

  LocalSearchInstance zero(f1_data(), f1_tree(), ProblemKind::Adjust, 0);
  CHECK(brute_force_adjust_subsets(zero).min_errors == 1);
}

TEST_CASE("full-assignment oracle agrees with the subset oracle") {
  LocalSearchInstance f3(f3_data(), f3_tree(), ProblemKind::Adjust, 1);
  CHECK(brute_force_adjust_full(f3) == 0);

  LocalSearchInstance single(f1_data(), DecisionTree::single_leaf(Label::Blue),
                             ProblemKind::Adjust, 1);
  CHECK(brute_force_adjust_full(single) == 1);

  Rng rng(42);
  for (int round = 0; round < 200; ++round) {
    RandomBounds bounds;
    bounds.n_max = 8;
    bounds.d_max = 2;
    bounds.domain_max = 3;
    bounds.s_max = 3;
    RandomInstance inst = random_instance(rng, bounds);
    LocalSearchInstance ta(inst.data, inst.tree, ProblemKind::Adjust, rng.range(0, 2));
    CHECK(brute_force_adjust_full(ta) == brute_force_adjust_subsets(ta).min_errors);
  }
}

TEST_CASE("exchange oracle") {
  LocalSearchInstance f2(f2_data(), f2_tree(), ProblemKind::Exchange, 1);
  OracleResult r = brute_force_exchange(f2);
  CHECK(r.min_errors == 0);
  REQUIRE(r.script.edits.size() == 1);
  CHECK(r.script.edits[0].kind == EditKind::Exchange);
  CHECK(r.script.edits[0].new_feature == 0);
  CHECK(r.script.edits[0].new_threshold == 1.0);

  LocalSearchInstance zero(f2_data(), f2_tree(), ProblemKind::Exchange, 0);
  CHECK(brute_force_exchange(zero).min_errors == 1);

  // Exchange never loses to adjustment.
  Rng rng(43);
  for (int round = 0; round < 50; ++round) {
    RandomInstance inst = random_instance(rng, RandomBounds{});
    int k = rng.range(0, 2);
    LocalSearchInstance ta(inst.data, inst.tree, ProblemKind::Adjust, k);
    LocalSearchInstance ce(inst.data, inst.tree, ProblemKind::Exchange, k);
    CHECK(brute_force_exchange(ce).min_errors <= brute_force_adjust_subsets(ta).min_errors);
  }
}

TEST_CASE("oracle scripts respect budgets and replay exactly") {
  Rng rng(44);
  for (int round = 0; round < 30; ++round) {
    RandomInstance inst = random_instance(rng, RandomBounds{});
    int k = rng.range(0, 3);
    LocalSearchInstance ta(inst.data, inst.tree, ProblemKind::Adjust, k);
    OracleResult r = brute_force_adjust_subsets(ta);
    CHECK(static_cast<int>(r.script.edits.size()) <= ta.k());
    DecisionTree edited = apply_edits(inst.tree, r.script);
    CHECK(count_errors(edited, inst.data) == r.min_errors);
    CHECK(r.script.achieved_errors == r.min_errors);
  }
}

TEST_CASE("capacity caps refuse oversized enumerations") {
  Rng rng(45);
  RandomBounds bounds;
  bounds.n_min = bounds.n_max = 12;
  bounds.d_min = bounds.d_max = 3;
  bounds.s_min = bounds.s_max = 4;
  RandomInstance inst = random_instance(rng, bounds);
  LocalSearchInstance ta(inst.data, inst.tree, ProblemKind::Adjust, 3);
  OracleOptions tiny;
  tiny.cap = 10;
  CHECK_THROWS_WITH_AS(brute_force_adjust_subsets(ta, tiny),
                       doctest::Contains("exceeds cap"), Error);
  try {
    brute_force_adjust_subsets(ta, tiny);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Capacity);
  }
}
