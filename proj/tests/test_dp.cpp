#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dtls/dp.hpp"
#include "dtls/oracle.hpp"
#include "dtls/random_instance.hpp"
#include "dtls/tree_ops.hpp"
#include "fixtures.hpp"
#include "full_grid_dp.hpp"
#include "pls_enumerator.hpp"

using namespace dtls;
using namespace dtls::test;

namespace {

int replay(const LocalSearchInstance& instance, const EditScript& script) {
  DecisionTree edited = apply_edits(instance.tree(), script);
  return count_errors(edited, instance.dataset());
}

}  // namespace

TEST_CASE("adjustment dp on the single-cut fixtures") {
  // One cut cannot shatter blue/red/blue: the optimum stays 1 at any budget.
  LocalSearchInstance f1(f1_data(), f1_tree(), ProblemKind::Adjust, 1);
  SolveResult r1 = solve_threshold_adjustment_dp(f1);
  CHECK(r1.errors_by_budget == std::vector<int>{1, 1});
  CHECK(r1.script.edits.empty());  // ties prefer the unedited tree
  CHECK(replay(f1, r1.script) == 1);

  // With the third example red one adjustment reaches zero.
  LocalSearchInstance f3(f3_data(), f3_tree(), ProblemKind::Adjust, 1);
  SolveResult r3 = solve_threshold_adjustment_dp(f3);
  CHECK(r3.errors_by_budget == std::vector<int>{1, 0});
  REQUIRE(r3.script.edits.size() == 1);
  CHECK(r3.script.edits[0].kind == EditKind::Adjust);
  CHECK(r3.script.edits[0].node == 0);
  CHECK(r3.script.edits[0].new_threshold == 1.0);
  CHECK(replay(f3, r3.script) == 0);
}

TEST_CASE("budget zero returns the majority-relabel error count") {
  LocalSearchInstance f1(f1_data(), f1_tree(), ProblemKind::Adjust, 0);
  SolveResult r = solve_threshold_adjustment_dp(f1);
  CHECK(r.errors_by_budget == std::vector<int>{1});
  CHECK(r.script.edits.empty());

  LocalSearchInstance single(f1_data(), DecisionTree::single_leaf(Label::Red),
                             ProblemKind::Adjust, 3);
  CHECK(solve_threshold_adjustment_dp(single).errors_by_budget == std::vector<int>{1});
}

TEST_CASE("exchange dp re-picks the feature") {
  LocalSearchInstance f2(f2_data(), f2_tree(), ProblemKind::Exchange, 1);
  SolveResult r = solve_cut_exchange_dp(f2);
  CHECK(r.errors_by_budget == std::vector<int>{1, 0});
  REQUIRE(r.script.edits.size() == 1);
  CHECK(r.script.edits[0].kind == EditKind::Exchange);
  CHECK(r.script.edits[0].new_feature == 0);
  CHECK(r.script.edits[0].new_threshold == 1.0);
  CHECK(replay(f2, r.script) == 0);

  // With one feature, exchange collapses to adjustment.
  LocalSearchInstance f1(f1_data(), f1_tree(), ProblemKind::Exchange, 1);
  CHECK(solve_cut_exchange_dp(f1).errors_by_budget == std::vector<int>{1, 1});
}

TEST_CASE("dp agrees with the brute-force oracles on random instances") {
  Rng rng(101);
  for (int round = 0; round < 60; ++round) {
    RandomInstance inst = random_instance(rng, RandomBounds{});
    int s = inst.tree.num_cuts();
    int k = rng.range(0, 3);

    LocalSearchInstance ta(inst.data, inst.tree, ProblemKind::Adjust, k);
    SolveResult dp = solve_threshold_adjustment_dp(ta);
    OracleResult subsets = brute_force_adjust_subsets(ta);
    int full = brute_force_adjust_full(ta);
    CHECK(dp.errors_by_budget.back() == subsets.min_errors);
    CHECK(dp.errors_by_budget.back() == full);
    CHECK(replay(ta, dp.script) == dp.errors_by_budget.back());
    CHECK(static_cast<int>(dp.script.edits.size()) <= ta.k());

    LocalSearchInstance ce(inst.data, inst.tree, ProblemKind::Exchange, k);
    SolveResult dp_ce = solve_cut_exchange_dp(ce);
    OracleResult oracle_ce = brute_force_exchange(ce);
    CHECK(dp_ce.errors_by_budget.back() == oracle_ce.min_errors);
    CHECK(replay(ce, dp_ce.script) == dp_ce.errors_by_budget.back());

    // Exchange dominates adjustment at every budget.
    for (size_t j = 0; j < dp.errors_by_budget.size(); ++j)
      CHECK(dp_ce.errors_by_budget[j] <= dp.errors_by_budget[j]);
    // Non-increasing in the budget.
    for (size_t j = 1; j < dp.errors_by_budget.size(); ++j) {
      CHECK(dp.errors_by_budget[j] <= dp.errors_by_budget[j - 1]);
      CHECK(dp_ce.errors_by_budget[j] <= dp_ce.errors_by_budget[j - 1]);
    }
    CHECK(dp.errors_by_budget[0] == majority_errors(inst.tree, inst.data));
    (void)s;
  }
}

TEST_CASE("dp is deterministic") {
  Rng rng(77);
  RandomInstance inst = random_instance(rng, RandomBounds{});
  LocalSearchInstance ta(inst.data, inst.tree, ProblemKind::Adjust, 2);
  SolveResult a = solve_threshold_adjustment_dp(ta);
  SolveResult b = solve_threshold_adjustment_dp(ta);
  CHECK(a.errors_by_budget == b.errors_by_budget);
  REQUIRE(a.script.edits.size() == b.script.edits.size());
  for (size_t i = 0; i < a.script.edits.size(); ++i) {
    CHECK(a.script.edits[i].node == b.script.edits[i].node);
    CHECK(a.script.edits[i].new_threshold == b.script.edits[i].new_threshold);
  }
}

TEST_CASE("restricted-box dp equals the full-grid dp") {
  Rng rng(303);
  for (int round = 0; round < 25; ++round) {
    RandomBounds bounds;
    bounds.n_max = 8;
    bounds.d_max = 2;
    bounds.domain_max = 3;
    bounds.s_max = 3;
    RandomInstance inst = random_instance(rng, bounds);
    LocalSearchInstance ta(inst.data, inst.tree, ProblemKind::Adjust, rng.range(0, 2));
    CHECK(solve_threshold_adjustment_dp(ta).errors_by_budget.back() ==
          full_grid_adjustment_optimum(ta));
  }
}

TEST_CASE("combined solver on the single-cut fixture") {
  // Replacing the root leaves a single majority leaf.
  Budgets caps;
  caps.replace = 1;
  LocalSearchInstance inst(f1_data(), f1_tree(), caps);
  PlsResult r = solve_pls_dp(inst);
  CHECK(r.table.at(0, 0, 0, 0) == 1);
  CHECK(r.table.at(0, 0, 1, 0) == 1);
  REQUIRE(r.script.edits.size() == 1);
  CHECK(r.script.edits[0].kind == EditKind::Replace);
  CHECK(replay(inst, r.script) == 1);

  // All budgets zero: the majority-relabel error count.
  LocalSearchInstance zero(f1_data(), f1_tree(), Budgets{});
  CHECK(solve_pls_dp(zero).table.at(0, 0, 0, 0) == 1);
}

TEST_CASE("combined solver marks unrealizable budget tuples infeasible") {
  Budgets caps;
  caps.replace = 1;
  caps.raise = 1;
  LocalSearchInstance single(f1_data(), DecisionTree::single_leaf(Label::Blue), caps);
  PlsResult r = solve_pls_dp(single);
  CHECK(r.table.at(0, 0, 0, 0) == 1);
  CHECK(r.table.at(0, 0, 1, 0) == kInfeasible);  // nothing to prune on a leaf
  CHECK(r.table.at(0, 0, 0, 1) == kInfeasible);
  CHECK(r.table.at(0, 0, 1, 1) == kInfeasible);

  // One cut: pruning two nodes is impossible.
  LocalSearchInstance one(f1_data(), f1_tree(), caps);
  CHECK(solve_pls_dp(one).table.at(0, 0, 1, 1) == kInfeasible);
}

TEST_CASE("combined solver matches the script enumerator on a chain") {
  // Two-cut chain over the F1 data extended with (4, red).
  Dataset data(4, 1, {1, 2, 3, 4}, {Label::Blue, Label::Red, Label::Blue, Label::Red});
  DecisionTree chain({Node::cut(0, 1, 1, 2), Node::leaf(Label::Blue), Node::cut(0, 3, 3, 4),
                      Node::leaf(Label::Blue), Node::leaf(Label::Red)},
                     0);
  Budgets caps;
  caps.adjust = 1;
  caps.replace = 1;
  LocalSearchInstance inst(data, chain, caps);
  PlsResult dp = solve_pls_dp(inst);
  PlsTable reference = enumerate_pls_table(data, chain, caps);
  for (int a = 0; a <= caps.adjust; ++a)
    for (int r = 0; r <= caps.replace; ++r)
      CHECK(dp.table.at(a, 0, r, 0) == reference.at(a, 0, r, 0));
  CHECK(replay(inst, dp.script) == dp.table.at(1, 0, 1, 0));
}

TEST_CASE("combined solver matches the script enumerator on random instances") {
  Rng rng(909);
  for (int round = 0; round < 25; ++round) {
    RandomBounds bounds;
    bounds.n_max = 10;
    bounds.d_max = 2;
    bounds.domain_max = 3;
    bounds.s_max = 3;
    RandomInstance inst = random_instance(rng, bounds);
    Budgets caps;
    caps.adjust = rng.range(0, 1);
    caps.exchange = rng.range(0, 1);
    caps.replace = rng.range(0, 2);
    caps.raise = rng.range(0, 1);
    LocalSearchInstance pls(inst.data, inst.tree, caps);
    PlsResult dp = solve_pls_dp(pls);
    PlsTable reference = enumerate_pls_table(inst.data, inst.tree, caps);
    for (int a = 0; a <= caps.adjust; ++a)
      for (int e = 0; e <= caps.exchange; ++e)
        for (int r = 0; r <= caps.replace; ++r)
          for (int g = 0; g <= caps.raise; ++g) {
            INFO("budgets ", a, " ", e, " ", r, " ", g);
            CHECK(dp.table.at(a, e, r, g) == reference.at(a, e, r, g));
          }
    int at_caps = dp.table.at(caps.adjust, caps.exchange, caps.replace, caps.raise);
    if (at_caps != kInfeasible) {
      CHECK(replay(pls, dp.script) == at_caps);
      CHECK(dp.script.count(EditKind::Adjust) <= caps.adjust);
      CHECK(dp.script.count(EditKind::Exchange) <= caps.exchange);
      CHECK(dp.script.count(EditKind::Replace) + dp.script.count(EditKind::Raise) ==
            caps.replace + caps.raise);
    }
  }
}

TEST_CASE("pls table is monotone in the at-most budgets") {
  Rng rng(404);
  for (int round = 0; round < 10; ++round) {
    RandomBounds bounds;
    bounds.s_max = 3;
    RandomInstance inst = random_instance(rng, bounds);
    Budgets caps;
    caps.adjust = 2;
    caps.exchange = 2;
    caps.replace = 1;
    LocalSearchInstance pls(inst.data, inst.tree, caps);
    PlsResult r = solve_pls_dp(pls);
    for (int rr = 0; rr <= caps.replace; ++rr) {
      for (int a = 1; a <= caps.adjust; ++a)
        CHECK(r.table.at(a, 0, rr, 0) <= r.table.at(a - 1, 0, rr, 0));
      for (int e = 1; e <= caps.exchange; ++e)
        CHECK(r.table.at(0, e, rr, 0) <= r.table.at(0, e - 1, rr, 0));
    }
  }
}

TEST_CASE("reachable boxes") {
  LocalSearchInstance f1(f1_data(), f1_tree(), ProblemKind::Adjust, 1);

  // The root sees only the full box.
  auto at_root = reachable_boxes(f1, 0, Budgets{});
  REQUIRE(at_root.size() == 1);
  CHECK(at_root[0].iv[0] == std::make_pair(kNegInf, kPosInf));

  // Zero budgets: exactly the unmodified path box.
  auto frozen = reachable_boxes(f1, 1, Budgets{});
  REQUIRE(frozen.size() == 1);
  CHECK(frozen[0].iv[0] == std::make_pair(kNegInf, 5.0));

  // One adjustment: the original threshold plus every grid value.
  Budgets one_adjust;
  one_adjust.adjust = 1;
  auto boxes = reachable_boxes(f1, 1, one_adjust);
  REQUIRE(boxes.size() == 5);
  std::vector<double> highs;
  for (const Box& b : boxes) highs.push_back(b.iv[0].second);
  CHECK(highs == std::vector<double>{kNegInf, 1, 2, 3, 5});

  // An exchange budget widens the set to every feature's grid; a prune
  // budget adds the unconstrained box.
  LocalSearchInstance f2(f2_data(), f2_tree(), ProblemKind::Exchange, 1);
  Budgets one_exchange;
  one_exchange.exchange = 1;
  auto exchanged = reachable_boxes(f2, 1, one_exchange);
  bool has_f1_cut = false, has_full = false;
  for (const Box& b : exchanged) {
    if (b.iv[0].second == 1.0 && b.iv[1].second == kPosInf) has_f1_cut = true;
    if (b.iv[0] == std::make_pair(kNegInf, kPosInf) &&
        b.iv[1] == std::make_pair(kNegInf, kPosInf))
      has_full = true;
  }
  CHECK(has_f1_cut);
  CHECK_FALSE(has_full);

  Budgets one_prune;
  one_prune.replace = 1;
  auto pruned = reachable_boxes(f2, 1, one_prune);
  REQUIRE(pruned.size() == 2);  // kept constraint or dropped ancestor
}

TEST_CASE("timeout raises the timeout error") {
  Rng rng(55);
  RandomBounds bounds;
  bounds.n_min = bounds.n_max = 12;
  bounds.d_min = bounds.d_max = 3;
  bounds.s_min = bounds.s_max = 4;
  RandomInstance inst = random_instance(rng, bounds);
  LocalSearchInstance ta(inst.data, inst.tree, ProblemKind::Adjust, 3);
  Deadline expired = Deadline::after_seconds(-1);
  CHECK_THROWS_AS(solve_threshold_adjustment_dp(ta, expired), Error);
}
