#include "dtls/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dtls/box.hpp"
#include "dtls/tree_ops.hpp"

namespace dtls {

namespace {

void check_cap(double estimate, double cap, const std::string& bound) {
  if (estimate > cap)
    throw Error(Errc::Capacity, "enumeration bound " + bound + " ~ " +
                                    std::to_string(estimate) + " exceeds cap " +
                                    std::to_string(cap));
}

/// Lexicographic subsets of {0..m-1} of exactly `size` elements.
bool next_combination(std::vector<int>& idx, int m) {
  int r = static_cast<int>(idx.size());
  for (int i = r - 1; i >= 0; --i) {
    if (idx[i] < m - (r - i)) {
      ++idx[i];
      for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

struct Best {
  int errors = -1;
  int edits = 0;
  std::vector<Edit> script_edits;

  void consider(int cand_errors, const std::vector<Edit>& edits_list) {
    int cand_edits = static_cast<int>(edits_list.size());
    if (errors < 0 || cand_errors < errors || (cand_errors == errors && cand_edits < edits)) {
      errors = cand_errors;
      edits = cand_edits;
      script_edits = edits_list;
    }
  }
};

OracleResult subset_search(const LocalSearchInstance& instance, bool exchange_mode,
                           const OracleOptions& options) {
  const Dataset& data = instance.dataset();
  const DecisionTree& tree = instance.tree();
  FeatureGrids grids(data);
  std::vector<NodeId> cuts = tree.cut_ids();
  int s = static_cast<int>(cuts.size());
  int k = instance.k();
  int D = grids.domain_size();

  if (exchange_mode)
    check_cap(std::pow(static_cast<double>(D + 1) * data.d() * std::max(s, 1), k) *
                  data.n() * std::max(s, 1),
              options.cap, "((D+1)*d*s)^k*n*s");
  else
    check_cap(std::pow(static_cast<double>(std::max(s, 1)), k + 1) *
                  std::pow(static_cast<double>(D), k) * data.n(),
              options.cap, "s^(k+1)*D^k*n");

  Best best;
  DecisionTree scratch = tree;
  std::vector<Edit> edits_list;

  // Per chosen node, candidate cuts are (feature, grid index) pairs; in
  // adjust mode the feature is pinned to the node's own.
  auto run_subset = [&](const std::vector<int>& subset) {
    int r = static_cast<int>(subset.size());
    // Odometer over the candidate choices of every selected node.
    std::vector<int> feat_choice(r, 0);
    std::vector<int> thr_choice(r, 0);
    auto feature_of = [&](int slot) {
      return exchange_mode ? feat_choice[slot] : tree.node(cuts[subset[slot]]).feature;
    };
    while (true) {
      edits_list.clear();
      for (int i = 0; i < r; ++i) {
        NodeId node = cuts[subset[i]];
        Edit e;
        e.node = node;
        e.new_threshold = grids.value(feature_of(i), thr_choice[i]);
        if (exchange_mode) {
          e.kind = EditKind::Exchange;
          e.new_feature = feature_of(i);
        } else {
          e.kind = EditKind::Adjust;
        }
        edits_list.push_back(e);
        scratch.node(node).feature = feature_of(i);
        scratch.node(node).threshold = e.new_threshold;
      }
      best.consider(majority_errors(scratch, data), edits_list);
      for (int i = 0; i < r; ++i) {
        NodeId node = cuts[subset[i]];
        scratch.node(node).feature = tree.node(node).feature;
        scratch.node(node).threshold = tree.node(node).threshold;
      }
      // Advance the odometer: threshold fastest, then feature.
      int pos = r - 1;
      while (pos >= 0) {
        if (++thr_choice[pos] < grids.size(feature_of(pos))) break;
        thr_choice[pos] = 0;
        if (exchange_mode && ++feat_choice[pos] < data.d()) break;
        feat_choice[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  };

  for (int size = 0; size <= k; ++size) {
    std::vector<int> subset(size);
    for (int i = 0; i < size; ++i) subset[i] = i;
    if (size == 0) {
      run_subset(subset);
      continue;
    }
    if (size > s) break;
    do {
      run_subset(subset);
    } while (next_combination(subset, s));
  }

  OracleResult result;
  result.min_errors = best.errors;
  result.script.edits = best.script_edits;
  finalize_script_majority(tree, data, result.script);
  return result;
}

}  // namespace

OracleResult brute_force_adjust_subsets(const LocalSearchInstance& instance,
                                        const OracleOptions& options) {
  if (instance.problem() != ProblemKind::Adjust)
    throw Error(Errc::Validation, "instance is not a threshold-adjustment problem");
  return subset_search(instance, /*exchange_mode=*/false, options);
}

OracleResult brute_force_exchange(const LocalSearchInstance& instance,
                                  const OracleOptions& options) {
  if (instance.problem() != ProblemKind::Exchange)
    throw Error(Errc::Validation, "instance is not a cut-exchange problem");
  return subset_search(instance, /*exchange_mode=*/true, options);
}

int brute_force_adjust_full(const LocalSearchInstance& instance, const OracleOptions& options) {
  if (instance.problem() != ProblemKind::Adjust)
    throw Error(Errc::Validation, "instance is not a threshold-adjustment problem");
  const Dataset& data = instance.dataset();
  const DecisionTree& tree = instance.tree();
  FeatureGrids grids(data);
  std::vector<NodeId> cuts = tree.cut_ids();
  int s = static_cast<int>(cuts.size());
  int D = grids.domain_size();

  check_cap(std::pow(static_cast<double>(D + 1), s) * std::max(s, 1) * data.n(), options.cap,
            "(D+1)^s*s*n");

  DecisionTree scratch = tree;
  std::vector<int> choice(s, 0);
  int best = -1;
  while (true) {
    int changed = 0;
    for (int i = 0; i < s; ++i) {
      NodeId node = cuts[i];
      double x = grids.value(tree.node(node).feature, choice[i]);
      scratch.node(node).threshold = x;
      if (x != tree.node(node).threshold) ++changed;
    }
    if (changed <= instance.k()) {
      int errors = majority_errors(scratch, data);
      if (best < 0 || errors < best) best = errors;
    }
    int pos = s - 1;
    while (pos >= 0 && ++choice[pos] >= grids.size(tree.node(cuts[pos]).feature)) {
      choice[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return best;
}

}  // namespace dtls
