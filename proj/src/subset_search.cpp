#include "dtls/subset_search.hpp"

#include <algorithm>
#include <string>

#include "dtls/tree_ops.hpp"

namespace dtls {

namespace {

int frame_feature(const DecisionTree& tree, const GuessFrame& frame, NodeId node) {
  int o = frame.feature_override.empty() ? -1 : frame.feature_override[node];
  return o >= 0 ? o : tree.node(node).feature;
}

std::vector<int> filter_side(const Dataset& data, const std::vector<int>& subset, int feature,
                             double threshold, bool left) {
  std::vector<int> out;
  out.reserve(subset.size());
  for (int id : subset)
    if ((data.at(id, feature) <= threshold) == left) out.push_back(id);
  return out;
}

}  // namespace

bool compute_thresholds(const DecisionTree& tree, const Dataset& data,
                        const std::vector<int>& subset, NodeId node, const GuessFrame& frame,
                        std::vector<double>& thresholds) {
  const Node& n = tree.node(node);
  if (n.is_leaf()) {
    Label want = frame.leaf_labels[node];
    int wrong = 0;
    for (int id : subset)
      if (data.label(id) != want) ++wrong;
    return wrong <= frame.error_budget[node];
  }
  double z = frame.modified[node]
                 ? binary_search_threshold(tree, data, subset, node, frame, thresholds)
                 : n.threshold;
  if (frame.modified[node]) thresholds[node] = z;
  int f = frame_feature(tree, frame, node);
  bool right_ok = compute_thresholds(tree, data, filter_side(data, subset, f, z, false),
                                     n.right, frame, thresholds);
  if (!right_ok) return false;
  return compute_thresholds(tree, data, filter_side(data, subset, f, z, true), n.left, frame,
                            thresholds);
}

double binary_search_threshold(const DecisionTree& tree, const Dataset& data,
                               const std::vector<int>& subset, NodeId node,
                               const GuessFrame& frame, std::vector<double>& thresholds) {
  int f = frame_feature(tree, frame, node);
  std::vector<double> values = data.distinct_values(f);
  values.erase(values.begin());  // drop the -inf sentinel; it is the fallback
  const Node& n = tree.node(node);

  int lo = 0, hi = static_cast<int>(values.size()) - 1, found = -1;
  while (lo <= hi) {
    int mid = (lo + hi) / 2;
    if (compute_thresholds(tree, data, filter_side(data, subset, f, values[mid], true), n.left,
                           frame, thresholds)) {
      found = mid;
      lo = mid + 1;
    } else {
      hi = mid - 1;
    }
  }
  return found >= 0 ? values[found] : kNegInf;
}

namespace {

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

/// Compositions of `total` into `parts` slots, lexicographic.
bool next_composition(std::vector<int>& parts, int total) {
  int m = static_cast<int>(parts.size());
  if (m == 1) return false;
  for (int i = m - 2; i >= 0; --i) {
    int tail = 0;
    for (int j = i; j < m; ++j) tail += parts[j];
    if (tail > parts[i]) {
      ++parts[i];
      int rest = tail - parts[i];
      for (int j = i + 1; j < m - 1; ++j) parts[j] = 0;
      parts[m - 1] = rest;
      return true;
    }
  }
  return false;
}

SubsetOutcome subset_solve(const LocalSearchInstance& instance, bool exchange_mode,
                           const Deadline& deadline) {
  if (!instance.error_bound())
    throw Error(Errc::Validation, "the subset solver needs an error bound t");
  const Dataset& data = instance.dataset();
  const DecisionTree& tree = instance.tree();
  int t = *instance.error_bound();
  int k = instance.k();

  std::vector<NodeId> cuts = tree.cut_ids();
  std::vector<NodeId> leaves = tree.leaf_ids();
  int s = static_cast<int>(cuts.size());
  int num_leaves = static_cast<int>(leaves.size());
  if (num_leaves > 20)
    throw Error(Errc::Capacity, "subset solver is exponential in the leaf count (" +
                                    std::to_string(num_leaves) + " leaves)");

  std::vector<int> all_examples(data.n());
  for (int i = 0; i < data.n(); ++i) all_examples[i] = i;

  // Original leaf contents; used to skip labelings that contradict a pure
  // untouched leaf (one with no modified ancestor).
  auto assignment = assign_examples(tree, data);
  std::vector<NodeId> parent = tree.parents();

  GuessFrame frame;
  frame.modified.assign(tree.arena_size(), 0);
  frame.leaf_labels.assign(tree.arena_size(), Label::Blue);
  frame.error_budget.assign(tree.arena_size(), 0);
  if (exchange_mode) frame.feature_override.assign(tree.arena_size(), -1);

  std::vector<double> thresholds(tree.arena_size(), 0.0);

  auto try_frames = [&]() -> bool {
    // Forced labels at untouched pure leaves.
    std::vector<int> forced(tree.arena_size(), -1);
    for (NodeId leaf : leaves) {
      bool touched = false;
      for (NodeId at = leaf; at != kNoNode; at = parent[at])
        if (frame.modified[at]) {
          touched = true;
          break;
        }
      if (touched || assignment[leaf].empty()) continue;
      Label first = data.label(assignment[leaf][0]);
      bool pure = std::all_of(assignment[leaf].begin(), assignment[leaf].end(),
                              [&](int id) { return data.label(id) == first; });
      if (pure) forced[leaf] = static_cast<int>(first);
    }

    for (uint64_t labeling = 0; labeling < (uint64_t{1} << num_leaves); ++labeling) {
      deadline.check();
      bool skip = false;
      for (int i = 0; i < num_leaves; ++i) {
        Label l = (labeling >> i) & 1 ? Label::Red : Label::Blue;
        if (forced[leaves[i]] >= 0 && forced[leaves[i]] != static_cast<int>(l)) {
          skip = true;
          break;
        }
        frame.leaf_labels[leaves[i]] = l;
      }
      if (skip) continue;

      // Error vectors by nondecreasing total, lexicographic within a total.
      for (int total = 0; total <= t; ++total) {
        std::vector<int> parts(num_leaves, 0);
        parts[num_leaves - 1] = total;
        while (true) {
          deadline.check();
          for (int i = 0; i < num_leaves; ++i) frame.error_budget[leaves[i]] = parts[i];
          if (compute_thresholds(tree, data, all_examples, tree.root(), frame, thresholds))
            return true;
          if (!next_composition(parts, total)) break;
        }
      }
    }
    return false;
  };

  auto build_outcome = [&](const std::vector<int>& subset) {
    SubsetOutcome out;
    out.feasible = true;
    for (int idx : subset) {
      NodeId node = cuts[idx];
      Edit e;
      e.node = node;
      e.new_threshold = thresholds[node];
      if (exchange_mode) {
        e.kind = EditKind::Exchange;
        e.new_feature = frame_feature(tree, frame, node);
      } else {
        e.kind = EditKind::Adjust;
      }
      out.script.edits.push_back(e);
    }
    for (NodeId leaf : leaves) out.script.leaf_labels[leaf] = frame.leaf_labels[leaf];
    DecisionTree edited = apply_edits(tree, out.script);
    out.script.achieved_errors = count_errors(edited, data);
    return out;
  };

  for (int size = 0; size <= std::min(k, s); ++size) {
    std::vector<int> subset(size);
    for (int i = 0; i < size; ++i) subset[i] = i;
    do {
      std::fill(frame.modified.begin(), frame.modified.end(), 0);
      for (int idx : subset) frame.modified[cuts[idx]] = 1;

      if (!exchange_mode) {
        if (try_frames()) return build_outcome(subset);
      } else {
        // Guess the feature used at every modified node; the empty subset
        // runs exactly once with no overrides.
        std::vector<int> feat(size, 0);
        while (true) {
          for (int i = 0; i < size; ++i) frame.feature_override[cuts[subset[i]]] = feat[i];
          if (try_frames()) return build_outcome(subset);
          for (int idx : subset) frame.feature_override[cuts[idx]] = -1;
          int pos = size - 1;
          while (pos >= 0 && ++feat[pos] >= data.d()) {
            feat[pos] = 0;
            --pos;
          }
          if (pos < 0) break;
        }
      }
    } while (next_combination(subset, s));
  }
  return {};
}

}  // namespace

SubsetOutcome solve_threshold_adjustment_subset(const LocalSearchInstance& instance,
                                                const Deadline& deadline) {
  if (instance.problem() != ProblemKind::Adjust)
    throw Error(Errc::Validation, "instance is not a threshold-adjustment problem");
  return subset_solve(instance, /*exchange_mode=*/false, deadline);
}

SubsetOutcome solve_cut_exchange_subset(const LocalSearchInstance& instance,
                                        const Deadline& deadline) {
  if (instance.problem() != ProblemKind::Exchange)
    throw Error(Errc::Validation, "instance is not a cut-exchange problem");
  return subset_solve(instance, /*exchange_mode=*/true, deadline);
}

}  // namespace dtls
