#ifndef DTLS_SUBSET_SEARCH_HPP
#define DTLS_SUBSET_SEARCH_HPP

#include <vector>

#include "dtls/edits.hpp"
#include "dtls/instance.hpp"

namespace dtls {

/// One guessed configuration of the subset solver: the set of modified
/// nodes, a full leaf labeling, a per-leaf error budget, and (exchange
/// only) the feature assigned to every modified node. All vectors are
/// indexed by node id.
struct GuessFrame {
  std::vector<char> modified;         // nonzero on the guessed node set N
  std::vector<Label> leaf_labels;
  std::vector<int> error_budget;      // per-leaf t_i, sum <= t
  std::vector<int> feature_override;  // -1 keeps the node's own feature
};

/// Checks whether thresholds can be assigned to all modified nodes in the
/// subtree rooted at `node`, restricted to the examples in `subset`, so
/// that every leaf stays within its error budget. On success the chosen
/// thresholds for modified nodes are left in `thresholds` (node-indexed).
/// The right subtree is evaluated before the left one.
bool compute_thresholds(const DecisionTree& tree, const Dataset& data,
                        const std::vector<int>& subset, NodeId node, const GuessFrame& frame,
                        std::vector<double>& thresholds);

/// The largest threshold of the node's (possibly overridden) feature whose
/// left-subtree check succeeds on `subset`; the -inf sentinel when even the
/// smallest data value fails, which routes everything right.
double binary_search_threshold(const DecisionTree& tree, const Dataset& data,
                               const std::vector<int>& subset, NodeId node,
                               const GuessFrame& frame, std::vector<double>& thresholds);

struct SubsetOutcome {
  bool feasible = false;
  EditScript script;  // set when feasible
};

/// Decision solver for threshold adjustment with budgets k (edits) and t
/// (errors): exhaustive over node subsets, leaf labelings and error
/// vectors, with binary search filling in the thresholds. The error bound
/// t must be present on the instance.
SubsetOutcome solve_threshold_adjustment_subset(const LocalSearchInstance& instance,
                                                const Deadline& deadline = Deadline::none());

/// Cut-exchange variant: additionally guesses the feature used at every
/// modified node.
SubsetOutcome solve_cut_exchange_subset(const LocalSearchInstance& instance,
                                        const Deadline& deadline = Deadline::none());

}  // namespace dtls

#endif
