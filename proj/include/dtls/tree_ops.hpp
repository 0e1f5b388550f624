#ifndef DTLS_TREE_OPS_HPP
#define DTLS_TREE_OPS_HPP

#include <utility>
#include <vector>

#include "dtls/dataset.hpp"
#include "dtls/tree.hpp"

namespace dtls {

/// Routes one example down the tree; returns the leaf reached and its class.
/// At a cut the example goes left iff example[feature] <= threshold.
std::pair<NodeId, Label> classify(const DecisionTree& tree, const Dataset& data, int row);
std::pair<NodeId, Label> classify(const DecisionTree& tree, const std::vector<double>& example);

/// Example ids reaching every node, indexed by node id. The root holds all
/// examples; sibling sets partition their parent's set; leaf sets partition
/// the dataset.
std::vector<std::vector<int>> assign_examples(const DecisionTree& tree, const Dataset& data);

/// Number of examples whose leaf class differs from their label.
int count_errors(const DecisionTree& tree, const Dataset& data);

/// Relabels every leaf with the majority class of its examples (ties and
/// empty leaves become blue). The returned count is minimal over all leaf
/// labelings of this tree shape.
std::pair<DecisionTree, int> relabel_leaves_majority(const DecisionTree& tree,
                                                     const Dataset& data);

/// Minimum error count over all leaf labelings, without materializing the tree.
int majority_errors(const DecisionTree& tree, const Dataset& data);

struct ReasonabilityReport {
  std::vector<NodeId> empty_leaves;
  std::vector<NodeId> minority_leaves;  // strict minority only; ties pass
  bool is_reasonable = false;
};

ReasonabilityReport check_reasonable(const DecisionTree& tree, const Dataset& data);

}  // namespace dtls

#endif
