#ifndef DTLS_TREE_HPP
#define DTLS_TREE_HPP

#include <vector>

#include "dtls/common.hpp"

namespace dtls {

/// One node of a decision tree. Internal nodes ("cuts") carry a feature
/// index and a threshold; leaves carry a class label. A node is a leaf
/// iff feature < 0.
struct Node {
  int feature = -1;
  double threshold = 0.0;
  NodeId left = kNoNode;
  NodeId right = kNoNode;
  Label label = Label::Blue;

  bool is_leaf() const { return feature < 0; }

  static Node leaf(Label l) {
    Node n;
    n.label = l;
    return n;
  }
  static Node cut(int feature, double threshold, NodeId left, NodeId right) {
    Node n;
    n.feature = feature;
    n.threshold = threshold;
    n.left = left;
    n.right = right;
    return n;
  }
};

/// Rooted ordered binary tree stored in an arena; routing sends an example
/// left iff example[feature] <= threshold.
class DecisionTree {
public:
  DecisionTree() = default;
  DecisionTree(std::vector<Node> nodes, NodeId root) : nodes_(std::move(nodes)), root_(root) {}

  /// Convenience constructor for a single-leaf tree.
  static DecisionTree single_leaf(Label l) { return DecisionTree({Node::leaf(l)}, 0); }

  NodeId root() const { return root_; }
  const Node& node(NodeId id) const { return nodes_[id]; }
  Node& node(NodeId id) { return nodes_[id]; }
  int arena_size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<Node>& nodes() const { return nodes_; }

  /// Number of cut nodes reachable from the root.
  int num_cuts() const;
  int num_leaves() const { return num_cuts() + 1; }

  /// Reachable node ids in preorder (parent, left subtree, right subtree).
  std::vector<NodeId> preorder() const;
  std::vector<NodeId> cut_ids() const;
  std::vector<NodeId> leaf_ids() const;

  /// Parent of every reachable node (kNoNode for the root and for
  /// unreachable arena slots).
  std::vector<NodeId> parents() const;

  /// Number of cut nodes in the subtree rooted at each reachable node.
  std::vector<int> subtree_cut_counts() const;

  /// Checks the structural invariants: root exists, exactly one parent per
  /// reachable non-root node, both children present on cuts, no cycles, and
  /// feature indices below num_features (when >= 0 is given).
  void validate(int num_features = -1) const;

  /// Drops unreachable arena slots and renumbers ids in preorder.
  DecisionTree compacted() const;

  bool structurally_equal(const DecisionTree& other) const;

private:
  std::vector<Node> nodes_;
  NodeId root_ = kNoNode;
};

}  // namespace dtls

#endif
