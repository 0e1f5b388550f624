#include "dtls/tree.hpp"

#include <functional>
#include <string>

namespace dtls {

std::vector<NodeId> DecisionTree::preorder() const {
  std::vector<NodeId> order;
  if (root_ == kNoNode) return order;
  std::vector<NodeId> stack{root_};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    order.push_back(id);
    const Node& n = nodes_[id];
    if (!n.is_leaf()) {
      stack.push_back(n.right);
      stack.push_back(n.left);
    }
  }
  return order;
}

int DecisionTree::num_cuts() const {
  int s = 0;
  for (NodeId id : preorder())
    if (!nodes_[id].is_leaf()) ++s;
  return s;
}

std::vector<NodeId> DecisionTree::cut_ids() const {
  std::vector<NodeId> ids;
  for (NodeId id : preorder())
    if (!nodes_[id].is_leaf()) ids.push_back(id);
  return ids;
}

std::vector<NodeId> DecisionTree::leaf_ids() const {
  std::vector<NodeId> ids;
  for (NodeId id : preorder())
    if (nodes_[id].is_leaf()) ids.push_back(id);
  return ids;
}

std::vector<NodeId> DecisionTree::parents() const {
  std::vector<NodeId> par(nodes_.size(), kNoNode);
  for (NodeId id : preorder()) {
    const Node& n = nodes_[id];
    if (!n.is_leaf()) {
      par[n.left] = id;
      par[n.right] = id;
    }
  }
  return par;
}

std::vector<int> DecisionTree::subtree_cut_counts() const {
  std::vector<int> counts(nodes_.size(), 0);
  std::function<int(NodeId)> rec = [&](NodeId id) -> int {
    const Node& n = nodes_[id];
    if (n.is_leaf()) return counts[id] = 0;
    return counts[id] = 1 + rec(n.left) + rec(n.right);
  };
  if (root_ != kNoNode) rec(root_);
  return counts;
}

void DecisionTree::validate(int num_features) const {
  if (root_ < 0 || root_ >= arena_size())
    throw Error(Errc::Schema, "tree has no valid root");
  std::vector<int> seen(nodes_.size(), 0);
  std::function<void(NodeId)> rec = [&](NodeId id) {
    if (id < 0 || id >= arena_size())
      throw Error(Errc::Schema, "child id " + std::to_string(id) + " out of range");
    if (seen[id]++)
      throw Error(Errc::Schema, "node " + std::to_string(id) +
                                    " reached twice (cycle or shared child)");
    const Node& n = nodes_[id];
    if (n.is_leaf()) return;
    if (n.left == kNoNode || n.right == kNoNode)
      throw Error(Errc::Schema, "cut node " + std::to_string(id) + " is missing a child");
    if (n.left == n.right)
      throw Error(Errc::Schema, "cut node " + std::to_string(id) + " has identical children");
    if (num_features >= 0 && n.feature >= num_features)
      throw Error(Errc::Schema, "cut node " + std::to_string(id) +
                                    " uses feature index " + std::to_string(n.feature) +
                                    " >= d");
    rec(n.left);
    rec(n.right);
  };
  rec(root_);
}

DecisionTree DecisionTree::compacted() const {
  std::vector<NodeId> order = preorder();
  std::vector<NodeId> remap(nodes_.size(), kNoNode);
  for (size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<NodeId>(i);
  std::vector<Node> out;
  out.reserve(order.size());
  for (NodeId id : order) {
    Node n = nodes_[id];
    if (!n.is_leaf()) {
      n.left = remap[n.left];
      n.right = remap[n.right];
    }
    out.push_back(n);
  }
  return DecisionTree(std::move(out), 0);
}

bool DecisionTree::structurally_equal(const DecisionTree& other) const {
  std::function<bool(NodeId, NodeId)> rec = [&](NodeId a, NodeId b) -> bool {
    const Node& na = nodes_[a];
    const Node& nb = other.nodes_[b];
    if (na.is_leaf() != nb.is_leaf()) return false;
    if (na.is_leaf()) return na.label == nb.label;
    if (na.feature != nb.feature || na.threshold != nb.threshold) return false;
    return rec(na.left, nb.left) && rec(na.right, nb.right);
  };
  if ((root_ == kNoNode) != (other.root_ == kNoNode)) return false;
  if (root_ == kNoNode) return true;
  return rec(root_, other.root_);
}

}  // namespace dtls
