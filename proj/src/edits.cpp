#include "dtls/edits.hpp"

#include <algorithm>

#include "dtls/tree_ops.hpp"

namespace dtls {

const char* edit_kind_name(EditKind k) {
  switch (k) {
    case EditKind::Adjust: return "adjust";
    case EditKind::Exchange: return "exchange";
    case EditKind::Replace: return "replace";
    case EditKind::Raise: return "raise";
  }
  return "?";
}

EditKind edit_kind_from_name(const std::string& name) {
  if (name == "adjust") return EditKind::Adjust;
  if (name == "exchange") return EditKind::Exchange;
  if (name == "replace") return EditKind::Replace;
  if (name == "raise") return EditKind::Raise;
  throw Error(Errc::Parse, "unknown edit kind '" + name + "'");
}

int EditScript::count(EditKind k) const {
  return static_cast<int>(std::count_if(edits.begin(), edits.end(),
                                        [&](const Edit& e) { return e.kind == k; }));
}

bool EditScript::within(const Budgets& budgets) const {
  return count(EditKind::Adjust) <= budgets.adjust &&
         count(EditKind::Exchange) <= budgets.exchange &&
         count(EditKind::Replace) <= budgets.replace &&
         count(EditKind::Raise) <= budgets.raise;
}

namespace {

bool is_strict_descendant(const std::vector<Node>& nodes, NodeId ancestor, NodeId query) {
  const Node& a = nodes[ancestor];
  if (a.is_leaf()) return false;
  std::vector<NodeId> stack{a.left, a.right};
  while (!stack.empty()) {
    NodeId id = stack.back();
    stack.pop_back();
    if (id == query) return true;
    const Node& n = nodes[id];
    if (!n.is_leaf()) {
      stack.push_back(n.left);
      stack.push_back(n.right);
    }
  }
  return false;
}

}  // namespace

DecisionTree apply_edits_preserving_ids(const DecisionTree& tree, const EditScript& script) {
  std::vector<Node> nodes = tree.nodes();
  NodeId root = tree.root();

  auto require_node = [&](NodeId id) {
    if (id < 0 || id >= static_cast<NodeId>(nodes.size()))
      throw Error(Errc::InvalidEdit, "edit references unknown node " + std::to_string(id));
  };

  for (const Edit& e : script.edits) {
    require_node(e.node);
    Node& target = nodes[e.node];
    switch (e.kind) {
      case EditKind::Adjust:
        if (target.is_leaf())
          throw Error(Errc::InvalidEdit, "adjust on leaf " + std::to_string(e.node));
        target.threshold = e.new_threshold;
        break;
      case EditKind::Exchange:
        if (target.is_leaf())
          throw Error(Errc::InvalidEdit, "exchange on leaf " + std::to_string(e.node));
        if (e.new_feature < 0)
          throw Error(Errc::InvalidEdit, "exchange needs a feature index");
        target.feature = e.new_feature;
        target.threshold = e.new_threshold;
        break;
      case EditKind::Replace: {
        if (target.is_leaf())
          throw Error(Errc::InvalidEdit, "replace on leaf " + std::to_string(e.node));
        Label keep = target.label;
        target = Node::leaf(keep);
        break;
      }
      case EditKind::Raise: {
        require_node(e.raise_source);
        if (!is_strict_descendant(nodes, e.node, e.raise_source))
          throw Error(Errc::InvalidEdit,
                      "raise source " + std::to_string(e.raise_source) +
                          " is not a strict descendant of " + std::to_string(e.node));
        if (e.node == root) {
          root = e.raise_source;
        } else {
          // Rewire the (unique) parent of the raised-away node.
          NodeId parent = kNoNode;
          std::vector<NodeId> stack{root};
          while (!stack.empty() && parent == kNoNode) {
            NodeId id = stack.back();
            stack.pop_back();
            const Node& n = nodes[id];
            if (n.is_leaf()) continue;
            if (n.left == e.node || n.right == e.node) {
              parent = id;
              break;
            }
            stack.push_back(n.left);
            stack.push_back(n.right);
          }
          if (parent == kNoNode)
            throw Error(Errc::InvalidEdit,
                        "raise target " + std::to_string(e.node) + " is not reachable");
          if (nodes[parent].left == e.node)
            nodes[parent].left = e.raise_source;
          else
            nodes[parent].right = e.raise_source;
        }
        break;
      }
    }
  }

  for (const auto& [id, label] : script.leaf_labels) {
    require_node(id);
    if (!nodes[id].is_leaf())
      throw Error(Errc::InvalidEdit, "relabel target " + std::to_string(id) + " is not a leaf");
    nodes[id].label = label;
  }

  return DecisionTree(std::move(nodes), root);
}

DecisionTree apply_edits(const DecisionTree& tree, const EditScript& script) {
  return apply_edits_preserving_ids(tree, script).compacted();
}

void finalize_script_majority(const DecisionTree& tree, const Dataset& data,
                              EditScript& script) {
  EditScript structural;
  structural.edits = script.edits;
  DecisionTree raw = apply_edits_preserving_ids(tree, structural);
  auto [relabeled, errors] = relabel_leaves_majority(raw, data);
  script.leaf_labels.clear();
  for (NodeId id : relabeled.leaf_ids()) script.leaf_labels[id] = relabeled.node(id).label;
  script.achieved_errors = errors;
}

}  // namespace dtls
