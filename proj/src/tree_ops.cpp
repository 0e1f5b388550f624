#include "dtls/tree_ops.hpp"

#include <algorithm>

namespace dtls {

namespace {

NodeId route(const DecisionTree& tree, const std::vector<double>* vec, const Dataset* data,
             int row, int d) {
  NodeId id = tree.root();
  while (true) {
    const Node& n = tree.node(id);
    if (n.is_leaf()) return id;
    if (n.feature >= d)
      throw Error(Errc::Validation, "cut feature index exceeds example dimension");
    double v = vec ? (*vec)[n.feature] : data->at(row, n.feature);
    id = v <= n.threshold ? n.left : n.right;
  }
}

}  // namespace

std::pair<NodeId, Label> classify(const DecisionTree& tree, const Dataset& data, int row) {
  NodeId leaf = route(tree, nullptr, &data, row, data.d());
  return {leaf, tree.node(leaf).label};
}

std::pair<NodeId, Label> classify(const DecisionTree& tree, const std::vector<double>& example) {
  NodeId leaf = route(tree, &example, nullptr, 0, static_cast<int>(example.size()));
  return {leaf, tree.node(leaf).label};
}

std::vector<std::vector<int>> assign_examples(const DecisionTree& tree, const Dataset& data) {
  std::vector<std::vector<int>> sets(tree.arena_size());
  for (int i = 0; i < data.n(); ++i) {
    NodeId id = tree.root();
    while (true) {
      sets[id].push_back(i);
      const Node& n = tree.node(id);
      if (n.is_leaf()) break;
      id = data.at(i, n.feature) <= n.threshold ? n.left : n.right;
    }
  }
  return sets;
}

int count_errors(const DecisionTree& tree, const Dataset& data) {
  int errors = 0;
  for (int i = 0; i < data.n(); ++i)
    if (classify(tree, data, i).second != data.label(i)) ++errors;
  return errors;
}

namespace {

// Per-leaf (blue, red) counts of the examples reaching each leaf.
std::vector<std::pair<int, int>> leaf_counts(const DecisionTree& tree, const Dataset& data) {
  std::vector<std::pair<int, int>> counts(tree.arena_size(), {0, 0});
  for (int i = 0; i < data.n(); ++i) {
    NodeId leaf = classify(tree, data, i).first;
    if (data.label(i) == Label::Blue)
      counts[leaf].first++;
    else
      counts[leaf].second++;
  }
  return counts;
}

}  // namespace

std::pair<DecisionTree, int> relabel_leaves_majority(const DecisionTree& tree,
                                                     const Dataset& data) {
  auto counts = leaf_counts(tree, data);
  DecisionTree out = tree;
  int errors = 0;
  for (NodeId id : tree.leaf_ids()) {
    auto [blue, red] = counts[id];
    out.node(id).label = red > blue ? Label::Red : Label::Blue;
    errors += std::min(blue, red);
  }
  return {std::move(out), errors};
}

int majority_errors(const DecisionTree& tree, const Dataset& data) {
  auto counts = leaf_counts(tree, data);
  int errors = 0;
  for (NodeId id : tree.leaf_ids())
    errors += std::min(counts[id].first, counts[id].second);
  return errors;
}

ReasonabilityReport check_reasonable(const DecisionTree& tree, const Dataset& data) {
  auto counts = leaf_counts(tree, data);
  ReasonabilityReport rep;
  for (NodeId id : tree.leaf_ids()) {
    auto [blue, red] = counts[id];
    if (blue + red == 0) {
      rep.empty_leaves.push_back(id);
      continue;
    }
    int own = tree.node(id).label == Label::Blue ? blue : red;
    int opposite = blue + red - own;
    if (own < opposite) rep.minority_leaves.push_back(id);
  }
  rep.is_reasonable = rep.empty_leaves.empty() && rep.minority_leaves.empty();
  return rep;
}

}  // namespace dtls
