#include "dtls/random_instance.hpp"

#include <algorithm>

#include "dtls/box.hpp"
#include "dtls/tree_ops.hpp"

namespace dtls {

namespace {

DecisionTree random_tree(Rng& rng, const Dataset& data, const FeatureGrids& grids, int s) {
  std::vector<Node> nodes;
  nodes.push_back(Node::leaf(rng.below(2) ? Label::Red : Label::Blue));
  std::vector<NodeId> leaves{0};
  for (int grown = 0; grown < s; ++grown) {
    int pick = rng.below(static_cast<int>(leaves.size()));
    NodeId slot = leaves[pick];
    leaves.erase(leaves.begin() + pick);
    int feature = rng.below(data.d());
    int thr_idx = rng.below(grids.size(feature));  // index 0 is the -inf sentinel
    NodeId left = static_cast<NodeId>(nodes.size());
    nodes.push_back(Node::leaf(rng.below(2) ? Label::Red : Label::Blue));
    NodeId right = static_cast<NodeId>(nodes.size());
    nodes.push_back(Node::leaf(rng.below(2) ? Label::Red : Label::Blue));
    nodes[slot] = Node::cut(feature, grids.value(feature, thr_idx), left, right);
    leaves.push_back(left);
    leaves.push_back(right);
  }
  return DecisionTree(std::move(nodes), 0);
}

}  // namespace

RandomInstance random_instance(Rng& rng, const RandomBounds& bounds) {
  int n = rng.range(bounds.n_min, bounds.n_max);
  int d = rng.range(bounds.d_min, bounds.d_max);
  std::vector<int> levels(d);
  for (int j = 0; j < d; ++j) levels[j] = rng.range(1, bounds.domain_max);

  std::vector<double> values(static_cast<size_t>(n) * d);
  std::vector<Label> labels(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j)
      values[static_cast<size_t>(i) * d + j] = static_cast<double>(rng.below(levels[j]));
    labels[i] = rng.below(2) ? Label::Red : Label::Blue;
  }
  Dataset data(n, d, std::move(values), std::move(labels));
  FeatureGrids grids(data);

  int s = rng.range(bounds.s_min, bounds.s_max);
  if (!bounds.reasonable) return {data, random_tree(rng, data, grids, s)};

  // Rejection sampling: majority-relabel each candidate and keep the first
  // reasonable one; shrink the tree when a size never succeeds.
  for (int size = s; size >= 0; --size) {
    for (int attempt = 0; attempt < 200; ++attempt) {
      DecisionTree tree = random_tree(rng, data, grids, size);
      auto [relabeled, errors] = relabel_leaves_majority(tree, data);
      (void)errors;
      if (check_reasonable(relabeled, data).is_reasonable) return {data, relabeled};
    }
  }
  return {data, DecisionTree::single_leaf(Label::Blue)};  // unreachable: size 0 always passes
}

RandomInstance random_instance(uint64_t seed, const RandomBounds& bounds) {
  Rng rng(seed);
  return random_instance(rng, bounds);
}

}  // namespace dtls
