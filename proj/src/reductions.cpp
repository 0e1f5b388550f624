#include "dtls/reductions.hpp"

#include <algorithm>
#include <cmath>

#include "dtls/tree_ops.hpp"

namespace dtls {

void HittingSetInstance::validate() const {
  if (universe_size < 1)
    throw Error(Errc::Validation, "hitting-set universe must be nonempty");
  if (kappa < 0) throw Error(Errc::Validation, "hitting-set target size must be >= 0");
  for (const auto& set : sets) {
    if (set.empty()) throw Error(Errc::Validation, "hitting-set family contains an empty set");
    for (int e : set)
      if (e < 1 || e > universe_size)
        throw Error(Errc::Validation,
                    "set element " + std::to_string(e) + " outside the universe");
  }
}

int brute_force_hitting_set(const HittingSetInstance& hs) {
  hs.validate();
  if (hs.universe_size > 20)
    throw Error(Errc::Capacity, "hitting-set brute force is limited to |U| <= 20");
  if (hs.sets.empty()) return 0;
  int u = hs.universe_size;
  for (int size = 0; size <= u; ++size) {
    for (uint32_t mask = 0; mask < (uint32_t{1} << u); ++mask) {
      if (__builtin_popcount(mask) != size) continue;
      bool hits_all = true;
      for (const auto& set : hs.sets) {
        bool hit = false;
        for (int e : set)
          if (mask & (uint32_t{1} << (e - 1))) {
            hit = true;
            break;
          }
        if (!hit) {
          hits_all = false;
          break;
        }
      }
      if (hits_all) return size;
    }
  }
  return u;
}

GeneratedInstance hitting_set_to_ta(const HittingSetInstance& hs) {
  hs.validate();
  int u = hs.universe_size;
  int num_sets = static_cast<int>(hs.sets.size());

  // Core data values are {0, 1}; the unbounded padding coordinates become
  // the one-outside sentinels -1 and 2.
  const double lo = -1.0, hi = 2.0;

  std::vector<double> values;
  std::vector<Label> labels;
  auto add_example = [&](const std::vector<double>& row, Label l) {
    values.insert(values.end(), row.begin(), row.end());
    labels.push_back(l);
  };

  for (const auto& set : hs.sets) {
    std::vector<double> row(u, 1.0);
    for (int e : set) row[e - 1] = 0.0;
    add_example(row, Label::Red);
  }
  add_example(std::vector<double>(u, 1.0), Label::Blue);

  int n_core = num_sets + 1;
  // Reasonability padding: every red leaf of the chain gets n_core + 1
  // dedicated red examples, the blue leaf n_core + 1 extra blue ones.
  for (int i = 0; i < u; ++i) {
    std::vector<double> row(u, hi);
    for (int j = i; j < u; ++j) row[j] = lo;
    for (int c = 0; c <= n_core; ++c) add_example(row, Label::Red);
  }
  for (int c = 0; c <= n_core; ++c) add_example(std::vector<double>(u, hi), Label::Blue);

  std::vector<std::string> names;
  names.reserve(u);
  for (int i = 1; i <= u; ++i) names.push_back("u" + std::to_string(i));
  int n = static_cast<int>(labels.size());
  Dataset data(n, u, std::move(values), std::move(labels), std::move(names));

  // Chain of one cut per universe element. The initial threshold sits one
  // grid step below the core values, so every set example is misrouted
  // until its cut is adjusted up to 0.
  std::vector<Node> nodes;
  std::vector<NodeId> cut_for_element(u, kNoNode);
  NodeId blue_leaf = static_cast<NodeId>(nodes.size());
  nodes.push_back(Node::leaf(Label::Blue));
  NodeId next = blue_leaf;
  for (int i = u; i >= 1; --i) {
    NodeId red_leaf = static_cast<NodeId>(nodes.size());
    nodes.push_back(Node::leaf(Label::Red));
    NodeId cut = static_cast<NodeId>(nodes.size());
    nodes.push_back(Node::cut(i - 1, lo, red_leaf, next));
    cut_for_element[i - 1] = cut;
    next = cut;
  }
  DecisionTree tree(std::move(nodes), next);

  GeneratedInstance out{
      LocalSearchInstance(std::move(data), std::move(tree), ProblemKind::Adjust, hs.kappa, 0),
      {},
      std::move(cut_for_element)};
  out.provenance["kind"] = "hitting-set";
  out.provenance["universe_size"] = std::to_string(u);
  out.provenance["num_sets"] = std::to_string(num_sets);
  out.provenance["kappa"] = std::to_string(hs.kappa);
  out.provenance["core_examples"] = std::to_string(n_core);
  out.provenance["core_domain_size"] = "2";
  return out;
}

TaToCeResult ta_to_ce(const LocalSearchInstance& ta) {
  if (ta.problem() != ProblemKind::Adjust)
    throw Error(Errc::Validation, "input must be a threshold-adjustment instance");
  if (!ta.error_bound())
    throw Error(Errc::Validation, "the transformation needs an explicit error bound t");
  const Dataset& data = ta.dataset();
  if (data.n() < 1) throw Error(Errc::Validation, "the transformation needs n >= 1");

  int n = data.n();
  int t = *ta.error_bound();
  int s_orig = ta.tree().num_cuts();
  int k_prime = ta.k();
  int k = k_prime + s_orig + 1;

  // Step 1: make every feature appear at most once in the tree by cloning
  // columns for repeat uses. Sentinel thresholds below the data are
  // replaced by a finite stand-in with identical routing so the padding
  // coordinates stay finite.
  DecisionTree tree = ta.tree();
  std::vector<int> col_source;  // new column -> original column
  for (int j = 0; j < data.d(); ++j) col_source.push_back(j);
  {
    std::vector<int> uses(data.d(), 0);
    for (NodeId id : tree.preorder()) {
      Node& nd = tree.node(id);
      if (nd.is_leaf()) continue;
      if (!std::isfinite(nd.threshold)) {
        double mn = data.at(0, nd.feature);
        for (int i = 1; i < n; ++i) mn = std::min(mn, data.at(i, nd.feature));
        nd.threshold = std::floor(mn) - 1;
      }
      if (uses[nd.feature]++ > 0) {
        col_source.push_back(nd.feature);
        nd.feature = static_cast<int>(col_source.size()) - 1;
      }
    }
  }
  int d_orig = static_cast<int>(col_source.size());

  std::vector<NodeId> leaves = tree.leaf_ids();
  int num_leaves = static_cast<int>(leaves.size());
  int d_total = d_orig + num_leaves * (k + 2);
  auto gadget_col = [&](int leaf_idx, int which) {
    // which: 0..k-1 are the chain features, k is alpha, k+1 is beta.
    return d_orig + leaf_idx * (k + 2) + which;
  };

  // Per original feature, sentinels one step outside both the data values
  // and the tree thresholds, so path coordinates always route as intended.
  std::vector<double> lo_of(d_orig), hi_of(d_orig);
  for (int j = 0; j < d_orig; ++j) {
    double mn = data.at(0, col_source[j]), mx = mn;
    for (int i = 0; i < n; ++i) {
      mn = std::min(mn, data.at(i, col_source[j]));
      mx = std::max(mx, data.at(i, col_source[j]));
    }
    for (NodeId id : tree.cut_ids()) {
      if (tree.node(id).feature == j) {
        mn = std::min(mn, tree.node(id).threshold);
        mx = std::max(mx, tree.node(id).threshold);
      }
    }
    lo_of[j] = std::floor(mn) - 1;
    hi_of[j] = std::ceil(mx) + 1;
  }
  const double g_zero = 0.0, g_low = -1.0, g_hi = 1.0;

  std::vector<double> values;
  std::vector<Label> labels;
  auto add_row = [&](const std::vector<double>& row, Label l, int copies) {
    for (int c = 0; c < copies; ++c) {
      values.insert(values.end(), row.begin(), row.end());
      labels.push_back(l);
    }
  };

  // Original examples, extended: cloned original columns, alpha = 0
  // everywhere, every other gadget coordinate high.
  for (int i = 0; i < n; ++i) {
    std::vector<double> row(d_total, g_hi);
    for (int j = 0; j < d_orig; ++j) row[j] = data.at(i, col_source[j]);
    for (int lf = 0; lf < num_leaves; ++lf) row[gadget_col(lf, k)] = g_zero;
    add_row(row, data.label(i), 1);
  }

  // Leaf examples. Path coordinates follow the root-to-leaf directions;
  // off-path original features are high for the "+" family and low for the
  // "-" family and the single extra blue example.
  std::vector<NodeId> parent = tree.parents();
  for (int lf = 0; lf < num_leaves; ++lf) {
    NodeId leaf = leaves[lf];
    std::vector<char> on_path(tree.arena_size(), 0);
    std::vector<double> path_value(d_orig, 0.0);
    std::vector<char> path_feature(d_orig, 0);
    for (NodeId at = leaf; parent[at] != kNoNode; at = parent[at]) {
      NodeId p = parent[at];
      const Node& pn = tree.node(p);
      path_feature[pn.feature] = 1;
      path_value[pn.feature] = tree.node(p).left == at ? lo_of[pn.feature] : hi_of[pn.feature];
      on_path[p] = 1;
    }
    auto base_row = [&](bool plus_family) {
      std::vector<double> row(d_total, g_hi);
      for (int j = 0; j < d_orig; ++j) {
        if (path_feature[j])
          row[j] = path_value[j];
        else
          row[j] = plus_family ? hi_of[j] : lo_of[j];
      }
      return row;
    };
    for (int l = 1; l <= k; ++l) {
      auto plus = base_row(true);
      plus[gadget_col(lf, l - 1)] = g_zero;
      add_row(plus, Label::Red, t + 1);
      auto minus = base_row(false);
      minus[gadget_col(lf, l - 1)] = g_zero;
      add_row(minus, Label::Red, t + 1);
    }
    {
      auto plus = base_row(true);
      plus[gadget_col(lf, k)] = g_zero;
      plus[gadget_col(lf, k + 1)] = g_zero;
      add_row(plus, Label::Blue, t + 1);
      auto minus = base_row(false);
      minus[gadget_col(lf, k)] = g_zero;
      minus[gadget_col(lf, k + 1)] = g_zero;
      add_row(minus, Label::Blue, t + 1);
    }
    add_row(base_row(true), Label::Red, n + t + 2);
    add_row(base_row(false), Label::Red, n + t + 2);
    {
      // The anchor example: the only one below the initial alpha threshold.
      auto anchor = base_row(false);
      anchor[gadget_col(lf, k)] = g_low;
      anchor[gadget_col(lf, k + 1)] = g_zero;
      add_row(anchor, Label::Blue, 1);
    }
  }

  std::vector<std::string> names;
  for (int j = 0; j < d_orig; ++j) {
    std::string base = data.feature_name(col_source[j]);
    int copy = 0;
    for (int p = 0; p < j; ++p)
      if (col_source[p] == col_source[j]) ++copy;
    names.push_back(copy == 0 ? base : base + "_copy" + std::to_string(copy));
  }
  for (int lf = 0; lf < num_leaves; ++lf) {
    for (int l = 1; l <= k; ++l)
      names.push_back("g" + std::to_string(lf) + "_" + std::to_string(l));
    names.push_back("g" + std::to_string(lf) + "_alpha");
    names.push_back("g" + std::to_string(lf) + "_beta");
  }

  // Replace every leaf by the gadget chain: k cuts on the chain features
  // (threshold 0), then the alpha cut (threshold -1) with a blue leaf on
  // the left and a red leaf on the right.
  std::vector<Node> nodes = tree.nodes();
  for (int lf = 0; lf < num_leaves; ++lf) {
    NodeId chain_tail;
    {
      NodeId blue = static_cast<NodeId>(nodes.size());
      nodes.push_back(Node::leaf(Label::Blue));
      NodeId red = static_cast<NodeId>(nodes.size());
      nodes.push_back(Node::leaf(Label::Red));
      chain_tail = static_cast<NodeId>(nodes.size());
      nodes.push_back(Node::cut(gadget_col(lf, k), g_low, blue, red));
    }
    for (int l = k; l >= 1; --l) {
      NodeId red = static_cast<NodeId>(nodes.size());
      nodes.push_back(Node::leaf(Label::Red));
      NodeId cut = static_cast<NodeId>(nodes.size());
      nodes.push_back(Node::cut(gadget_col(lf, l - 1), g_zero, red, chain_tail));
      chain_tail = cut;
    }
    NodeId leaf = leaves[lf];
    if (leaf == tree.root()) {
      nodes[leaf] = nodes[chain_tail];  // single-leaf tree: gadget is the root
    } else {
      NodeId p = parent[leaf];
      if (nodes[p].left == leaf)
        nodes[p].left = chain_tail;
      else
        nodes[p].right = chain_tail;
    }
  }

  DecisionTree ce_tree = DecisionTree(std::move(nodes), tree.root()).compacted();
  int total = static_cast<int>(labels.size());
  Dataset ce_data(total, d_total, std::move(values), std::move(labels), std::move(names));

  TaToCeResult out{
      LocalSearchInstance(std::move(ce_data), ce_tree, ProblemKind::Exchange, k, t), {}};
  // Original cuts keep their preorder position in the compacted tree.
  for (NodeId id : out.instance.tree().cut_ids())
    if (out.instance.tree().node(id).feature < d_orig) out.original_cuts.push_back(id);
  return out;
}

LocalSearchInstance fixed_structure_instance(const Dataset& data, const DecisionTree& shape,
                                             FixedStructureKind kind, int t) {
  DecisionTree tree = shape;
  for (NodeId id : tree.preorder()) {
    Node& n = tree.node(id);
    if (n.is_leaf()) {
      n.label = Label::Blue;
      continue;
    }
    if (kind == FixedStructureKind::FreeFeatures) {
      n.feature = 0;
    } else if (n.feature < 0 || n.feature >= data.d()) {
      throw Error(Errc::Validation, "fixed-feature shape maps node " + std::to_string(id) +
                                        " to invalid feature " + std::to_string(n.feature));
    }
    n.threshold = kNegInf;
  }
  int s = tree.num_cuts();
  ProblemKind problem = kind == FixedStructureKind::FreeFeatures ? ProblemKind::Exchange
                                                                 : ProblemKind::Adjust;
  return LocalSearchInstance(data, std::move(tree), problem, s, t);
}

}  // namespace dtls
