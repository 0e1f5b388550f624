#include "dtls/dp.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <unordered_map>

#include "dtls/tree_ops.hpp"

namespace dtls {

namespace {

struct CbHash {
  size_t operator()(const CanonicalBox& b) const {
    size_t h = 1469598103934665603ull;
    for (uint16_t v : b) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

/// Interns snapped boxes and caches per-box class counts. Examples are
/// pre-snapped to grid indices so membership tests are integer compares.
class BoxContext {
public:
  BoxContext(const Dataset& data, const FeatureGrids& grids) : data_(data), grids_(grids) {
    d_ = data.d();
    ex_idx_.resize(static_cast<size_t>(data.n()) * d_);
    for (int i = 0; i < data.n(); ++i)
      for (int j = 0; j < d_; ++j)
        ex_idx_[static_cast<size_t>(i) * d_ + j] =
            static_cast<uint16_t>(grids.snap(j, data.at(i, j)));
  }

  uint32_t intern(const CanonicalBox& cb) {
    auto [it, fresh] = ids_.try_emplace(cb, static_cast<uint32_t>(boxes_.size()));
    if (fresh) {
      boxes_.push_back(cb);
      counts_.emplace_back(-1, -1);
    }
    return it->second;
  }

  uint32_t full_box() {
    CanonicalBox cb(static_cast<size_t>(d_) * 2);
    for (int j = 0; j < d_; ++j) {
      cb[2 * j] = 0;
      cb[2 * j + 1] = static_cast<uint16_t>(grids_.size(j) - 1);
    }
    return intern(cb);
  }

  uint32_t restricted(uint32_t box, int feature, int thr_idx, Side side) {
    CanonicalBox cb = boxes_[box];
    uint16_t lo = cb[2 * feature], hi = cb[2 * feature + 1];
    if (side == Side::Left) {
      hi = std::min(hi, static_cast<uint16_t>(thr_idx));
      if (hi < lo) hi = lo;
    } else {
      lo = std::max(lo, static_cast<uint16_t>(thr_idx));
      if (lo > hi) lo = hi;
    }
    cb[2 * feature] = lo;
    cb[2 * feature + 1] = hi;
    return intern(cb);
  }

  std::pair<int, int> counts(uint32_t box) {
    auto& c = counts_[box];
    if (c.first >= 0) return c;
    const CanonicalBox& cb = boxes_[box];
    int blue = 0, red = 0;
    for (int i = 0; i < data_.n(); ++i) {
      bool inside = true;
      const uint16_t* idx = &ex_idx_[static_cast<size_t>(i) * d_];
      for (int j = 0; j < d_; ++j) {
        if (!(cb[2 * j] < idx[j] && idx[j] <= cb[2 * j + 1])) {
          inside = false;
          break;
        }
      }
      if (inside) (data_.label(i) == Label::Blue ? blue : red)++;
    }
    c = {blue, red};
    return c;
  }

  size_t num_boxes() const { return boxes_.size(); }

private:
  const Dataset& data_;
  const FeatureGrids& grids_;
  int d_;
  std::vector<uint16_t> ex_idx_;
  std::unordered_map<CanonicalBox, uint32_t, CbHash> ids_;
  std::vector<CanonicalBox> boxes_;
  std::vector<std::pair<int, int>> counts_;
};

// ---------------------------------------------------------------------------
// Single-operation solver (threshold adjustment / cut exchange)
// ---------------------------------------------------------------------------

struct Choice {
  uint8_t branch = 0;  // 0 leaf, 1 keep, 2 edit
  uint16_t split = 0;  // left-child budget share
  int16_t feature = -1;
  int16_t thr_idx = -1;
};

struct QVal {
  int32_t errors = kInfeasible;
  int32_t edits = kInfeasible;
  Choice choice;
};

class SingleOpSolver {
public:
  SingleOpSolver(const LocalSearchInstance& inst, bool exchange_mode, const Deadline& deadline)
      : inst_(inst), tree_(inst.tree()), exchange_mode_(exchange_mode),
        grids_(inst.dataset()), boxes_(inst.dataset(), grids_), deadline_(deadline) {
    if (tree_.arena_size() >= 4096)
      throw Error(Errc::Validation, "tree too large for the dp solver (>= 4096 nodes)");
    orig_thr_idx_.resize(tree_.arena_size(), -1);
    for (NodeId id : tree_.cut_ids())
      orig_thr_idx_[id] =
          static_cast<int16_t>(grids_.snap(tree_.node(id).feature, tree_.node(id).threshold));
  }

  SolveResult run() {
    deadline_.check();
    uint32_t full = boxes_.full_box();
    int k = inst_.k();
    SolveResult result;
    result.errors_by_budget.resize(k + 1);
    for (int j = 0; j <= k; ++j)
      result.errors_by_budget[j] = solve(tree_.root(), full, j).errors;

    backtrack(tree_.root(), full, k, result.script);
    finalize_script_majority(inst_.tree(), inst_.dataset(), result.script);
    return result;
  }

private:
  uint64_t key(NodeId v, uint32_t box, int k) const {
    return (static_cast<uint64_t>(box) << 24) | (static_cast<uint64_t>(v) << 12) |
           static_cast<uint64_t>(k);
  }

  const QVal& solve(NodeId v, uint32_t box, int k) {
    uint64_t mk = key(v, box, k);
    auto it = memo_.find(mk);
    if (it != memo_.end()) return it->second;
    if ((++ticks_ & 0xFF) == 0) deadline_.check();

    const Node& n = tree_.node(v);
    QVal best;
    if (n.is_leaf()) {
      auto [blue, red] = boxes_.counts(box);
      best = {std::min(blue, red), 0, Choice{0, 0, -1, -1}};
    } else {
      auto consider = [&](int32_t errors, int32_t edits, Choice c) {
        if (errors < best.errors || (errors == best.errors && edits < best.edits)) {
          best.errors = errors;
          best.edits = edits;
          best.choice = c;
        }
      };
      // Unchanged cut: split the budget between the children.
      {
        uint32_t lb = boxes_.restricted(box, n.feature, orig_thr_idx_[v], Side::Left);
        uint32_t rb = boxes_.restricted(box, n.feature, orig_thr_idx_[v], Side::Right);
        for (int split = 0; split <= k; ++split) {
          const QVal& l = solve(n.left, lb, split);
          const QVal& r = solve(n.right, rb, k - split);
          consider(l.errors + r.errors, l.edits + r.edits,
                   Choice{1, static_cast<uint16_t>(split), -1, -1});
        }
      }
      // Edited cut: new threshold from the grid; exchange mode may also
      // re-pick the feature.
      if (k >= 1) {
        int j_lo = exchange_mode_ ? 0 : n.feature;
        int j_hi = exchange_mode_ ? grids_.num_features() - 1 : n.feature;
        for (int j = j_lo; j <= j_hi; ++j) {
          for (int x = 0; x < grids_.size(j); ++x) {
            uint32_t lb = boxes_.restricted(box, j, x, Side::Left);
            uint32_t rb = boxes_.restricted(box, j, x, Side::Right);
            for (int split = 0; split <= k - 1; ++split) {
              const QVal& l = solve(n.left, lb, split);
              const QVal& r = solve(n.right, rb, k - 1 - split);
              consider(l.errors + r.errors, l.edits + r.edits + 1,
                       Choice{2, static_cast<uint16_t>(split), static_cast<int16_t>(j),
                              static_cast<int16_t>(x)});
            }
          }
        }
      }
    }
    return memo_.emplace(mk, best).first->second;
  }

  void backtrack(NodeId v, uint32_t box, int k, EditScript& out) {
    auto it = memo_.find(key(v, box, k));
    if (it == memo_.end())
      throw Error(Errc::Internal, "backtracking hit an unfilled table state");
    const QVal& q = it->second;
    const Node& n = tree_.node(v);
    if (q.choice.branch == 0) return;
    if (q.choice.branch == 1) {
      uint32_t lb = boxes_.restricted(box, n.feature, orig_thr_idx_[v], Side::Left);
      uint32_t rb = boxes_.restricted(box, n.feature, orig_thr_idx_[v], Side::Right);
      backtrack(n.left, lb, q.choice.split, out);
      backtrack(n.right, rb, k - q.choice.split, out);
      return;
    }
    int j = q.choice.feature;
    double x = grids_.value(j, q.choice.thr_idx);
    Edit e;
    e.node = v;
    if (exchange_mode_) {
      e.kind = EditKind::Exchange;
      e.new_feature = j;
    } else {
      e.kind = EditKind::Adjust;
    }
    e.new_threshold = x;
    out.edits.push_back(e);
    uint32_t lb = boxes_.restricted(box, j, q.choice.thr_idx, Side::Left);
    uint32_t rb = boxes_.restricted(box, j, q.choice.thr_idx, Side::Right);
    backtrack(n.left, lb, q.choice.split, out);
    backtrack(n.right, rb, k - 1 - q.choice.split, out);
  }

private:
  const LocalSearchInstance& inst_;
  const DecisionTree& tree_;
  bool exchange_mode_;
  FeatureGrids grids_;
  BoxContext boxes_;
  std::vector<int16_t> orig_thr_idx_;
  std::unordered_map<uint64_t, QVal> memo_;
  Deadline deadline_;
  uint64_t ticks_ = 0;
};

// ---------------------------------------------------------------------------
// Combined solver: adjust + exchange + replace + raise
// ---------------------------------------------------------------------------

struct PChoice {
  uint8_t branch = 0;  // 0 leaf, 1 keep, 2 adjust, 3 exchange, 4 replace, 5 raise
  uint8_t a1 = 0, e1 = 0, r1 = 0, g1 = 0;  // left-child budget share
  int16_t feature = -1;
  int16_t thr_idx = -1;
  uint8_t keep_right = 0;  // raise: which child survives
  uint8_t r2 = 0, g2 = 0;  // raise: units consumed by v + discarded sibling
};

struct PVal {
  int32_t errors = kInfeasible;
  int32_t edits = 0;
  PChoice choice;
};

class PlsSolver {
public:
  PlsSolver(const LocalSearchInstance& inst, const Deadline& deadline)
      : inst_(inst), tree_(inst.tree()), grids_(inst.dataset()),
        boxes_(inst.dataset(), grids_), deadline_(deadline) {
    const Budgets& b = inst.budgets();
    if (b.adjust > 63 || b.exchange > 63 || b.replace > 63 || b.raise > 63)
      throw Error(Errc::Validation, "combined-solver budgets are limited to 63 per kind");
    if (tree_.arena_size() >= 4096)
      throw Error(Errc::Validation, "tree too large for the dp solver (>= 4096 nodes)");
    cuts_below_ = tree_.subtree_cut_counts();
    orig_thr_idx_.resize(tree_.arena_size(), -1);
    for (NodeId id : tree_.cut_ids())
      orig_thr_idx_[id] =
          static_cast<int16_t>(grids_.snap(tree_.node(id).feature, tree_.node(id).threshold));
  }

  PlsResult run() {
    deadline_.check();
    const Budgets& caps = inst_.budgets();
    uint32_t full = boxes_.full_box();
    PlsResult result;
    result.table = PlsTable(caps);
    for (int a = 0; a <= caps.adjust; ++a)
      for (int e = 0; e <= caps.exchange; ++e)
        for (int r = 0; r <= caps.replace; ++r)
          for (int g = 0; g <= caps.raise; ++g)
            result.table.at(a, e, r, g) = solve(tree_.root(), full, a, e, r, g).errors;

    if (result.table.at(caps.adjust, caps.exchange, caps.replace, caps.raise) != kInfeasible) {
      scratch_ = tree_.nodes();
      scratch_root_ = tree_.root();
      backtrack(tree_.root(), full, caps.adjust, caps.exchange, caps.replace, caps.raise,
                result.script);
      finalize_script_majority(inst_.tree(), inst_.dataset(), result.script);
    }
    return result;
  }

private:
  uint64_t key(NodeId v, uint32_t box, int a, int e, int r, int g) const {
    return (static_cast<uint64_t>(box) << 36) | (static_cast<uint64_t>(v) << 24) |
           (static_cast<uint64_t>(a) << 18) | (static_cast<uint64_t>(e) << 12) |
           (static_cast<uint64_t>(r) << 6) | static_cast<uint64_t>(g);
  }

  const PVal& solve(NodeId v, uint32_t box, int a, int e, int r, int g) {
    uint64_t mk = key(v, box, a, e, r, g);
    auto it = memo_.find(mk);
    if (it != memo_.end()) return it->second;
    if ((++ticks_ & 0xFF) == 0) deadline_.check();

    const Node& n = tree_.node(v);
    PVal best;
    if (n.is_leaf()) {
      if (r == 0 && g == 0) {
        auto [blue, red] = boxes_.counts(box);
        best = {std::min(blue, red), 0, PChoice{}};
      }
    } else if (r + g <= cuts_below_[v]) {
      int sl = cuts_below_[n.left];
      int sr = cuts_below_[n.right];
      auto consider = [&](int32_t errors, int32_t edits, const PChoice& c) {
        if (errors < best.errors || (errors == best.errors && edits < best.edits)) {
          best.errors = errors;
          best.edits = edits;
          best.choice = c;
        }
      };
      auto combine = [&](uint32_t lb, uint32_t rb, int da, int de, PChoice proto) {
        // Splits feasible for the children's subtree sizes only.
        for (int a1 = 0; a1 <= a - da; ++a1)
          for (int e1 = 0; e1 <= e - de; ++e1)
            for (int r1 = 0; r1 <= r && r1 <= sl; ++r1)
              for (int g1 = 0; g1 <= g && g1 <= sl - r1; ++g1) {
                if (r - r1 > sr || g - g1 > sr - (r - r1)) continue;
                const PVal& l = solve(n.left, lb, a1, e1, r1, g1);
                if (l.errors >= kInfeasible) continue;
                const PVal& rv = solve(n.right, rb, a - da - a1, e - de - e1, r - r1, g - g1);
                if (rv.errors >= kInfeasible) continue;
                proto.a1 = static_cast<uint8_t>(a1);
                proto.e1 = static_cast<uint8_t>(e1);
                proto.r1 = static_cast<uint8_t>(r1);
                proto.g1 = static_cast<uint8_t>(g1);
                consider(l.errors + rv.errors, l.edits + rv.edits + (da + de), proto);
              }
      };

      {  // unchanged
        uint32_t lb = boxes_.restricted(box, n.feature, orig_thr_idx_[v], Side::Left);
        uint32_t rb = boxes_.restricted(box, n.feature, orig_thr_idx_[v], Side::Right);
        combine(lb, rb, 0, 0, PChoice{1, 0, 0, 0, 0, -1, -1, 0, 0, 0});
      }
      if (a >= 1) {  // adjust
        for (int x = 0; x < grids_.size(n.feature); ++x) {
          uint32_t lb = boxes_.restricted(box, n.feature, x, Side::Left);
          uint32_t rb = boxes_.restricted(box, n.feature, x, Side::Right);
          combine(lb, rb, 1, 0,
                  PChoice{2, 0, 0, 0, 0, static_cast<int16_t>(n.feature),
                          static_cast<int16_t>(x), 0, 0, 0});
        }
      }
      if (e >= 1) {  // exchange
        for (int j = 0; j < grids_.num_features(); ++j) {
          for (int x = 0; x < grids_.size(j); ++x) {
            uint32_t lb = boxes_.restricted(box, j, x, Side::Left);
            uint32_t rb = boxes_.restricted(box, j, x, Side::Right);
            combine(lb, rb, 0, 1,
                    PChoice{3, 0, 0, 0, 0, static_cast<int16_t>(j), static_cast<int16_t>(x),
                            0, 0, 0});
          }
        }
      }
      // Replace the whole subtree by one leaf. The node itself consumes a
      // replacement unit; the rest of its cuts may use either kind.
      if (r >= 1 && r + g == cuts_below_[v]) {
        auto [blue, red] = boxes_.counts(box);
        consider(std::min(blue, red), r + g, PChoice{4, 0, 0, 0, 0, -1, -1, 0, 0, 0});
      }
      // Raise one child's subtree into v's place. One raising unit pays for
      // v; the discarded sibling subtree is paid for by any mix.
      if (g >= 1) {
        for (int keep_right = 0; keep_right <= 1; ++keep_right) {
          NodeId kept = keep_right ? n.right : n.left;
          NodeId sib = keep_right ? n.left : n.right;
          int req = cuts_below_[sib] + 1;
          for (int g2 = 1; g2 <= std::min(g, req); ++g2) {
            int r2 = req - g2;
            if (r2 < 0 || r2 > r) continue;
            const PVal& c = solve(kept, box, a, e, r - r2, g - g2);
            if (c.errors >= kInfeasible) continue;
            consider(c.errors, c.edits + req,
                     PChoice{5, 0, 0, 0, 0, -1, -1, static_cast<uint8_t>(keep_right),
                             static_cast<uint8_t>(r2), static_cast<uint8_t>(g2)});
          }
        }
      }
    }
    return memo_.emplace(mk, best).first->second;
  }

  // --- backtracking ---------------------------------------------------------

  // Scratch arena tracking the structural state while edits are emitted, so
  // raise sources always name the node currently in place.
  std::vector<Node> scratch_;
  NodeId scratch_root_ = kNoNode;

  void apply_structural(const Edit& e) {
    if (e.kind == EditKind::Replace) {
      scratch_[e.node] = Node::leaf(Label::Blue);
    } else if (e.kind == EditKind::Raise) {
      if (scratch_root_ == e.node) {
        scratch_root_ = e.raise_source;
        return;
      }
      for (auto& n : scratch_) {
        if (n.is_leaf()) continue;
        if (n.left == e.node) {
          n.left = e.raise_source;
          return;
        }
        if (n.right == e.node) {
          n.right = e.raise_source;
          return;
        }
      }
      throw Error(Errc::Internal, "raise target lost during backtracking");
    }
  }

  int scratch_depth_find(NodeId at, int depth, int& best_depth, NodeId& best) const {
    const Node& n = scratch_[at];
    if (n.is_leaf()) return 0;
    if (scratch_[n.left].is_leaf() && scratch_[n.right].is_leaf()) {
      if (depth > best_depth) {
        best_depth = depth;
        best = at;
      }
    }
    scratch_depth_find(n.left, depth + 1, best_depth, best);
    scratch_depth_find(n.right, depth + 1, best_depth, best);
    return 0;
  }

  /// Emits the unit prune edits that collapse the scratch subtree at v into
  /// a single leaf: deepest leaf-parent first, raising units spent before
  /// replacement units so a required replacement lands on v itself last.
  void synthesize_collapse(NodeId v, int replaces, int raises, EditScript& out) {
    while (replaces + raises > 0) {
      int best_depth = -1;
      NodeId victim = kNoNode;
      scratch_depth_find(v, 0, best_depth, victim);
      if (victim == kNoNode) throw Error(Errc::Internal, "collapse found no prunable cut");
      Edit e;
      e.node = victim;
      if (raises > 0) {
        e.kind = EditKind::Raise;
        e.raise_source = scratch_[victim].left;
        --raises;
      } else {
        e.kind = EditKind::Replace;
        --replaces;
      }
      out.edits.push_back(e);
      apply_structural(e);
    }
  }

  void backtrack(NodeId v, uint32_t box, int a, int e, int r, int g, EditScript& out) {
    auto it = memo_.find(key(v, box, a, e, r, g));
    if (it == memo_.end())
      throw Error(Errc::Internal, "backtracking hit an unfilled table state");
    const PVal& q = it->second;
    const Node& n = tree_.node(v);
    const PChoice& c = q.choice;
    switch (c.branch) {
      case 0:
        return;
      case 1: {
        uint32_t lb = boxes_.restricted(box, n.feature, orig_thr_idx_[v], Side::Left);
        uint32_t rb = boxes_.restricted(box, n.feature, orig_thr_idx_[v], Side::Right);
        backtrack(n.left, lb, c.a1, c.e1, c.r1, c.g1, out);
        backtrack(n.right, rb, a - c.a1, e - c.e1, r - c.r1, g - c.g1, out);
        return;
      }
      case 2:
      case 3: {
        Edit edit;
        edit.node = v;
        edit.new_threshold = grids_.value(c.feature, c.thr_idx);
        int da = 0, de = 0;
        if (c.branch == 2) {
          edit.kind = EditKind::Adjust;
          da = 1;
        } else {
          edit.kind = EditKind::Exchange;
          edit.new_feature = c.feature;
          de = 1;
        }
        out.edits.push_back(edit);
        uint32_t lb = boxes_.restricted(box, c.feature, c.thr_idx, Side::Left);
        uint32_t rb = boxes_.restricted(box, c.feature, c.thr_idx, Side::Right);
        backtrack(n.left, lb, c.a1, c.e1, c.r1, c.g1, out);
        backtrack(n.right, rb, a - da - c.a1, e - de - c.e1, r - c.r1, g - c.g1, out);
        return;
      }
      case 4:
        synthesize_collapse(v, r, g, out);
        return;
      case 5: {
        NodeId kept = c.keep_right ? n.right : n.left;
        NodeId sib = c.keep_right ? n.left : n.right;
        synthesize_collapse(sib, c.r2, c.g2 - 1, out);
        Edit raise;
        raise.node = v;
        raise.kind = EditKind::Raise;
        raise.raise_source = kept;
        out.edits.push_back(raise);
        apply_structural(raise);
        backtrack(kept, box, a, e, r - c.r2, g - c.g2, out);
        return;
      }
    }
  }

  const LocalSearchInstance& inst_;
  const DecisionTree& tree_;
  FeatureGrids grids_;
  BoxContext boxes_;
  std::vector<int> cuts_below_;
  std::vector<int16_t> orig_thr_idx_;
  std::unordered_map<uint64_t, PVal> memo_;
  Deadline deadline_;
  uint64_t ticks_ = 0;
};

}  // namespace

PlsTable::PlsTable(Budgets caps) : caps_(caps) {
  size_t size = static_cast<size_t>(caps.adjust + 1) * (caps.exchange + 1) *
                (caps.replace + 1) * (caps.raise + 1);
  values_.assign(size, kInfeasible);
}

int PlsTable::at(int a, int e, int r, int g) const {
  size_t idx = ((static_cast<size_t>(a) * (caps_.exchange + 1) + e) * (caps_.replace + 1) + r) *
                   (caps_.raise + 1) +
               g;
  return values_[idx];
}

int& PlsTable::at(int a, int e, int r, int g) {
  size_t idx = ((static_cast<size_t>(a) * (caps_.exchange + 1) + e) * (caps_.replace + 1) + r) *
                   (caps_.raise + 1) +
               g;
  return values_[idx];
}

SolveResult solve_threshold_adjustment_dp(const LocalSearchInstance& instance,
                                          const Deadline& deadline) {
  if (instance.problem() != ProblemKind::Adjust)
    throw Error(Errc::Validation, "instance is not a threshold-adjustment problem");
  return SingleOpSolver(instance, /*exchange_mode=*/false, deadline).run();
}

SolveResult solve_cut_exchange_dp(const LocalSearchInstance& instance,
                                  const Deadline& deadline) {
  if (instance.problem() != ProblemKind::Exchange)
    throw Error(Errc::Validation, "instance is not a cut-exchange problem");
  return SingleOpSolver(instance, /*exchange_mode=*/true, deadline).run();
}

SolveResult solve_single_op_dp(const LocalSearchInstance& instance, const Deadline& deadline) {
  switch (instance.problem()) {
    case ProblemKind::Adjust: return solve_threshold_adjustment_dp(instance, deadline);
    case ProblemKind::Exchange: return solve_cut_exchange_dp(instance, deadline);
    default:
      throw Error(Errc::Validation, "combined problem needs solve_pls_dp");
  }
}

PlsResult solve_pls_dp(const LocalSearchInstance& instance, const Deadline& deadline) {
  if (instance.problem() != ProblemKind::Pls)
    throw Error(Errc::Validation, "instance is not a combined problem");
  return PlsSolver(instance, deadline).run();
}

std::vector<Box> reachable_boxes(const LocalSearchInstance& instance, NodeId node,
                                 const Budgets& remaining) {
  const DecisionTree& tree = instance.tree();
  const Dataset& data = instance.dataset();
  FeatureGrids grids(data);

  // Root-to-node path of (cut, direction) pairs.
  std::vector<NodeId> parents = tree.parents();
  std::vector<std::pair<NodeId, Side>> path;
  for (NodeId at = node; at != tree.root(); at = parents[at]) {
    NodeId p = parents[at];
    if (p == kNoNode) throw Error(Errc::Validation, "node is not reachable from the root");
    path.emplace_back(p, tree.node(p).left == at ? Side::Left : Side::Right);
  }
  std::reverse(path.begin(), path.end());

  std::vector<Box> out;
  std::function<void(size_t, Box, Budgets)> rec = [&](size_t pos, Box box, Budgets bud) {
    if (pos == path.size()) {
      out.push_back(std::move(box));
      return;
    }
    auto [cut, side] = path[pos];
    const Node& n = tree.node(cut);
    // Ancestor kept as-is.
    rec(pos + 1, restrict_box(box, n.feature, n.threshold, side), bud);
    if (bud.adjust > 0) {
      Budgets b = bud;
      b.adjust--;
      for (double x : grids.grid(n.feature))
        rec(pos + 1, restrict_box(box, n.feature, x, side), b);
    }
    if (bud.exchange > 0) {
      Budgets b = bud;
      b.exchange--;
      for (int j = 0; j < grids.num_features(); ++j)
        for (double x : grids.grid(j)) rec(pos + 1, restrict_box(box, j, x, side), b);
    }
    // Pruned-away ancestor: its constraint disappears.
    if (bud.replace > 0) {
      Budgets b = bud;
      b.replace--;
      rec(pos + 1, box, b);
    }
    if (bud.raise > 0) {
      Budgets b = bud;
      b.raise--;
      rec(pos + 1, box, b);
    }
  };
  rec(0, Box::full(data.d()), remaining);

  std::sort(out.begin(), out.end(),
            [](const Box& a, const Box& b) { return a.iv < b.iv; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Box& a, const Box& b) { return a.iv == b.iv; }),
            out.end());
  return out;
}

}  // namespace dtls
