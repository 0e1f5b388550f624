#ifndef DTLS_DP_HPP
#define DTLS_DP_HPP

#include <limits>
#include <vector>

#include "dtls/box.hpp"
#include "dtls/edits.hpp"
#include "dtls/instance.hpp"

namespace dtls {

/// Sentinel for infeasible table entries (exactly-semantics unmet).
constexpr int kInfeasible = std::numeric_limits<int32_t>::max() / 4;

struct SolveResult {
  /// errors_by_budget[j] = minimum errors over all trees reachable with at
  /// most j operations plus arbitrary leaf relabeling; non-increasing.
  std::vector<int> errors_by_budget;
  /// Script achieving errors_by_budget at the full budget.
  EditScript script;
};

/// Exact threshold-adjustment optimizer. Memoized recursion over
/// (node, box, remaining budget) states; boxes are the regions reachable
/// from the root under re-chosen ancestor thresholds, canonicalized to
/// per-feature grid indices.
SolveResult solve_threshold_adjustment_dp(const LocalSearchInstance& instance,
                                          const Deadline& deadline = Deadline::none());

/// Exact cut-exchange optimizer. An exchange may keep the same feature, so
/// its optimum is pointwise <= the adjustment optimum on every instance.
SolveResult solve_cut_exchange_dp(const LocalSearchInstance& instance,
                                  const Deadline& deadline = Deadline::none());

/// Errors over the whole budget lattice of the combined problem.
/// Entry (a, e, r, g): minimum errors using at most a adjustments, at most
/// e exchanges, exactly r replacement-pruned cut nodes and exactly g
/// raising-pruned cut nodes; kInfeasible when no tree realizes the tuple.
class PlsTable {
public:
  PlsTable() = default;
  PlsTable(Budgets caps);
  int at(int a, int e, int r, int g) const;
  int& at(int a, int e, int r, int g);
  const Budgets& caps() const { return caps_; }

private:
  Budgets caps_;
  std::vector<int> values_;
};

struct PlsResult {
  PlsTable table;
  EditScript script;  // achieves table.at(caps) when that entry is feasible
};

SolveResult solve_single_op_dp(const LocalSearchInstance& instance,
                               const Deadline& deadline = Deadline::none());

PlsResult solve_pls_dp(const LocalSearchInstance& instance,
                       const Deadline& deadline = Deadline::none());

/// All boxes that can arrive at a node given the root-to-node cut path and
/// every way of spending at most the remaining budgets on the ancestors.
/// Always contains the unmodified path box. With replace or raise budget
/// available the set is a superset-safe over-approximation (ancestor
/// constraints may be dropped).
std::vector<Box> reachable_boxes(const LocalSearchInstance& instance, NodeId node,
                                 const Budgets& remaining);

}  // namespace dtls

#endif
