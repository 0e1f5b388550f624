#ifndef DTLS_INSTANCE_HPP
#define DTLS_INSTANCE_HPP

#include <optional>

#include "dtls/dataset.hpp"
#include "dtls/tree.hpp"

namespace dtls {

enum class ProblemKind { Adjust, Exchange, Pls };

/// Operation budgets. Single-operation problems use only the matching slot.
/// Adjust/exchange budgets mean "at most"; replace/raise budgets mean
/// "exactly" (one unit per pruned cut node).
struct Budgets {
  int adjust = 0;
  int exchange = 0;
  int replace = 0;
  int raise = 0;

  int total() const { return adjust + exchange + replace + raise; }
};

/// A dataset, a tree over it, and the operation budgets. For adjust and
/// exchange problems k is clamped to the number of cuts on construction.
class LocalSearchInstance {
public:
  LocalSearchInstance(Dataset dataset, DecisionTree tree, ProblemKind problem, int k,
                      std::optional<int> error_bound = std::nullopt);
  LocalSearchInstance(Dataset dataset, DecisionTree tree, Budgets budgets,
                      std::optional<int> error_bound = std::nullopt);

  const Dataset& dataset() const { return dataset_; }
  const DecisionTree& tree() const { return tree_; }
  ProblemKind problem() const { return problem_; }
  int k() const { return k_; }
  const Budgets& budgets() const { return budgets_; }
  std::optional<int> error_bound() const { return error_bound_; }

private:
  Dataset dataset_;
  DecisionTree tree_;
  ProblemKind problem_;
  int k_ = 0;        // single-operation budget
  Budgets budgets_;  // four-budget form (Pls)
  std::optional<int> error_bound_;
};

struct InstanceParameters {
  int n = 0;
  int d = 0;
  int domain_size = 0;  // D
  int s = 0;
  int k = 0;
  int unmodified = 0;  // l = max(s - k, 0)
  std::optional<int> t;
  int delta_max = 0;  // max differing features over cross-class pairs
};

InstanceParameters instance_parameters(const LocalSearchInstance& instance);

}  // namespace dtls

#endif
