#include "dtls/instance.hpp"

#include <algorithm>

#include "dtls/box.hpp"

namespace dtls {

LocalSearchInstance::LocalSearchInstance(Dataset dataset, DecisionTree tree,
                                         ProblemKind problem, int k,
                                         std::optional<int> error_bound)
    : dataset_(std::move(dataset)), tree_(std::move(tree)), problem_(problem),
      error_bound_(error_bound) {
  if (problem == ProblemKind::Pls)
    throw Error(Errc::Validation, "four budgets are required for the combined problem");
  if (k < 0) throw Error(Errc::Validation, "budget must be non-negative");
  tree_.validate(dataset_.d());
  k_ = std::min(k, tree_.num_cuts());
  if (problem == ProblemKind::Adjust)
    budgets_.adjust = k_;
  else
    budgets_.exchange = k_;
  if (error_bound_ && *error_bound_ < 0)
    throw Error(Errc::Validation, "error bound must be non-negative");
}

LocalSearchInstance::LocalSearchInstance(Dataset dataset, DecisionTree tree, Budgets budgets,
                                         std::optional<int> error_bound)
    : dataset_(std::move(dataset)), tree_(std::move(tree)), problem_(ProblemKind::Pls),
      budgets_(budgets), error_bound_(error_bound) {
  if (budgets.adjust < 0 || budgets.exchange < 0 || budgets.replace < 0 || budgets.raise < 0)
    throw Error(Errc::Validation, "budgets must be non-negative");
  tree_.validate(dataset_.d());
  k_ = budgets.total();
  if (error_bound_ && *error_bound_ < 0)
    throw Error(Errc::Validation, "error bound must be non-negative");
}

InstanceParameters instance_parameters(const LocalSearchInstance& instance) {
  const Dataset& data = instance.dataset();
  InstanceParameters p;
  p.n = data.n();
  p.d = data.d();
  p.domain_size = FeatureGrids(data).domain_size();
  p.s = instance.tree().num_cuts();
  p.k = instance.k();
  p.unmodified = std::max(p.s - p.k, 0);
  p.t = instance.error_bound();

  // delta_max: max Hamming distance in features over (blue, red) pairs.
  std::vector<int> blues, reds;
  for (int i = 0; i < p.n; ++i)
    (data.label(i) == Label::Blue ? blues : reds).push_back(i);
  int delta = 0;
  for (int b : blues) {
    for (int r : reds) {
      int diff = 0;
      for (int j = 0; j < p.d; ++j)
        if (data.at(b, j) != data.at(r, j)) ++diff;
      delta = std::max(delta, diff);
    }
  }
  p.delta_max = delta;
  return p;
}

}  // namespace dtls
