#include "dtls/dataset.hpp"

#include <algorithm>
#include <cmath>

namespace dtls {

Dataset::Dataset(int n, int d, std::vector<double> values, std::vector<Label> labels,
                 std::vector<std::string> feature_names)
    : n_(n), d_(d), values_(std::move(values)), labels_(std::move(labels)),
      feature_names_(std::move(feature_names)) {
  if (n_ < 1 || d_ < 1)
    throw Error(Errc::Validation, "dataset needs n >= 1 and d >= 1");
  if (values_.size() != static_cast<size_t>(n_) * d_)
    throw Error(Errc::Validation, "dataset value matrix has wrong size");
  if (labels_.size() != static_cast<size_t>(n_))
    throw Error(Errc::Validation, "dataset needs one label per example");
  for (double v : values_)
    if (!std::isfinite(v))
      throw Error(Errc::Validation, "dataset contains a non-finite feature value");
  if (feature_names_.empty()) {
    feature_names_.reserve(d_);
    for (int j = 0; j < d_; ++j) feature_names_.push_back("f" + std::to_string(j + 1));
  }
  if (feature_names_.size() != static_cast<size_t>(d_))
    throw Error(Errc::Validation, "dataset needs one feature name per column");
}

std::vector<double> Dataset::distinct_values(int feature) const {
  if (feature < 0 || feature >= d_)
    throw Error(Errc::Validation, "feature index out of range");
  std::vector<double> vals;
  vals.reserve(n_ + 1);
  vals.push_back(kNegInf);
  for (int i = 0; i < n_; ++i) vals.push_back(at(i, feature));
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  return vals;
}

}  // namespace dtls
