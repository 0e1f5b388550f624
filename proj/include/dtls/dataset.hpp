#ifndef DTLS_DATASET_HPP
#define DTLS_DATASET_HPP

#include <string>
#include <vector>

#include "dtls/common.hpp"

namespace dtls {

/// Immutable training data: n examples over d real-valued features plus a
/// binary class label per example. All feature values are finite.
class Dataset {
public:
  Dataset() = default;
  Dataset(int n, int d, std::vector<double> values, std::vector<Label> labels,
          std::vector<std::string> feature_names = {});

  int n() const { return n_; }
  int d() const { return d_; }
  double at(int row, int col) const { return values_[static_cast<size_t>(row) * d_ + col]; }
  Label label(int row) const { return labels_[row]; }
  const std::vector<Label>& labels() const { return labels_; }
  const std::vector<std::string>& feature_names() const { return feature_names_; }
  const std::string& feature_name(int col) const { return feature_names_[col]; }

  /// Sorted distinct values of one feature with the -inf sentinel prepended.
  std::vector<double> distinct_values(int feature) const;

private:
  int n_ = 0;
  int d_ = 0;
  std::vector<double> values_;  // row-major n x d
  std::vector<Label> labels_;
  std::vector<std::string> feature_names_;
};

}  // namespace dtls

#endif
