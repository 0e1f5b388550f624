#include "dtls/box.hpp"

#include <algorithm>

namespace dtls {

FeatureGrids::FeatureGrids(const Dataset& data) {
  grids_.reserve(data.d());
  for (int j = 0; j < data.d(); ++j) grids_.push_back(data.distinct_values(j));
}

int FeatureGrids::snap(int feature, double x) const {
  const auto& g = grids_[feature];
  // First element is -inf, so upper_bound is always past it.
  auto it = std::upper_bound(g.begin(), g.end(), x);
  return static_cast<int>(it - g.begin()) - 1;
}

int FeatureGrids::domain_size() const {
  int best = 0;
  for (const auto& g : grids_) best = std::max(best, static_cast<int>(g.size()) - 1);
  return best;
}

bool Box::contains(const Dataset& data, int row) const {
  for (int j = 0; j < d(); ++j) {
    double v = data.at(row, j);
    if (!(iv[j].first < v && v <= iv[j].second)) return false;
  }
  return true;
}

Box restrict_box(const Box& box, int feature, double x, Side side) {
  Box out = box;
  auto& [lo, hi] = out.iv[feature];
  if (side == Side::Left) {
    hi = std::min(hi, x);
    if (hi < lo) hi = lo;  // empty representation
  } else {
    lo = std::max(lo, x);
    if (lo > hi) lo = hi;
  }
  return out;
}

std::vector<int> box_examples(const Dataset& data, const Box& box) {
  std::vector<int> ids;
  for (int i = 0; i < data.n(); ++i)
    if (box.contains(data, i)) ids.push_back(i);
  return ids;
}

std::pair<int, int> box_class_counts(const Dataset& data, const Box& box) {
  int blue = 0, red = 0;
  for (int i = 0; i < data.n(); ++i) {
    if (!box.contains(data, i)) continue;
    (data.label(i) == Label::Blue ? blue : red)++;
  }
  return {blue, red};
}

CanonicalBox canonicalize(const FeatureGrids& grids, const Box& box) {
  CanonicalBox cb(static_cast<size_t>(box.d()) * 2);
  for (int j = 0; j < box.d(); ++j) {
    int lo = grids.snap(j, box.iv[j].first);
    int hi = grids.snap(j, box.iv[j].second);
    if (hi < lo) hi = lo;
    cb[2 * j] = static_cast<uint16_t>(lo);
    cb[2 * j + 1] = static_cast<uint16_t>(hi);
  }
  return cb;
}

Box box_from_canonical(const FeatureGrids& grids, const CanonicalBox& cb) {
  int d = static_cast<int>(cb.size() / 2);
  Box box;
  box.iv.resize(d);
  for (int j = 0; j < d; ++j) {
    box.iv[j].first = grids.value(j, cb[2 * j]);
    box.iv[j].second = grids.value(j, cb[2 * j + 1]);
  }
  return box;
}

}  // namespace dtls
