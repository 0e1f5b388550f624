#ifndef DTLS_BOX_HPP
#define DTLS_BOX_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "dtls/dataset.hpp"

namespace dtls {

/// Per-feature sorted distinct value grids. Grid index 0 is the -inf
/// sentinel; indices 1..size-1 are the distinct data values in ascending
/// order. Solver-chosen thresholds always come from these grids.
class FeatureGrids {
public:
  FeatureGrids() = default;
  explicit FeatureGrids(const Dataset& data);

  int num_features() const { return static_cast<int>(grids_.size()); }
  int size(int feature) const { return static_cast<int>(grids_[feature].size()); }
  double value(int feature, int index) const { return grids_[feature][index]; }
  const std::vector<double>& grid(int feature) const { return grids_[feature]; }

  /// Index of the largest grid value <= x (0 when only -inf qualifies,
  /// size-1 when x is at or above the maximum, including x = +inf).
  int snap(int feature, double x) const;

  /// max_i |{e[i]}| over the data values alone (sentinel not counted).
  int domain_size() const;

private:
  std::vector<std::vector<double>> grids_;
};

enum class Side { Left, Right };

/// Axis-aligned region: per feature a half-open interval (lo, hi] with
/// lo <= hi. Endpoints are raw thresholds; -inf/+inf denote unbounded
/// sides. The region selects examples with lo_i < e[i] <= hi_i for all i.
struct Box {
  std::vector<std::pair<double, double>> iv;

  static Box full(int d) { return Box{{std::vector<std::pair<double, double>>(d, {kNegInf, kPosInf})}}; }
  int d() const { return static_cast<int>(iv.size()); }
  bool contains(const Dataset& data, int row) const;
};

/// Restricts one coordinate of a box by a split at threshold x: the left
/// side shrinks the upper endpoint to min(hi, x); the right side raises the
/// lower endpoint to max(lo, x). An inverted interval is clamped to the
/// empty representation lo == hi.
Box restrict_box(const Box& box, int feature, double x, Side side);

std::vector<int> box_examples(const Dataset& data, const Box& box);
std::pair<int, int> box_class_counts(const Dataset& data, const Box& box);

/// Grid-index form of a box used as a memoization key: per feature the
/// snapped (lo, hi) pair. Snapping never changes which examples a box
/// selects.
using CanonicalBox = std::vector<uint16_t>;

CanonicalBox canonicalize(const FeatureGrids& grids, const Box& box);
Box box_from_canonical(const FeatureGrids& grids, const CanonicalBox& cb);

}  // namespace dtls

#endif
