#ifndef DTLS_RANDOM_INSTANCE_HPP
#define DTLS_RANDOM_INSTANCE_HPP

#include <cstdint>

#include "dtls/dataset.hpp"
#include "dtls/tree.hpp"

namespace dtls {

/// Deterministic pseudo-random stream (splitmix64); identical output for a
/// seed on every platform, which keeps generated fixtures byte-stable.
class Rng {
public:
  explicit Rng(uint64_t seed) : state_(seed) {}
  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, n).
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
  /// Uniform in [lo, hi].
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

private:
  uint64_t state_;
};

struct RandomBounds {
  int n_min = 3, n_max = 12;
  int d_min = 1, d_max = 3;
  int domain_max = 4;  // distinct values per feature
  int s_min = 0, s_max = 4;
  bool reasonable = false;  // rejection-sample against the reasonability check
};

struct RandomInstance {
  Dataset data;
  DecisionTree tree;
};

RandomInstance random_instance(uint64_t seed, const RandomBounds& bounds);
RandomInstance random_instance(Rng& rng, const RandomBounds& bounds);

}  // namespace dtls

#endif
