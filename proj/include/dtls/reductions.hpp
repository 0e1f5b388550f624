#ifndef DTLS_REDUCTIONS_HPP
#define DTLS_REDUCTIONS_HPP

#include <map>
#include <string>
#include <vector>

#include "dtls/instance.hpp"

namespace dtls {

struct HittingSetInstance {
  int universe_size = 0;
  std::vector<std::vector<int>> sets;  // elements in [1, universe_size]
  int kappa = 0;

  void validate() const;
};

/// Exact minimum hitting-set size by subset enumeration; guarded to
/// universes of at most 20 elements.
int brute_force_hitting_set(const HittingSetInstance& hs);

/// Instance generators keep a provenance record so tests can decode
/// witnesses back to the combinatorial problem (for the hitting-set
/// construction: adjusted cut ids name chosen universe elements).
struct GeneratedInstance {
  LocalSearchInstance instance;
  std::map<std::string, std::string> provenance;
  /// hitting-set: cut_for_element[i] is the cut testing universe element i+1.
  std::vector<NodeId> cut_for_element;
};

/// Builds a threshold-adjustment instance that is feasible at (k = kappa,
/// t = 0) iff the hitting-set instance has a cover of size kappa. One
/// feature per universe element, one red example per set, a chain tree of
/// one cut per feature, plus padding examples that make the tree
/// reasonable. Unbounded coordinates are realized as finite sentinels one
/// step outside the data range.
GeneratedInstance hitting_set_to_ta(const HittingSetInstance& hs);

struct TaToCeResult {
  LocalSearchInstance instance;  // cut-exchange problem
  /// Cut ids of the original tree inside the transformed tree.
  std::vector<NodeId> original_cuts;
};

/// Transforms a threshold-adjustment instance (with explicit error bound t)
/// into a cut-exchange instance with budget k = k' + s' + 1 that is
/// feasible iff the input is. Each leaf gains a chain gadget whose examples
/// pin every original cut to its feature, so exchanges on original cuts can
/// only move thresholds.
TaToCeResult ta_to_ce(const LocalSearchInstance& ta);

enum class FixedStructureKind { FreeFeatures, FixedFeatures };

/// Learning-as-local-search: takes a tree shape, assigns dummy cuts
/// (feature 0, threshold -inf) and blue leaves, and sets k = s. With free
/// features the result is a cut-exchange instance (FS-DT); with fixed
/// features the shape's own feature per cut is kept and the result is a
/// threshold-adjustment instance (FSFF-DT).
LocalSearchInstance fixed_structure_instance(const Dataset& data, const DecisionTree& shape,
                                             FixedStructureKind kind, int t);

}  // namespace dtls

#endif
