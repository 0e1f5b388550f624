#ifndef DTLS_EDITS_HPP
#define DTLS_EDITS_HPP

#include <map>
#include <string>
#include <vector>

#include "dtls/instance.hpp"
#include "dtls/tree.hpp"

namespace dtls {

enum class EditKind { Adjust, Exchange, Replace, Raise };

const char* edit_kind_name(EditKind k);
EditKind edit_kind_from_name(const std::string& name);

/// One node-level edit. Adjust changes the threshold; exchange changes
/// feature and threshold; replace turns the subtree rooted at the node into
/// a leaf (the node id is reused for the new leaf); raise substitutes the
/// subtree at the node by the subtree rooted at raise_source, which must be
/// a strict descendant.
struct Edit {
  NodeId node = kNoNode;
  EditKind kind = EditKind::Adjust;
  int new_feature = -1;     // exchange only
  double new_threshold = 0; // adjust / exchange
  NodeId raise_source = kNoNode;
};

struct EditScript {
  std::vector<Edit> edits;
  std::map<NodeId, Label> leaf_labels;
  int achieved_errors = -1;

  int count(EditKind k) const;
  /// True when per-kind edit counts fit the budgets (replace/raise compared
  /// as "at most" here; exact usage is the solver's concern).
  bool within(const Budgets& budgets) const;
};

/// Applies the edits in order, then the leaf relabeling. Node ids are
/// stable while edits apply; the result is compacted (unreachable arena
/// slots dropped, ids renumbered in preorder).
DecisionTree apply_edits(const DecisionTree& tree, const EditScript& script);

/// Same, but keeps the original arena so node ids stay meaningful. The
/// result may contain unreachable slots and is not validated.
DecisionTree apply_edits_preserving_ids(const DecisionTree& tree, const EditScript& script);

/// Replays the edit list against the input tree, then fills leaf_labels
/// with the majority labeling of the result and sets achieved_errors.
void finalize_script_majority(const DecisionTree& tree, const Dataset& data,
                              EditScript& script);

}  // namespace dtls

#endif
