#ifndef DTLS_TREE_IO_HPP
#define DTLS_TREE_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "dtls/edits.hpp"
#include "dtls/tree.hpp"

namespace dtls {

/// On-disk tree form: schema version, node list, root id, and a free-form
/// metadata object. Unknown top-level keys of a parsed document are folded
/// into the metadata so they survive a round-trip.
struct TreeDocument {
  std::string schema_version = "1";
  DecisionTree tree;
  nlohmann::json metadata = nlohmann::json::object();
};

/// Parses the JSON tree schema. Feature fields may be names (resolved
/// against `feature_names` when given) or zero-based indices. Threshold
/// fields are numbers or the reserved token "-inf".
TreeDocument read_tree(const nlohmann::json& doc,
                       const std::vector<std::string>* feature_names = nullptr);

nlohmann::json write_tree(const DecisionTree& tree,
                          const nlohmann::json& metadata = nlohmann::json::object(),
                          const std::vector<std::string>* feature_names = nullptr);

TreeDocument load_tree(const std::string& path,
                       const std::vector<std::string>* feature_names = nullptr);
void save_tree(const DecisionTree& tree, const std::string& path,
               const nlohmann::json& metadata = nlohmann::json::object(),
               const std::vector<std::string>* feature_names = nullptr);

/// Imports a textual J48 tree dump (indented "feature <= v" / "feature > v"
/// pairs with ": class (...)" leaf suffixes). The "<=" branch becomes the
/// left child. Feature and class names are resolved against the provided
/// lists; categorical splits are rejected.
DecisionTree import_weka_j48(const std::string& text,
                             const std::vector<std::string>& feature_names,
                             const std::vector<std::string>& class_names);

EditScript read_script(const nlohmann::json& doc);
nlohmann::json write_script(const EditScript& script);
EditScript load_script(const std::string& path);
void save_script(const EditScript& script, const std::string& path);

nlohmann::json load_json(const std::string& path);
void save_json(const nlohmann::json& doc, const std::string& path);

}  // namespace dtls

#endif
