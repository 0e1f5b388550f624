#include "dtls/tree_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "dtls/dataset_io.hpp"

namespace dtls {

namespace {

double threshold_from_json(const nlohmann::json& v, const std::string& where) {
  if (v.is_string()) {
    if (v.get<std::string>() == "-inf") return kNegInf;
    throw Error(Errc::Schema, where + ": threshold string must be \"-inf\"");
  }
  if (!v.is_number())
    throw Error(Errc::Schema, where + ": threshold must be a number or \"-inf\"");
  return v.get<double>();
}

nlohmann::json threshold_to_json(double v) {
  if (v == kNegInf) return "-inf";
  return v;
}

int feature_from_json(const nlohmann::json& v, const std::vector<std::string>* names,
                      const std::string& where) {
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    if (!names)
      throw Error(Errc::Schema, where + ": feature name '" + v.get<std::string>() +
                                    "' given but no feature names are available");
    auto it = std::find(names->begin(), names->end(), v.get<std::string>());
    if (it == names->end())
      throw Error(Errc::Schema,
                  where + ": unknown feature name '" + v.get<std::string>() + "'");
    return static_cast<int>(it - names->begin());
  }
  throw Error(Errc::Schema, where + ": feature must be an index or a name");
}

Label label_from_string(const std::string& s, const std::string& where) {
  if (s == "blue") return Label::Blue;
  if (s == "red") return Label::Red;
  throw Error(Errc::Schema, where + ": class must be \"blue\" or \"red\", got '" + s + "'");
}

}  // namespace

TreeDocument read_tree(const nlohmann::json& doc, const std::vector<std::string>* names) {
  if (!doc.is_object()) throw Error(Errc::Schema, "tree document must be a JSON object");
  if (!doc.contains("nodes") || !doc["nodes"].is_array())
    throw Error(Errc::Schema, "tree document needs a \"nodes\" array");
  if (!doc.contains("root"))
    throw Error(Errc::Schema, "tree document needs a \"root\" id");

  TreeDocument out;
  if (doc.contains("schema_version")) out.schema_version = doc["schema_version"].get<std::string>();
  if (doc.contains("metadata")) {
    if (!doc["metadata"].is_object())
      throw Error(Errc::Schema, "tree metadata must be an object");
    out.metadata = doc["metadata"];
  }
  // Unknown top-level fields survive inside the metadata.
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() == "nodes" || it.key() == "root" || it.key() == "schema_version" ||
        it.key() == "metadata")
      continue;
    out.metadata[it.key()] = it.value();
  }

  std::map<int64_t, int> id_to_slot;
  for (const auto& jn : doc["nodes"]) {
    if (!jn.contains("id"))
      throw Error(Errc::Schema, "tree node without an \"id\"");
    int64_t id = jn["id"].get<int64_t>();
    if (!id_to_slot.emplace(id, static_cast<int>(id_to_slot.size())).second)
      throw Error(Errc::Schema, "duplicate node id " + std::to_string(id));
  }

  std::vector<Node> nodes(id_to_slot.size());
  for (const auto& jn : doc["nodes"]) {
    int64_t id = jn["id"].get<int64_t>();
    std::string where = "node " + std::to_string(id);
    std::string kind = jn.value("kind", "");
    Node n;
    if (kind == "leaf") {
      if (!jn.contains("class")) throw Error(Errc::Schema, where + ": leaf without a class");
      n = Node::leaf(label_from_string(jn["class"].get<std::string>(), where));
    } else if (kind == "cut") {
      if (!jn.contains("feature") || !jn.contains("threshold"))
        throw Error(Errc::Schema, where + ": cut needs feature and threshold");
      if (!jn.contains("left") || !jn.contains("right"))
        throw Error(Errc::Schema, where + ": cut is missing a child");
      auto resolve_child = [&](const nlohmann::json& c) {
        int64_t cid = c.get<int64_t>();
        auto it = id_to_slot.find(cid);
        if (it == id_to_slot.end())
          throw Error(Errc::Schema, where + ": dangling child id " + std::to_string(cid));
        return static_cast<NodeId>(it->second);
      };
      n = Node::cut(feature_from_json(jn["feature"], names, where),
                    threshold_from_json(jn["threshold"], where), resolve_child(jn["left"]),
                    resolve_child(jn["right"]));
    } else {
      throw Error(Errc::Schema, where + ": kind must be \"cut\" or \"leaf\"");
    }
    nodes[id_to_slot.at(id)] = n;
  }

  int64_t root_id = doc["root"].get<int64_t>();
  auto rit = id_to_slot.find(root_id);
  if (rit == id_to_slot.end())
    throw Error(Errc::Schema, "root id " + std::to_string(root_id) + " is not a node");

  DecisionTree tree(std::move(nodes), static_cast<NodeId>(rit->second));
  tree.validate();
  if (tree.preorder().size() != id_to_slot.size())
    throw Error(Errc::Schema, "tree document contains nodes unreachable from the root");
  out.tree = std::move(tree);
  return out;
}

nlohmann::json write_tree(const DecisionTree& tree, const nlohmann::json& metadata,
                          const std::vector<std::string>* names) {
  // Canonical form: ids renumbered in preorder, so documents are stable
  // under a read/write round trip whatever the arena layout was.
  std::vector<NodeId> order = tree.preorder();
  std::vector<NodeId> remap(tree.arena_size(), kNoNode);
  for (size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<NodeId>(i);

  nlohmann::json doc;
  doc["schema_version"] = "1";
  doc["root"] = tree.root() == kNoNode ? kNoNode : remap[tree.root()];
  nlohmann::json jnodes = nlohmann::json::array();
  for (NodeId id : order) {
    const Node& n = tree.node(id);
    nlohmann::json jn;
    jn["id"] = remap[id];
    if (n.is_leaf()) {
      jn["kind"] = "leaf";
      jn["class"] = label_name(n.label);
    } else {
      jn["kind"] = "cut";
      if (names)
        jn["feature"] = (*names)[n.feature];
      else
        jn["feature"] = n.feature;
      jn["threshold"] = threshold_to_json(n.threshold);
      jn["left"] = remap[n.left];
      jn["right"] = remap[n.right];
    }
    jnodes.push_back(jn);
  }
  doc["nodes"] = jnodes;
  if (!metadata.empty()) doc["metadata"] = metadata;
  return doc;
}

TreeDocument load_tree(const std::string& path, const std::vector<std::string>* names) {
  return read_tree(load_json(path), names);
}

void save_tree(const DecisionTree& tree, const std::string& path,
               const nlohmann::json& metadata, const std::vector<std::string>* names) {
  save_json(write_tree(tree, metadata, names), path);
}

// ---------------------------------------------------------------------------
// J48 text import
// ---------------------------------------------------------------------------

namespace {

struct J48Line {
  int depth = 0;
  std::string feature;
  std::string op;
  double threshold = 0;
  bool has_leaf = false;
  std::string leaf_class;
  int number = 0;  // source line, for error messages
};

bool looks_like_split(const std::string& s) {
  return s.find(" <= ") != std::string::npos || s.find(" > ") != std::string::npos ||
         s.find(" = ") != std::string::npos || s.find(" < ") != std::string::npos ||
         s.find(" >= ") != std::string::npos || s.find(" != ") != std::string::npos;
}

std::vector<J48Line> j48_lines(const std::string& text) {
  std::vector<J48Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string s = raw;
    int depth = 0;
    while (s.rfind("|   ", 0) == 0 || s.rfind("|\t", 0) == 0) {
      ++depth;
      s = s.substr(s.rfind("|   ", 0) == 0 ? 4 : 2);
    }
    // Skip headers, separators, and summary lines.
    if (s.empty() || s.find("J48") != std::string::npos || s.rfind("---", 0) == 0 ||
        s.rfind("Number of Leaves", 0) == 0 || s.rfind("Size of the tree", 0) == 0)
      continue;
    if (!looks_like_split(s) && s.rfind(": ", 0) != 0) continue;

    J48Line line;
    line.depth = depth;
    line.number = number;

    std::string split_part = s;
    size_t colon = s.find(": ");
    if (colon != std::string::npos) {
      line.has_leaf = true;
      std::string leaf_part = s.substr(colon + 2);
      size_t paren = leaf_part.find(" (");
      line.leaf_class = paren == std::string::npos ? leaf_part : leaf_part.substr(0, paren);
      split_part = s.substr(0, colon);
    }
    if (split_part.empty()) {
      // Degenerate single-leaf dump ": class (n)".
      line.feature.clear();
      out.push_back(line);
      continue;
    }

    for (const char* op : {" <= ", " > ", " >= ", " < ", " != ", " = "}) {
      size_t at = split_part.find(op);
      if (at != std::string::npos) {
        line.feature = split_part.substr(0, at);
        line.op = std::string(op).substr(1, std::string(op).size() - 2);
        std::string value = split_part.substr(at + std::string(op).size());
        if (line.op == "<=" || line.op == ">") {
          try {
            size_t used = 0;
            line.threshold = std::stod(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
          } catch (const std::exception&) {
            throw Error(Errc::Parse, "line " + std::to_string(number) +
                                         ": cannot parse threshold '" + value + "'");
          }
        }
        break;
      }
    }
    if (line.feature.empty() && line.op.empty())
      throw Error(Errc::Parse, "line " + std::to_string(number) + ": unrecognized tree line");
    out.push_back(line);
  }
  return out;
}

struct J48Parser {
  const std::vector<J48Line>& lines;
  const std::vector<std::string>& feature_names;
  const std::vector<std::string>& class_names;
  std::vector<Node> nodes;
  size_t pos = 0;

  int resolve_feature(const J48Line& l) const {
    auto it = std::find(feature_names.begin(), feature_names.end(), l.feature);
    if (it == feature_names.end())
      throw Error(Errc::Validation, "line " + std::to_string(l.number) +
                                        ": feature '" + l.feature +
                                        "' not found in the dataset header");
    return static_cast<int>(it - feature_names.begin());
  }

  Label resolve_class(const J48Line& l) const {
    const std::string& c = l.leaf_class;
    if (!class_names.empty()) {
      if (c == class_names[0]) return Label::Blue;
      if (class_names.size() > 1 && c == class_names[1]) return Label::Red;
    }
    if (c == "blue") return Label::Blue;
    if (c == "red") return Label::Red;
    throw Error(Errc::Validation,
                "line " + std::to_string(l.number) + ": unknown class '" + c + "'");
  }

  NodeId make_leaf(Label label) {
    nodes.push_back(Node::leaf(label));
    return static_cast<NodeId>(nodes.size()) - 1;
  }

  NodeId parse_subtree(int depth) {
    if (pos >= lines.size())
      throw Error(Errc::Parse, "unexpected end of tree text");
    const J48Line& first = lines[pos];
    if (first.op != "<=") {
      if (first.op == "=" || first.op == "!=")
        throw Error(Errc::Unsupported, "line " + std::to_string(first.number) +
                                           ": categorical split '" + first.op +
                                           "' is not supported");
      throw Error(Errc::Unsupported, "line " + std::to_string(first.number) +
                                         ": expected a '<=' split, got '" + first.op + "'");
    }
    if (first.depth != depth)
      throw Error(Errc::Parse, "line " + std::to_string(first.number) +
                                   ": unexpected indentation");
    ++pos;
    NodeId left = first.has_leaf ? make_leaf(resolve_class(first)) : parse_subtree(depth + 1);

    if (pos >= lines.size())
      throw Error(Errc::Parse, "missing '>' counterpart for line " +
                                   std::to_string(first.number));
    const J48Line& second = lines[pos];
    if (second.op != ">" || second.depth != depth || second.feature != first.feature ||
        second.threshold != first.threshold)
      throw Error(Errc::Parse, "line " + std::to_string(second.number) +
                                   ": expected the '>' counterpart of line " +
                                   std::to_string(first.number));
    ++pos;
    NodeId right = second.has_leaf ? make_leaf(resolve_class(second)) : parse_subtree(depth + 1);

    nodes.push_back(Node::cut(resolve_feature(first), first.threshold, left, right));
    return static_cast<NodeId>(nodes.size()) - 1;
  }
};

}  // namespace

DecisionTree import_weka_j48(const std::string& text,
                             const std::vector<std::string>& feature_names,
                             const std::vector<std::string>& class_names) {
  std::vector<J48Line> lines = j48_lines(text);
  if (lines.empty()) throw Error(Errc::Parse, "no tree lines found in the input");

  J48Parser parser{lines, feature_names, class_names, {}, 0};
  if (lines.size() == 1 && lines[0].has_leaf && lines[0].feature.empty()) {
    parser.make_leaf(parser.resolve_class(lines[0]));
    return DecisionTree(std::move(parser.nodes), 0).compacted();
  }
  NodeId root = parser.parse_subtree(0);
  if (parser.pos != lines.size())
    throw Error(Errc::Parse, "line " + std::to_string(lines[parser.pos].number) +
                                 ": trailing content after the tree");
  DecisionTree tree(std::move(parser.nodes), root);
  return tree.compacted();
}

// ---------------------------------------------------------------------------
// Edit scripts
// ---------------------------------------------------------------------------

EditScript read_script(const nlohmann::json& doc) {
  if (!doc.is_object()) throw Error(Errc::Schema, "script document must be a JSON object");
  EditScript script;
  if (doc.contains("edits")) {
    for (const auto& je : doc["edits"]) {
      Edit e;
      e.node = je.at("node").get<NodeId>();
      e.kind = edit_kind_from_name(je.at("kind").get<std::string>());
      std::string where = "edit on node " + std::to_string(e.node);
      if (e.kind == EditKind::Adjust || e.kind == EditKind::Exchange)
        e.new_threshold = threshold_from_json(je.at("threshold"), where);
      if (e.kind == EditKind::Exchange) e.new_feature = je.at("feature").get<int>();
      if (e.kind == EditKind::Raise) e.raise_source = je.at("raise_source").get<NodeId>();
      script.edits.push_back(e);
    }
  }
  if (doc.contains("leaf_labels")) {
    for (auto it = doc["leaf_labels"].begin(); it != doc["leaf_labels"].end(); ++it) {
      NodeId id;
      try {
        id = static_cast<NodeId>(std::stol(it.key()));
      } catch (const std::exception&) {
        throw Error(Errc::Schema, "leaf_labels key '" + it.key() + "' is not a node id");
      }
      script.leaf_labels[id] =
          label_from_string(it.value().get<std::string>(), "leaf " + it.key());
    }
  }
  script.achieved_errors = doc.value("achieved_errors", -1);
  return script;
}

nlohmann::json write_script(const EditScript& script) {
  nlohmann::json doc;
  nlohmann::json edits = nlohmann::json::array();
  for (const Edit& e : script.edits) {
    nlohmann::json je;
    je["node"] = e.node;
    je["kind"] = edit_kind_name(e.kind);
    if (e.kind == EditKind::Adjust || e.kind == EditKind::Exchange)
      je["threshold"] = threshold_to_json(e.new_threshold);
    if (e.kind == EditKind::Exchange) je["feature"] = e.new_feature;
    if (e.kind == EditKind::Raise) je["raise_source"] = e.raise_source;
    edits.push_back(je);
  }
  doc["edits"] = edits;
  nlohmann::json labels = nlohmann::json::object();
  for (const auto& [id, label] : script.leaf_labels)
    labels[std::to_string(id)] = label_name(label);
  doc["leaf_labels"] = labels;
  if (script.achieved_errors >= 0) doc["achieved_errors"] = script.achieved_errors;
  return doc;
}

EditScript load_script(const std::string& path) { return read_script(load_json(path)); }

void save_script(const EditScript& script, const std::string& path) {
  save_json(write_script(script), path);
}

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open file " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, path + ": " + e.what());
  }
}

void save_json(const nlohmann::json& doc, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Parse, "cannot write file " + path);
  out << doc.dump(2) << "\n";
}

}  // namespace dtls
