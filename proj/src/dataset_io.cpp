#include "dtls/dataset_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace dtls {

std::string format_double(double v) {
  if (v == kNegInf) return "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

namespace {

std::vector<std::string> split_line(const std::string& line, char delim) {
  std::vector<std::string> cells;
  std::string cell;
  for (char c : line) {
    if (c == delim) {
      cells.push_back(cell);
      cell.clear();
    } else if (c != '\r') {
      cell += c;
    }
  }
  cells.push_back(cell);
  return cells;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

bool parse_number(const std::string& cell, double& out) {
  std::string t = trim(cell);
  if (t.empty()) return false;
  const char* begin = t.data();
  const char* end = begin + t.size();
  auto res = std::from_chars(begin, end, out);
  return res.ec == std::errc() && res.ptr == end && std::isfinite(out);
}

}  // namespace

LoadedDataset parse_dataset(const std::string& text, const DatasetLoadOptions& options,
                            const std::string& origin) {
  char delim = options.delimiter ? options.delimiter : ',';

  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line))
    throw Error(Errc::Parse, origin + ": missing header row");
  std::vector<std::string> header = split_line(line, delim);
  for (auto& h : header) h = trim(h);

  int target = -1;
  if (!options.target_column.empty()) {
    for (size_t j = 0; j < header.size(); ++j)
      if (header[j] == options.target_column) target = static_cast<int>(j);
    if (target < 0)
      throw Error(Errc::Parse,
                  origin + ": target column '" + options.target_column + "' not found");
  } else {
    for (size_t j = 0; j < header.size(); ++j)
      if (header[j] == "target") target = static_cast<int>(j);
    if (target < 0) target = static_cast<int>(header.size()) - 1;
  }

  int d = static_cast<int>(header.size()) - 1;
  if (d < 1) throw Error(Errc::Validation, origin + ": dataset needs at least one feature");

  std::vector<std::string> feature_names;
  for (size_t j = 0; j < header.size(); ++j)
    if (static_cast<int>(j) != target) feature_names.push_back(header[j]);

  std::vector<double> values;
  std::vector<std::string> raw_labels;
  int row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    std::vector<std::string> cells = split_line(line, delim);
    if (cells.size() != header.size())
      throw Error(Errc::Parse, origin + ":" + std::to_string(row) + ": expected " +
                                   std::to_string(header.size()) + " cells, got " +
                                   std::to_string(cells.size()));
    for (size_t j = 0; j < cells.size(); ++j) {
      if (static_cast<int>(j) == target) {
        raw_labels.push_back(trim(cells[j]));
        continue;
      }
      double v;
      if (!parse_number(cells[j], v))
        throw Error(Errc::Parse, origin + ":" + std::to_string(row) + ": column '" +
                                     header[j] + "' has non-numeric value '" + trim(cells[j]) +
                                     "'; one-hot encode categorical features first");
      values.push_back(v);
    }
  }
  if (raw_labels.empty()) throw Error(Errc::Validation, origin + ": dataset has no examples");

  // Label mapping: explicit order wins, otherwise first-seen becomes blue.
  std::vector<std::string> class_names;
  for (const auto& pinned : options.label_order) class_names.push_back(pinned);
  for (const auto& l : raw_labels)
    if (std::find(class_names.begin(), class_names.end(), l) == class_names.end())
      class_names.push_back(l);
  if (class_names.size() > 2) {
    std::string seen;
    for (const auto& c : class_names) seen += (seen.empty() ? "" : ", ") + c;
    throw Error(Errc::Unsupported,
                origin + ": more than two classes (" + seen + "); only binary labels are supported");
  }
  while (class_names.size() < 2) class_names.push_back(class_names[0] == "red" ? "blue" : "red");

  std::vector<Label> labels;
  labels.reserve(raw_labels.size());
  for (const auto& l : raw_labels)
    labels.push_back(l == class_names[0] ? Label::Blue : Label::Red);

  int n = static_cast<int>(labels.size());
  if (options.dedup_conflicts) {
    // Drop each later row that repeats an earlier row's features with the
    // opposite class.
    std::map<std::vector<double>, Label> seen;
    std::vector<double> kept_values;
    std::vector<Label> kept_labels;
    for (int i = 0; i < n; ++i) {
      std::vector<double> rowv(values.begin() + static_cast<size_t>(i) * d,
                               values.begin() + static_cast<size_t>(i + 1) * d);
      auto it = seen.find(rowv);
      if (it != seen.end() && it->second != labels[i]) continue;
      if (it == seen.end()) seen.emplace(rowv, labels[i]);
      kept_values.insert(kept_values.end(), rowv.begin(), rowv.end());
      kept_labels.push_back(labels[i]);
    }
    values = std::move(kept_values);
    labels = std::move(kept_labels);
    n = static_cast<int>(labels.size());
  }

  return {Dataset(n, d, std::move(values), std::move(labels), std::move(feature_names)),
          std::move(class_names)};
}

LoadedDataset load_dataset(const std::string& path, const DatasetLoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open dataset file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  DatasetLoadOptions opts = options;
  if (!opts.delimiter && path.size() > 4 && path.substr(path.size() - 4) == ".tsv")
    opts.delimiter = '\t';
  return parse_dataset(buf.str(), opts, path);
}

void write_dataset_csv(const Dataset& data, const std::vector<std::string>& class_names,
                       std::ostream& out) {
  for (int j = 0; j < data.d(); ++j) out << data.feature_name(j) << ",";
  out << "target\n";
  for (int i = 0; i < data.n(); ++i) {
    for (int j = 0; j < data.d(); ++j) out << format_double(data.at(i, j)) << ",";
    out << class_names[data.label(i) == Label::Blue ? 0 : 1] << "\n";
  }
}

void save_dataset_csv(const Dataset& data, const std::vector<std::string>& class_names,
                      const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Parse, "cannot write dataset file " + path);
  write_dataset_csv(data, class_names, out);
}

}  // namespace dtls
