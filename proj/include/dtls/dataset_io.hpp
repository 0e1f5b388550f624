#ifndef DTLS_DATASET_IO_HPP
#define DTLS_DATASET_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "dtls/dataset.hpp"

namespace dtls {

struct DatasetLoadOptions {
  char delimiter = 0;             // 0 infers: tab for .tsv, comma otherwise
  std::string target_column;      // empty: column named "target", else the last one
  std::vector<std::string> label_order;  // optional; first entry becomes blue
  bool dedup_conflicts = false;   // drop later rows identical to an earlier row
                                  // of the other class
};

/// A dataset plus the original class-name spelling (blue first).
struct LoadedDataset {
  Dataset data;
  std::vector<std::string> class_names;  // {blue name, red name}
};

LoadedDataset parse_dataset(const std::string& text, const DatasetLoadOptions& options = {},
                            const std::string& origin = "<string>");
LoadedDataset load_dataset(const std::string& path, const DatasetLoadOptions& options = {});

void write_dataset_csv(const Dataset& data, const std::vector<std::string>& class_names,
                       std::ostream& out);
void save_dataset_csv(const Dataset& data, const std::vector<std::string>& class_names,
                      const std::string& path);

/// Shortest decimal form that parses back to the same double.
std::string format_double(double v);

}  // namespace dtls

#endif
