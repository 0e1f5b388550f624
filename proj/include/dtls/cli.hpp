#ifndef DTLS_CLI_HPP
#define DTLS_CLI_HPP

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dtls/dataset_io.hpp"
#include "dtls/instance.hpp"

namespace dtls {
namespace cli {

// Exit codes shared by every subcommand.
constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInput = 2;
constexpr int kExitTimeout = 3;
constexpr int kExitCapacity = 4;
constexpr int kExitMismatch = 5;

int exit_code_for(const Error& e);

struct CommonArgs {
  double time_limit = 0.0;  // seconds; 0 means none
  std::ostream* out = &std::cout;
  std::ostream* err = &std::cerr;
};

struct SolveArgs : CommonArgs {
  std::string dataset_path;
  std::string tree_path;
  std::string problem = "adjust";  // adjust|exchange|pls|fs-dt|fsff-dt
  int k = 0;
  Budgets budgets;  // pls only
  std::optional<int> t;
  std::string algorithm = "auto";  // dp|subset|oracle|auto
  double oracle_cap = 1e8;
  std::string output;      // machine CSV
  std::string script_out;  // edit script JSON
  std::string tree_out;    // optimized tree JSON
  DatasetLoadOptions load_options;
};

int run_solve(const SolveArgs& args);

struct ParetoArgs : CommonArgs {
  std::string dataset_path;
  std::string tree_path;
  std::string op = "adjust";  // adjust|exchange
  int max_local_ops = 2;
  int max_prune = 2;
  std::string output;
  DatasetLoadOptions load_options;
};

int run_pareto(const ParetoArgs& args);

struct GenerateArgs : CommonArgs {
  std::string kind;  // hitting-set|ta-to-ce|random
  std::string output_dir = ".";
  std::string name;  // output file stem; defaults to the kind
  // hitting-set
  int universe = 0;
  std::string sets;  // "1,2;2,3" (elements comma-separated, sets by ';')
  int kappa = 0;
  // ta-to-ce (source instance)
  std::string dataset_path;
  std::string tree_path;
  int k = 0;
  std::optional<int> t;
  // random
  uint64_t seed = 1;
  int n_max = 12, d_max = 3, domain_max = 4, s_max = 4;
  DatasetLoadOptions load_options;
};

int run_generate(const GenerateArgs& args);

struct ConvertArgs : CommonArgs {
  std::string dataset_path;  // header + class names for the import
  std::string input;         // J48 text dump
  std::string output;        // tree JSON
  DatasetLoadOptions load_options;
};

int run_convert(const ConvertArgs& args);

struct VerifyArgs : CommonArgs {
  std::string dataset_path;
  std::string tree_path;
  std::string script_path;
  std::string problem = "adjust";
  int k = -1;  // negative: skip budget check
  Budgets budgets;
  bool has_budgets = false;
  DatasetLoadOptions load_options;
};

int run_verify(const VerifyArgs& args);

struct BenchArgs : CommonArgs {
  std::string manifest_path;
  std::string output;
  int workers = 1;
  double oracle_cap = 1e8;
};

int run_bench(const BenchArgs& args);

}  // namespace cli
}  // namespace dtls

#endif
