#include <cstdlib>
#include <string>

#include <CLI11.hpp>

#include "dtls/cli.hpp"

namespace {

double default_time_limit() {
  const char* env = std::getenv("DTLS_TIME_LIMIT");
  if (!env) return 0.0;
  try {
    return std::stod(env);
  } catch (const std::exception&) {
    return 0.0;
  }
}

void add_load_options(CLI::App* cmd, dtls::DatasetLoadOptions& options, std::string& delim) {
  cmd->add_option("--delimiter", delim, "cell delimiter (default: ',' or tab for .tsv)");
  cmd->add_option("--target-column", options.target_column,
                  "label column name (default: 'target', else the last column)");
  cmd->add_option("--label-order", options.label_order,
                  "class name(s) pinned to blue(,red); default first-seen");
  cmd->add_flag("--dedup-conflicts", options.dedup_conflicts,
                "drop later duplicates of cross-class identical rows");
}

void apply_delim(dtls::DatasetLoadOptions& options, const std::string& delim) {
  if (delim == "\\t" || delim == "tab")
    options.delimiter = '\t';
  else if (!delim.empty())
    options.delimiter = delim[0];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact local search for binary decision trees"};
  app.require_subcommand(1);

  dtls::cli::SolveArgs solve;
  dtls::cli::ParetoArgs pareto;
  dtls::cli::GenerateArgs generate;
  dtls::cli::ConvertArgs convert;
  dtls::cli::VerifyArgs verify;
  dtls::cli::BenchArgs bench;
  solve.time_limit = pareto.time_limit = generate.time_limit = convert.time_limit =
      verify.time_limit = bench.time_limit = default_time_limit();
  std::string solve_delim, pareto_delim, generate_delim, convert_delim, verify_delim;

  auto* solve_cmd = app.add_subcommand("solve", "optimize a tree under operation budgets");
  solve_cmd->add_option("--dataset", solve.dataset_path, "dataset CSV/TSV")->required();
  solve_cmd->add_option("--tree", solve.tree_path, "tree JSON or J48 text dump")->required();
  solve_cmd->add_option("--problem", solve.problem, "adjust|exchange|pls|fs-dt|fsff-dt");
  solve_cmd->add_option("-k,--budget", solve.k, "operation budget (adjust/exchange)");
  solve_cmd->add_option("--k-ad", solve.budgets.adjust, "adjustment budget (pls)");
  solve_cmd->add_option("--k-ex", solve.budgets.exchange, "exchange budget (pls)");
  solve_cmd->add_option("--k-re", solve.budgets.replace, "replacement budget (pls, exact)");
  solve_cmd->add_option("--k-ra", solve.budgets.raise, "raising budget (pls, exact)");
  int solve_t = -1;
  solve_cmd->add_option("--t", solve_t, "error bound for the decision question");
  solve_cmd->add_option("--algorithm", solve.algorithm, "dp|subset|oracle|auto");
  solve_cmd->add_option("--time-limit", solve.time_limit, "seconds (0 = none)");
  solve_cmd->add_option("--oracle-cap", solve.oracle_cap, "oracle enumeration cap");
  solve_cmd->add_option("--output", solve.output, "machine report CSV");
  solve_cmd->add_option("--script-out", solve.script_out, "edit script JSON");
  solve_cmd->add_option("--tree-out", solve.tree_out, "optimized tree JSON");
  add_load_options(solve_cmd, solve.load_options, solve_delim);

  auto* pareto_cmd = app.add_subcommand("pareto", "errors versus pruned nodes trade-off");
  pareto_cmd->add_option("--dataset", pareto.dataset_path, "dataset CSV/TSV")->required();
  pareto_cmd->add_option("--tree", pareto.tree_path, "tree JSON or J48 text dump")->required();
  pareto_cmd->add_option("--op", pareto.op, "adjust|exchange");
  pareto_cmd->add_option("--max-local-ops", pareto.max_local_ops, "local-operation budget cap");
  pareto_cmd->add_option("--max-prune", pareto.max_prune, "replacement budget cap");
  pareto_cmd->add_option("--time-limit", pareto.time_limit, "seconds (0 = none)");
  pareto_cmd->add_option("--output", pareto.output, "long-format CSV");
  add_load_options(pareto_cmd, pareto.load_options, pareto_delim);

  auto* gen_cmd = app.add_subcommand("generate", "emit benchmark instances");
  gen_cmd->add_option("--kind", generate.kind, "hitting-set|ta-to-ce|random")->required();
  gen_cmd->add_option("--output-dir", generate.output_dir, "output directory");
  gen_cmd->add_option("--name", generate.name, "output file stem");
  gen_cmd->add_option("--universe", generate.universe, "hitting-set universe size");
  gen_cmd->add_option("--sets", generate.sets, "hitting-set family, e.g. '1,2;2,3'");
  gen_cmd->add_option("--kappa", generate.kappa, "hitting-set target size");
  gen_cmd->add_option("--dataset", generate.dataset_path, "source dataset (ta-to-ce)");
  gen_cmd->add_option("--tree", generate.tree_path, "source tree (ta-to-ce)");
  gen_cmd->add_option("-k,--budget", generate.k, "source budget (ta-to-ce)");
  int gen_t = -1;
  gen_cmd->add_option("--t", gen_t, "source error bound (ta-to-ce)");
  gen_cmd->add_option("--seed", generate.seed, "random seed");
  gen_cmd->add_option("--n-max", generate.n_max, "random: max examples");
  gen_cmd->add_option("--d-max", generate.d_max, "random: max features");
  gen_cmd->add_option("--domain-max", generate.domain_max, "random: max distinct values");
  gen_cmd->add_option("--s-max", generate.s_max, "random: max cuts");
  add_load_options(gen_cmd, generate.load_options, generate_delim);

  auto* convert_cmd = app.add_subcommand("convert", "import a J48 text dump as tree JSON");
  convert_cmd->add_option("--dataset", convert.dataset_path, "dataset for names")->required();
  convert_cmd->add_option("--input", convert.input, "J48 text dump")->required();
  convert_cmd->add_option("--output", convert.output, "tree JSON")->required();
  add_load_options(convert_cmd, convert.load_options, convert_delim);

  auto* verify_cmd = app.add_subcommand("verify", "replay and check an edit script");
  verify_cmd->add_option("--dataset", verify.dataset_path, "dataset CSV/TSV")->required();
  verify_cmd->add_option("--tree", verify.tree_path, "tree JSON or J48 text dump")->required();
  verify_cmd->add_option("--script", verify.script_path, "edit script JSON")->required();
  verify_cmd->add_option("--problem", verify.problem, "adjust|exchange|pls");
  verify_cmd->add_option("-k,--budget", verify.k, "budget to check (adjust/exchange)");
  verify_cmd->add_option("--k-ad", verify.budgets.adjust, "adjustment budget");
  verify_cmd->add_option("--k-ex", verify.budgets.exchange, "exchange budget");
  verify_cmd->add_option("--k-re", verify.budgets.replace, "replacement budget");
  verify_cmd->add_option("--k-ra", verify.budgets.raise, "raising budget");
  add_load_options(verify_cmd, verify.load_options, verify_delim);

  auto* bench_cmd = app.add_subcommand("bench", "run a manifest of instances");
  bench_cmd->add_option("--manifest", bench.manifest_path, "instance manifest CSV")->required();
  bench_cmd->add_option("--output", bench.output, "machine report CSV");
  bench_cmd->add_option("--workers", bench.workers, "parallel workers");
  bench_cmd->add_option("--time-limit", bench.time_limit, "per-instance seconds (0 = none)");

  CLI11_PARSE(app, argc, argv);

  if (solve_cmd->parsed()) {
    if (solve_t >= 0) solve.t = solve_t;
    apply_delim(solve.load_options, solve_delim);
    return dtls::cli::run_solve(solve);
  }
  if (pareto_cmd->parsed()) {
    apply_delim(pareto.load_options, pareto_delim);
    return dtls::cli::run_pareto(pareto);
  }
  if (gen_cmd->parsed()) {
    if (gen_t >= 0) generate.t = gen_t;
    apply_delim(generate.load_options, generate_delim);
    return dtls::cli::run_generate(generate);
  }
  if (convert_cmd->parsed()) {
    apply_delim(convert.load_options, convert_delim);
    return dtls::cli::run_convert(convert);
  }
  if (verify_cmd->parsed()) {
    verify.has_budgets = verify_cmd->count("--k-ad") || verify_cmd->count("--k-ex") ||
                         verify_cmd->count("--k-re") || verify_cmd->count("--k-ra");
    apply_delim(verify.load_options, verify_delim);
    return dtls::cli::run_verify(verify);
  }
  if (bench_cmd->parsed()) return dtls::cli::run_bench(bench);
  return dtls::cli::kExitError;
}
