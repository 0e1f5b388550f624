#include "dtls/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "dtls/box.hpp"
#include "dtls/dp.hpp"
#include "dtls/oracle.hpp"
#include "dtls/random_instance.hpp"
#include "dtls/reductions.hpp"
#include "dtls/report.hpp"
#include "dtls/subset_search.hpp"
#include "dtls/tree_io.hpp"
#include "dtls/tree_ops.hpp"

namespace dtls {
namespace cli {

namespace fs = std::filesystem;

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::Parse:
    case Errc::Schema:
    case Errc::Validation:
    case Errc::Unsupported:
    case Errc::InvalidEdit:
      return kExitInput;
    case Errc::Timeout: return kExitTimeout;
    case Errc::Capacity: return kExitCapacity;
    case Errc::Mismatch: return kExitMismatch;
    case Errc::Internal: return kExitError;
  }
  return kExitError;
}

namespace {

struct LoadedInstance {
  LoadedDataset dataset;
  DecisionTree tree;
};

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

LoadedInstance load_inputs(const std::string& dataset_path, const std::string& tree_path,
                           const DatasetLoadOptions& options) {
  LoadedInstance in{load_dataset(dataset_path, options), {}};
  if (ends_with(tree_path, ".json")) {
    in.tree = load_tree(tree_path, &in.dataset.data.feature_names()).tree;
  } else {
    std::ifstream f(tree_path);
    if (!f) throw Error(Errc::Parse, "cannot open tree file " + tree_path);
    std::stringstream buf;
    buf << f.rdbuf();
    in.tree = import_weka_j48(buf.str(), in.dataset.data.feature_names(),
                              in.dataset.class_names);
  }
  in.tree.validate(in.dataset.data.d());
  return in;
}

Deadline deadline_from(double seconds) {
  return seconds > 0 ? Deadline::after_seconds(seconds) : Deadline::none();
}

/// The solver's own result replayed through the verification path; an
/// inconsistent script is a solver bug and is reported loudly.
void self_verify(const DecisionTree& tree, const Dataset& data, const EditScript& script,
                 const Budgets& budgets) {
  DecisionTree edited = apply_edits(tree, script);
  int recomputed = count_errors(edited, data);
  if (recomputed != script.achieved_errors)
    throw Error(Errc::Internal, "script verification failed: claimed " +
                                    std::to_string(script.achieved_errors) + ", recomputed " +
                                    std::to_string(recomputed));
  if (!script.within(budgets))
    throw Error(Errc::Internal, "script verification failed: edits exceed the budgets");
}

std::string describe_edit(const Edit& e, const Dataset& data) {
  std::ostringstream out;
  out << edit_kind_name(e.kind) << " node " << e.node;
  switch (e.kind) {
    case EditKind::Adjust:
      out << " -> thr " << format_double(e.new_threshold);
      break;
    case EditKind::Exchange:
      out << " -> (" << data.feature_name(e.new_feature) << ", "
          << format_double(e.new_threshold) << ")";
      break;
    case EditKind::Replace:
      break;
    case EditKind::Raise:
      out << " <- node " << e.raise_source;
      break;
  }
  return out.str();
}

void write_outputs(const SolveArgs& args, const std::vector<ReportRow>& rows,
                   const DecisionTree& tree, const Dataset& data, const EditScript* script) {
  if (!args.output.empty()) {
    std::ofstream out(args.output);
    if (!out) throw Error(Errc::Parse, "cannot write report file " + args.output);
    write_report_csv(rows, out);
  }
  if (script && !args.script_out.empty()) save_script(*script, args.script_out);
  if (script && !args.tree_out.empty()) {
    DecisionTree edited = apply_edits(tree, *script);
    save_tree(edited, args.tree_out, nlohmann::json::object(), &data.feature_names());
  }
}

}  // namespace

int run_solve(const SolveArgs& args) {
  auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  };
  std::ostream& out = *args.out;
  std::ostream& err = *args.err;

  try {
    LoadedInstance in = load_inputs(args.dataset_path, args.tree_path, args.load_options);
    const Dataset& data = in.dataset.data;
    Deadline deadline = deadline_from(args.time_limit);

    int initial = count_errors(in.tree, data);
    ReportRow row;
    row.name = fs::path(args.dataset_path).stem().string();
    row.initial = initial;

    out << "dataset: " << args.dataset_path << " (n=" << data.n() << ", d=" << data.d()
        << ")\n";
    out << "tree: " << args.tree_path << " (s=" << in.tree.num_cuts() << ")\n";
    out << "initial errors: " << initial << "\n";

    EditScript script;
    bool have_script = false;
    std::optional<int> optimum;

    auto emit_dp_result = [&](const SolveResult& result, const LocalSearchInstance& instance) {
      out << "errors by budget:";
      for (size_t j = 0; j < result.errors_by_budget.size(); ++j) {
        out << " k=" << j << ": " << result.errors_by_budget[j];
        row.cells.push_back({"k=" + std::to_string(j), result.errors_by_budget[j]});
      }
      out << "\n";
      optimum = result.errors_by_budget.back();
      script = result.script;
      have_script = true;
      self_verify(instance.tree(), data, script, instance.budgets());
    };

    if (args.problem == "adjust" || args.problem == "exchange" || args.problem == "fs-dt" ||
        args.problem == "fsff-dt") {
      std::optional<LocalSearchInstance> instance;
      if (args.problem == "adjust" || args.problem == "exchange") {
        instance.emplace(data, in.tree,
                         args.problem == "adjust" ? ProblemKind::Adjust : ProblemKind::Exchange,
                         args.k, args.t);
      } else {
        if (!args.t)
          throw Error(Errc::Validation, "--t is required for the fixed-structure problems");
        instance.emplace(fixed_structure_instance(
            data, in.tree,
            args.problem == "fs-dt" ? FixedStructureKind::FreeFeatures
                                    : FixedStructureKind::FixedFeatures,
            *args.t));
        out << "fixed-structure mode: k=" << instance->k() << " ("
            << (args.problem == "fs-dt" ? "exchange" : "adjust") << " on a dummy tree)\n";
      }

      std::string algorithm = args.algorithm;
      if (algorithm == "auto") {
        InstanceParameters p = instance_parameters(*instance);
        double predicted = std::pow(static_cast<double>(p.domain_size + 1), 2.0 * p.d) *
                           std::max(p.s, 1) * (p.k + 1);
        if (instance->error_bound() && p.s <= 12 && *instance->error_bound() <= 4 &&
            predicted > 1e7) {
          algorithm = "subset";
        } else {
          algorithm = "dp";
        }
        err << "[auto] chose " << algorithm << " (predicted dp states ~ "
            << static_cast<long long>(std::min(predicted, 1e18)) << ")\n";
      }

      if (algorithm == "dp") {
        emit_dp_result(solve_single_op_dp(*instance, deadline), *instance);
      } else if (algorithm == "subset") {
        SubsetOutcome outcome = instance->problem() == ProblemKind::Adjust
                                    ? solve_threshold_adjustment_subset(*instance, deadline)
                                    : solve_cut_exchange_subset(*instance, deadline);
        out << "feasible at t=" << *instance->error_bound() << ": "
            << (outcome.feasible ? "yes" : "no") << "\n";
        row.cells.push_back({"feasible", outcome.feasible ? 1 : 0});
        if (outcome.feasible) {
          script = outcome.script;
          have_script = true;
          optimum = script.achieved_errors;
          self_verify(instance->tree(), data, script, instance->budgets());
        }
      } else if (algorithm == "oracle") {
        OracleOptions options{args.oracle_cap};
        OracleResult result = instance->problem() == ProblemKind::Adjust
                                  ? brute_force_adjust_subsets(*instance, options)
                                  : brute_force_exchange(*instance, options);
        out << "optimum at k=" << instance->k() << ": " << result.min_errors << "\n";
        row.cells.push_back({"k=" + std::to_string(instance->k()), result.min_errors});
        optimum = result.min_errors;
        script = result.script;
        have_script = true;
        self_verify(instance->tree(), data, script, instance->budgets());
      } else {
        throw Error(Errc::Validation, "unknown algorithm '" + args.algorithm + "'");
      }

      if (instance->error_bound() && optimum)
        out << "decision: " << (*optimum <= *instance->error_bound() ? "feasible" : "infeasible")
            << " at t=" << *instance->error_bound() << "\n";
    } else if (args.problem == "pls") {
      LocalSearchInstance instance(data, in.tree, args.budgets, args.t);
      PlsResult result = solve_pls_dp(instance, deadline);
      const Budgets& caps = args.budgets;
      int at_caps = result.table.at(caps.adjust, caps.exchange, caps.replace, caps.raise);
      out << "errors at budgets (ad=" << caps.adjust << ", ex=" << caps.exchange
          << ", re=" << caps.replace << ", ra=" << caps.raise << "): ";
      if (at_caps == kInfeasible)
        out << "infeasible\n";
      else
        out << at_caps << "\n";
      for (int a = 0; a <= caps.adjust; ++a)
        for (int e = 0; e <= caps.exchange; ++e)
          for (int r = 0; r <= caps.replace; ++r)
            for (int g = 0; g <= caps.raise; ++g) {
              int v = result.table.at(a, e, r, g);
              std::string key = "a" + std::to_string(a) + "_e" + std::to_string(e) + "_r" +
                                std::to_string(r) + "_g" + std::to_string(g);
              row.cells.push_back({key, v == kInfeasible ? std::nullopt
                                                         : std::optional<int>(v)});
            }
      if (at_caps != kInfeasible) {
        script = result.script;
        have_script = true;
        optimum = at_caps;
        self_verify(instance.tree(), data, script, instance.budgets());
      }
    } else {
      throw Error(Errc::Validation, "unknown problem '" + args.problem + "'");
    }

    if (have_script) {
      out << "script: " << script.edits.size() << " edit(s), achieved errors "
          << script.achieved_errors << "\n";
      for (const Edit& e : script.edits) out << "  " << describe_edit(e, data) << "\n";
    }
    row.seconds = elapsed();
    write_outputs(args, {row}, in.tree, data, have_script ? &script : nullptr);
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (e.code() == Errc::Timeout) {
      out << "timed out after " << args.time_limit << "s\n";
      if (!args.output.empty()) {
        ReportRow row;
        row.name = fs::path(args.dataset_path).stem().string();
        row.timed_out = true;
        row.note = "timeout";
        std::ofstream f(args.output);
        if (f) write_report_csv({row}, f);
      }
    }
    return exit_code_for(e);
  }
}

int run_pareto(const ParetoArgs& args) {
  std::ostream& out = *args.out;
  std::ostream& err = *args.err;
  try {
    LoadedInstance in = load_inputs(args.dataset_path, args.tree_path, args.load_options);
    const Dataset& data = in.dataset.data;
    Deadline deadline = deadline_from(args.time_limit);

    if (args.op != "adjust" && args.op != "exchange")
      throw Error(Errc::Validation, "pareto op must be adjust or exchange");
    bool adjust = args.op == "adjust";
    Budgets caps;
    (adjust ? caps.adjust : caps.exchange) = args.max_local_ops;
    caps.replace = args.max_prune;

    LocalSearchInstance instance(data, in.tree, caps);
    PlsResult result = solve_pls_dp(instance, deadline);

    // Long-format rows: one per (local-op budget, pruned nodes).
    std::vector<ReportRow> rows;
    out << "pareto front (" << args.op << " budget x pruned cut nodes -> errors)\n";
    for (int r = 0; r <= args.max_prune; ++r) {
      ReportRow row;
      row.name = "re=" + std::to_string(r);
      for (int j = 0; j <= args.max_local_ops; ++j) {
        int v = adjust ? result.table.at(j, 0, r, 0) : result.table.at(0, j, r, 0);
        row.cells.push_back({"ops=" + std::to_string(j),
                             v == kInfeasible ? std::nullopt : std::optional<int>(v)});
      }
      rows.push_back(row);
    }
    out << format_report_table(rows);
    if (!args.output.empty()) {
      std::ofstream f(args.output);
      if (!f) throw Error(Errc::Parse, "cannot write report file " + args.output);
      f << args.op << "_budget,pruned,errors\n";
      for (int j = 0; j <= args.max_local_ops; ++j)
        for (int r = 0; r <= args.max_prune; ++r) {
          int v = adjust ? result.table.at(j, 0, r, 0) : result.table.at(0, j, r, 0);
          f << j << "," << r << ",";
          if (v != kInfeasible) f << v;
          f << "\n";
        }
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

namespace {

std::vector<std::vector<int>> parse_sets(const std::string& text) {
  std::vector<std::vector<int>> sets;
  std::stringstream groups(text);
  std::string group;
  while (std::getline(groups, group, ';')) {
    std::vector<int> set;
    std::stringstream elems(group);
    std::string e;
    while (std::getline(elems, e, ',')) {
      if (e.empty()) continue;
      try {
        set.push_back(std::stoi(e));
      } catch (const std::exception&) {
        throw Error(Errc::Validation, "cannot parse set element '" + e + "'");
      }
    }
    if (!set.empty()) sets.push_back(set);
  }
  return sets;
}

}  // namespace

int run_generate(const GenerateArgs& args) {
  std::ostream& out = *args.out;
  std::ostream& err = *args.err;
  try {
    fs::create_directories(args.output_dir);
    std::string stem = args.name.empty() ? args.kind : args.name;
    auto path_for = [&](const std::string& suffix) {
      return (fs::path(args.output_dir) / (stem + suffix)).string();
    };

    nlohmann::json instance_doc;
    nlohmann::json provenance;
    const std::vector<std::string> plain_classes{"blue", "red"};

    if (args.kind == "hitting-set") {
      HittingSetInstance hs{args.universe, parse_sets(args.sets), args.kappa};
      GeneratedInstance gen = hitting_set_to_ta(hs);
      const Dataset& data = gen.instance.dataset();
      save_dataset_csv(data, plain_classes, path_for(".csv"));
      save_tree(gen.instance.tree(), path_for(".tree.json"), nlohmann::json::object(),
                &data.feature_names());
      instance_doc = {{"problem", "adjust"},
                      {"k", gen.instance.k()},
                      {"t", 0},
                      {"dataset", stem + ".csv"},
                      {"tree", stem + ".tree.json"}};
      for (const auto& [key, value] : gen.provenance) provenance[key] = value;
      nlohmann::json sets = nlohmann::json::array();
      for (const auto& s : hs.sets) sets.push_back(s);
      provenance["sets"] = sets;
      nlohmann::json cuts = nlohmann::json::object();
      for (size_t i = 0; i < gen.cut_for_element.size(); ++i)
        cuts[std::to_string(i + 1)] = gen.cut_for_element[i];
      provenance["cut_for_element"] = cuts;
    } else if (args.kind == "ta-to-ce") {
      if (!args.t) throw Error(Errc::Validation, "ta-to-ce needs the source --t");
      LoadedInstance in = load_inputs(args.dataset_path, args.tree_path, args.load_options);
      LocalSearchInstance ta(in.dataset.data, in.tree, ProblemKind::Adjust, args.k, args.t);
      TaToCeResult res = ta_to_ce(ta);
      const Dataset& data = res.instance.dataset();
      save_dataset_csv(data, in.dataset.class_names, path_for(".csv"));
      save_tree(res.instance.tree(), path_for(".tree.json"), nlohmann::json::object(),
                &data.feature_names());
      instance_doc = {{"problem", "exchange"},
                      {"k", res.instance.k()},
                      {"t", *args.t},
                      {"dataset", stem + ".csv"},
                      {"tree", stem + ".tree.json"}};
      provenance["kind"] = "ta-to-ce";
      provenance["source_dataset"] = args.dataset_path;
      provenance["source_tree"] = args.tree_path;
      provenance["source_k"] = args.k;
      provenance["original_cuts"] = res.original_cuts;
    } else if (args.kind == "random") {
      RandomBounds bounds;
      bounds.n_max = args.n_max;
      bounds.n_min = std::min(bounds.n_min, args.n_max);
      bounds.d_max = args.d_max;
      bounds.domain_max = args.domain_max;
      bounds.s_max = args.s_max;
      bounds.s_min = std::min(0, args.s_max);
      bounds.reasonable = true;
      RandomInstance inst = random_instance(args.seed, bounds);
      save_dataset_csv(inst.data, plain_classes, path_for(".csv"));
      save_tree(inst.tree, path_for(".tree.json"), nlohmann::json::object(),
                &inst.data.feature_names());
      instance_doc = {{"problem", "adjust"},
                      {"k", 1},
                      {"dataset", stem + ".csv"},
                      {"tree", stem + ".tree.json"}};
      provenance["kind"] = "random";
      provenance["seed"] = args.seed;
    } else {
      throw Error(Errc::Validation, "unknown generator kind '" + args.kind + "'");
    }

    save_json(instance_doc, path_for(".instance.json"));
    save_json(provenance, path_for(".provenance.json"));
    out << "wrote " << path_for(".csv") << ", " << path_for(".tree.json") << ", "
        << path_for(".instance.json") << ", " << path_for(".provenance.json") << "\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int run_convert(const ConvertArgs& args) {
  std::ostream& err = *args.err;
  try {
    LoadedDataset dataset = load_dataset(args.dataset_path, args.load_options);
    std::ifstream f(args.input);
    if (!f) throw Error(Errc::Parse, "cannot open tree file " + args.input);
    std::stringstream buf;
    buf << f.rdbuf();
    DecisionTree tree =
        import_weka_j48(buf.str(), dataset.data.feature_names(), dataset.class_names);
    tree.validate(dataset.data.d());
    save_tree(tree, args.output, nlohmann::json::object(), &dataset.data.feature_names());
    *args.out << "wrote " << args.output << " (s=" << tree.num_cuts() << ")\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

int run_verify(const VerifyArgs& args) {
  std::ostream& out = *args.out;
  std::ostream& err = *args.err;
  try {
    LoadedInstance in = load_inputs(args.dataset_path, args.tree_path, args.load_options);
    EditScript script = load_script(args.script_path);

    DecisionTree edited = apply_edits(in.tree, script);
    int recomputed = count_errors(edited, in.dataset.data);
    if (script.achieved_errors >= 0 && recomputed != script.achieved_errors) {
      out << "mismatch: claimed " << script.achieved_errors << " errors, recomputed "
          << recomputed << "\n";
      return kExitMismatch;
    }

    Budgets budgets = args.budgets;
    bool check_budgets = args.has_budgets || args.k >= 0;
    if (args.k >= 0) {
      if (args.problem == "adjust")
        budgets.adjust = args.k;
      else if (args.problem == "exchange")
        budgets.exchange = args.k;
      else
        throw Error(Errc::Validation, "budget -k applies to adjust or exchange verification");
    }
    if (check_budgets && !script.within(budgets)) {
      out << "budget violation: script uses " << script.count(EditKind::Adjust)
          << " adjust, " << script.count(EditKind::Exchange) << " exchange, "
          << script.count(EditKind::Replace) << " replace, " << script.count(EditKind::Raise)
          << " raise edits\n";
      return kExitMismatch;
    }
    out << "ok: " << recomputed << " errors, " << script.edits.size() << " edit(s)\n";
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

namespace {

struct ManifestRow {
  std::string dataset;
  std::string tree;
  std::string problem;
  std::string budgets;
  std::optional<int> t;
  int line = 0;
};

std::vector<ManifestRow> load_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open manifest " + path);
  std::vector<ManifestRow> rows;
  std::string line;
  int number = 0;
  bool header = true;
  fs::path base = fs::path(path).parent_path();
  while (std::getline(in, line)) {
    ++number;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (header) {
      header = false;
      if (!cells.empty() && cells[0] == "dataset") continue;  // header row
    }
    if (cells.size() < 4)
      throw Error(Errc::Parse, path + ":" + std::to_string(number) +
                                   ": manifest rows need dataset,tree,problem,budgets[,t]");
    ManifestRow row;
    row.dataset = (base / cells[0]).string();
    row.tree = (base / cells[1]).string();
    row.problem = cells[2];
    row.budgets = cells[3];
    if (cells.size() > 4 && !cells[4].empty()) row.t = std::stoi(cells[4]);
    row.line = number;
    rows.push_back(row);
  }
  return rows;
}

Budgets parse_budgets(const std::string& text, const std::string& problem) {
  Budgets b;
  if (problem == "pls") {
    std::stringstream ss(text);
    std::string part;
    std::vector<int> parts;
    while (std::getline(ss, part, '/')) parts.push_back(std::stoi(part));
    if (parts.size() != 4)
      throw Error(Errc::Validation, "pls budgets must be ad/ex/re/ra, got '" + text + "'");
    b.adjust = parts[0];
    b.exchange = parts[1];
    b.replace = parts[2];
    b.raise = parts[3];
  } else {
    int k = std::stoi(text);
    (problem == "exchange" ? b.exchange : b.adjust) = k;
  }
  return b;
}

}  // namespace

int run_bench(const BenchArgs& args) {
  std::ostream& out = *args.out;
  std::ostream& err = *args.err;
  try {
    std::vector<ManifestRow> manifest = load_manifest(args.manifest_path);
    std::vector<ReportRow> rows(manifest.size());

    std::mutex next_mutex;
    size_t next = 0;
    auto worker = [&]() {
      while (true) {
        size_t index;
        {
          std::lock_guard<std::mutex> lock(next_mutex);
          if (next >= manifest.size()) return;
          index = next++;
        }
        const ManifestRow& m = manifest[index];
        ReportRow row;
        row.name = fs::path(m.dataset).stem().string();
        auto started = std::chrono::steady_clock::now();
        try {
          DatasetLoadOptions options;
          LoadedInstance in = load_inputs(m.dataset, m.tree, options);
          Deadline deadline = deadline_from(args.time_limit);
          row.initial = count_errors(in.tree, in.dataset.data);
          Budgets budgets = parse_budgets(m.budgets, m.problem);
          if (m.problem == "adjust" || m.problem == "exchange") {
            LocalSearchInstance instance(
                in.dataset.data, in.tree,
                m.problem == "adjust" ? ProblemKind::Adjust : ProblemKind::Exchange,
                m.problem == "adjust" ? budgets.adjust : budgets.exchange, m.t);
            SolveResult result = solve_single_op_dp(instance, deadline);
            for (size_t j = 0; j < result.errors_by_budget.size(); ++j)
              row.cells.push_back(
                  {"k=" + std::to_string(j), result.errors_by_budget[j]});
          } else if (m.problem == "pls") {
            LocalSearchInstance instance(in.dataset.data, in.tree, budgets, m.t);
            PlsResult result = solve_pls_dp(instance, deadline);
            int v = result.table.at(budgets.adjust, budgets.exchange, budgets.replace,
                                    budgets.raise);
            row.cells.push_back(
                {"caps", v == kInfeasible ? std::nullopt : std::optional<int>(v)});
          } else {
            throw Error(Errc::Validation,
                        "manifest line " + std::to_string(m.line) + ": unknown problem '" +
                            m.problem + "'");
          }
        } catch (const Error& e) {
          if (e.code() == Errc::Timeout) {
            row.timed_out = true;
            row.note = "timeout";
          } else {
            row.note = e.what();
          }
        } catch (const std::exception& e) {
          row.note = e.what();
        }
        row.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        rows[index] = std::move(row);
      }
    };

    int workers = std::max(1, args.workers);
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    out << format_report_table(rows);
    if (!args.output.empty()) {
      std::ofstream f(args.output);
      if (!f) throw Error(Errc::Parse, "cannot write report file " + args.output);
      write_report_csv(rows, f);
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
}

}  // namespace cli
}  // namespace dtls
