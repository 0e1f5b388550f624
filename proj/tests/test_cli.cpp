#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dtls/cli.hpp"
#include "dtls/tree_io.hpp"
#include "fixtures.hpp"

using namespace dtls;
using namespace dtls::test;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("dtls_cli_test_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int& counter() {
    static int n = 0;
    return n;
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  REQUIRE(out);
  out << content;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int run(const std::string& args) {
  std::string cmd = std::string(DTLS_CLI_BIN) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

const char* kF3Csv = "f1,target\n1,blue\n2,red\n3,red\n";
const char* kF1Csv = "f1,target\n1,blue\n2,red\n3,blue\n";

std::string f1_tree_json() { return write_tree(f1_tree()).dump(); }

}  // namespace

TEST_CASE("solve adjust reports the errors-by-budget curve") {
  TempDir dir;
  write_file(dir.file("data.csv"), kF3Csv);
  write_file(dir.file("tree.json"), f1_tree_json());

  cli::SolveArgs args;
  args.dataset_path = dir.file("data.csv");
  args.tree_path = dir.file("tree.json");
  args.problem = "adjust";
  args.k = 1;
  args.algorithm = "dp";
  args.output = dir.file("report.csv");
  args.script_out = dir.file("script.json");
  args.tree_out = dir.file("out.json");
  std::ostringstream out, err;
  args.out = &out;
  args.err = &err;
  CHECK(cli::run_solve(args) == cli::kExitOk);
  CHECK(out.str().find("initial errors: 2") != std::string::npos);
  CHECK(out.str().find("k=0: 1") != std::string::npos);
  CHECK(out.str().find("k=1: 0") != std::string::npos);

  std::string csv = read_file(dir.file("report.csv"));
  CHECK(csv.find("k=0") != std::string::npos);
  CHECK(csv.find("data,2,1,0,") != std::string::npos);

  // The emitted script verifies cleanly against the same instance.
  cli::VerifyArgs verify;
  verify.dataset_path = args.dataset_path;
  verify.tree_path = args.tree_path;
  verify.script_path = dir.file("script.json");
  verify.problem = "adjust";
  verify.k = 1;
  std::ostringstream vout, verr;
  verify.out = &vout;
  verify.err = &verr;
  CHECK(cli::run_verify(verify) == cli::kExitOk);

  // Tampering with the claimed error count is caught.
  EditScript tampered = read_script(load_json(dir.file("script.json")));
  tampered.achieved_errors = 99;
  save_script(tampered, dir.file("tampered.json"));
  verify.script_path = dir.file("tampered.json");
  CHECK(cli::run_verify(verify) == cli::kExitMismatch);

  // A script over budget is caught too.
  EditScript over;
  over.edits.push_back({0, EditKind::Adjust, -1, 1.0, kNoNode});
  over.edits.push_back({0, EditKind::Adjust, -1, 2.0, kNoNode});
  save_script(over, dir.file("over.json"));
  verify.script_path = dir.file("over.json");
  CHECK(cli::run_verify(verify) == cli::kExitMismatch);
}

TEST_CASE("solve pls with zero budgets reports the majority errors") {
  TempDir dir;
  write_file(dir.file("data.csv"), kF1Csv);
  write_file(dir.file("tree.json"), f1_tree_json());

  cli::SolveArgs args;
  args.dataset_path = dir.file("data.csv");
  args.tree_path = dir.file("tree.json");
  args.problem = "pls";
  std::ostringstream out, err;
  args.out = &out;
  args.err = &err;
  CHECK(cli::run_solve(args) == cli::kExitOk);
  CHECK(out.str().find("(ad=0, ex=0, re=0, ra=0): 1") != std::string::npos);
}

TEST_CASE("solve exit codes") {
  TempDir dir;
  write_file(dir.file("data.csv"), kF3Csv);
  write_file(dir.file("tree.json"), f1_tree_json());
  write_file(dir.file("bad.csv"), "f1,target\nx,blue\n");

  std::string base = "solve --dataset " + dir.file("data.csv") + " --tree " +
                     dir.file("tree.json") + " --problem adjust -k 1";
  CHECK(run(base) == cli::kExitOk);
  CHECK(run("solve --dataset " + dir.file("bad.csv") + " --tree " + dir.file("tree.json") +
            " --problem adjust -k 1") == cli::kExitInput);
  CHECK(run(base + " --algorithm oracle --oracle-cap 1") == cli::kExitCapacity);
  CHECK(run(base + " --time-limit 0.000001") == cli::kExitTimeout);
  CHECK(run("solve --dataset " + dir.file("data.csv") + " --tree " + dir.file("missing.json") +
            " --problem adjust -k 1") == cli::kExitInput);
}

TEST_CASE("fixed-structure solve modes") {
  TempDir dir;
  write_file(dir.file("data.csv"), "f1,f2,target\n1,1,blue\n2,1,red\n");
  write_file(dir.file("shape.json"), f1_tree_json());

  cli::SolveArgs args;
  args.dataset_path = dir.file("data.csv");
  args.tree_path = dir.file("shape.json");
  args.problem = "fs-dt";
  args.t = 0;
  args.algorithm = "dp";
  std::ostringstream out, err;
  args.out = &out;
  args.err = &err;
  CHECK(cli::run_solve(args) == cli::kExitOk);
  CHECK(out.str().find("decision: feasible at t=0") != std::string::npos);

  // Fixing the feature map to f2 makes t=0 unreachable.
  DecisionTree f2_shape({Node::cut(1, 0, 1, 2), Node::leaf(Label::Blue),
                         Node::leaf(Label::Red)},
                        0);
  write_file(dir.file("shape2.json"), write_tree(f2_shape).dump());
  args.tree_path = dir.file("shape2.json");
  args.problem = "fsff-dt";
  std::ostringstream out2;
  args.out = &out2;
  CHECK(cli::run_solve(args) == cli::kExitOk);
  CHECK(out2.str().find("decision: infeasible at t=0") != std::string::npos);
}

TEST_CASE("pareto emits the trade-off grid") {
  TempDir dir;
  write_file(dir.file("data.csv"), kF1Csv);
  write_file(dir.file("tree.json"), f1_tree_json());

  cli::ParetoArgs args;
  args.dataset_path = dir.file("data.csv");
  args.tree_path = dir.file("tree.json");
  args.op = "adjust";
  args.max_local_ops = 1;
  args.max_prune = 1;
  args.output = dir.file("pareto.csv");
  std::ostringstream out, err;
  args.out = &out;
  args.err = &err;
  CHECK(cli::run_pareto(args) == cli::kExitOk);

  std::string csv = read_file(dir.file("pareto.csv"));
  // Frozen grid: one unavoidable error everywhere on this fixture.
  CHECK(csv.find("0,0,1") != std::string::npos);
  CHECK(csv.find("1,0,1") != std::string::npos);
  CHECK(csv.find("0,1,1") != std::string::npos);
  CHECK(csv.find("1,1,1") != std::string::npos);
}

TEST_CASE("generate hitting-set emits a solvable instance with provenance") {
  TempDir dir;
  cli::GenerateArgs args;
  args.kind = "hitting-set";
  args.universe = 3;
  args.sets = "1,2;3";
  args.kappa = 2;
  args.output_dir = dir.path.string();
  args.name = "hs";
  std::ostringstream out, err;
  args.out = &out;
  args.err = &err;
  CHECK(cli::run_generate(args) == cli::kExitOk);

  // The generated instance is feasible at k=2, t=0 ({1,3} hits both sets).
  cli::SolveArgs solve;
  solve.dataset_path = dir.file("hs.csv");
  solve.tree_path = dir.file("hs.tree.json");
  solve.problem = "adjust";
  solve.k = 2;
  solve.t = 0;
  solve.algorithm = "dp";
  std::ostringstream sout, serr;
  solve.out = &sout;
  solve.err = &serr;
  CHECK(cli::run_solve(solve) == cli::kExitOk);
  CHECK(sout.str().find("decision: feasible at t=0") != std::string::npos);

  auto prov = load_json(dir.file("hs.provenance.json"));
  CHECK(prov["kind"] == "hitting-set");
  CHECK(prov["cut_for_element"].size() == 3);
}

TEST_CASE("generate is deterministic for a fixed seed") {
  TempDir dir;
  cli::GenerateArgs args;
  args.kind = "random";
  args.seed = 99;
  args.output_dir = (dir.path / "a").string();
  std::ostringstream out, err;
  args.out = &out;
  args.err = &err;
  CHECK(cli::run_generate(args) == cli::kExitOk);
  args.output_dir = (dir.path / "b").string();
  CHECK(cli::run_generate(args) == cli::kExitOk);
  for (const char* name : {"random.csv", "random.tree.json", "random.instance.json",
                           "random.provenance.json"}) {
    CHECK(read_file((dir.path / "a" / name).string()) ==
          read_file((dir.path / "b" / name).string()));
  }
}

TEST_CASE("convert imports a j48 dump") {
  TempDir dir;
  write_file(dir.file("data.csv"), kF1Csv);
  write_file(dir.file("dump.txt"), "f1 <= 5: blue (2.0)\nf1 > 5: red (1.0)\n");

  cli::ConvertArgs args;
  args.dataset_path = dir.file("data.csv");
  args.input = dir.file("dump.txt");
  args.output = dir.file("tree.json");
  std::ostringstream out, err;
  args.out = &out;
  args.err = &err;
  CHECK(cli::run_convert(args) == cli::kExitOk);
  std::vector<std::string> names{"f1"};
  TreeDocument doc = load_tree(dir.file("tree.json"), &names);
  CHECK(doc.tree.num_cuts() == 1);
  CHECK(doc.tree.node(doc.tree.root()).threshold == 5.0);
}

TEST_CASE("bench runs every manifest row and keeps order") {
  TempDir dir;
  write_file(dir.file("a.csv"), kF3Csv);
  write_file(dir.file("b.csv"), kF1Csv);
  write_file(dir.file("tree.json"), f1_tree_json());
  write_file(dir.file("manifest.csv"),
             "dataset,tree,problem,budgets,t\n"
             "a.csv,tree.json,adjust,1,\n"
             "b.csv,tree.json,exchange,1,\n"
             "missing.csv,tree.json,adjust,1,\n");

  cli::BenchArgs args;
  args.manifest_path = dir.file("manifest.csv");
  args.output = dir.file("report.csv");
  args.workers = 2;
  std::ostringstream out, err;
  args.out = &out;
  args.err = &err;
  CHECK(cli::run_bench(args) == cli::kExitOk);

  std::string csv = read_file(dir.file("report.csv"));
  auto a_at = csv.find("\na,");
  auto b_at = csv.find("\nb,");
  auto missing_at = csv.find("\nmissing,");
  REQUIRE(a_at != std::string::npos);
  REQUIRE(b_at != std::string::npos);
  REQUIRE(missing_at != std::string::npos);
  CHECK(a_at < b_at);
  CHECK(b_at < missing_at);  // failed rows still appear, in manifest order
}

TEST_CASE("bench with a zero-ish time limit marks rows as timeouts") {
  TempDir dir;
  write_file(dir.file("a.csv"), kF3Csv);
  write_file(dir.file("tree.json"), f1_tree_json());
  write_file(dir.file("manifest.csv"), "dataset,tree,problem,budgets,t\na.csv,tree.json,adjust,1,\n");

  cli::BenchArgs args;
  args.manifest_path = dir.file("manifest.csv");
  args.output = dir.file("report.csv");
  args.time_limit = 1e-9;
  std::ostringstream out, err;
  args.out = &out;
  args.err = &err;
  CHECK(cli::run_bench(args) == cli::kExitOk);
  CHECK(read_file(dir.file("report.csv")).find("timeout") != std::string::npos);
}

TEST_CASE("auto algorithm selection is logged and defaults to dp") {
  TempDir dir;
  write_file(dir.file("data.csv"), kF3Csv);
  write_file(dir.file("tree.json"), f1_tree_json());

  cli::SolveArgs args;
  args.dataset_path = dir.file("data.csv");
  args.tree_path = dir.file("tree.json");
  args.problem = "adjust";
  args.k = 1;
  args.t = 0;
  args.algorithm = "auto";
  std::ostringstream out, err;
  args.out = &out;
  args.err = &err;
  CHECK(cli::run_solve(args) == cli::kExitOk);
  CHECK(err.str().find("[auto] chose dp") != std::string::npos);
  CHECK(out.str().find("decision: feasible at t=0") != std::string::npos);
}

TEST_CASE("binary smoke: subcommands are wired") {
  TempDir dir;
  write_file(dir.file("data.csv"), kF3Csv);
  write_file(dir.file("tree.json"), f1_tree_json());
  CHECK(run("solve --dataset " + dir.file("data.csv") + " --tree " + dir.file("tree.json") +
            " --problem adjust -k 1 --t 0 --algorithm subset") == cli::kExitOk);
  CHECK(run("--help") == cli::kExitOk);
}
