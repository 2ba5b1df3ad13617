#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "commands.hpp"
#include "test_support.hpp"

using namespace cpsdlab;
using namespace cpsdlab::cli;
namespace fs = std::filesystem;

namespace {

struct ProcessResult {
  int exit_code = -1;
  std::string out;
};

class CliBinary : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("cpsdlab_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) const {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  // Runs the executable; stdout is captured, stderr goes to a file.
  ProcessResult run(const std::string& args) const {
    const std::string cmd = std::string(CPSDLAB_CLI_PATH) + " " + args + " 2>" + (dir_ / "stderr").string();
    ProcessResult r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    const int status = ::pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  std::string stderr_text() const {
    std::ifstream in(dir_ / "stderr");
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

Json matrix_input(const RealMatrix& m) { return to_json(m); }

}  // namespace

TEST(Commands, GenerateShapes) {
  const CommandResult exp = cmd_generate("exp-family", {1, 0, 0});
  ASSERT_EQ(exp.status, Status::Ok) << exp.message;
  EXPECT_EQ(exp.payload["correlation"]["n"], 3);
  EXPECT_EQ(exp.payload["behavior"]["n"], 6);

  const CommandResult odd = cmd_generate("odd-cycle-dnn", {0, 0, 2});
  ASSERT_EQ(odd.status, Status::Ok);
  EXPECT_EQ(odd.payload["matrix"]["n"], 5);
  EXPECT_TRUE(odd.payload["not_vna_certificate"]["valid"].get<bool>());

  EXPECT_EQ(cmd_generate("elliptope-extreme", {3, 5, 0}).status, Status::InvalidInput);
  EXPECT_EQ(cmd_generate("elliptope-extreme", {6, 3, 0}).payload["extreme"], true);
  EXPECT_EQ(cmd_generate("cycle-sep", {6, 0, 0}).payload["not_cp_certificate"]["valid"], true);
  EXPECT_EQ(cmd_generate("eij-gram", {0, 3, 0}).payload["rank"], 3);
  EXPECT_EQ(cmd_generate("exp-family", {13, 0, 0}).status, Status::CapExceeded);
  EXPECT_EQ(cmd_generate("bogus", {}).status, Status::InvalidInput);
}

TEST(Commands, FactorizeGeneratedFamilies) {
  const CommandResult cyc = cmd_factorize(cmd_generate("cycle-sep", {6, 0, 0}).to_json());
  ASSERT_EQ(cyc.status, Status::Ok) << cyc.message;
  EXPECT_EQ(cyc.payload["d"], 2);

  const CommandResult exp = cmd_factorize(cmd_generate("exp-family", {1, 0, 0}).to_json());
  ASSERT_EQ(exp.status, Status::Ok);
  EXPECT_LE(exp.payload["d"].get<int>(), 4);

  RealMatrix two(2, 2);
  two << 2, 1, 1, 3;
  const CommandResult gl2 = cmd_factorize(matrix_input(two));
  ASSERT_EQ(gl2.status, Status::Ok);
  EXPECT_LE(gl2.payload["d"].get<int>(), 2);

  EXPECT_EQ(cmd_factorize(matrix_input(RealMatrix::Identity(3, 3))).status, Status::InvalidInput);
}

TEST(Commands, EmittedFactorizationsReverify) {
  for (const char* kind : {"cycle-sep", "exp-family"}) {
    const int n = std::string(kind) == "cycle-sep" ? 10 : 2;
    const CommandResult r = cmd_factorize(cmd_generate(kind, {n, 0, 0}).to_json());
    const Json reloaded = parse_json(dump_json(r.to_json()));
    const CpsdFactorization f = factorization_from_json(reloaded["payload"]["factorization"]);
    const RealMatrix x = real_matrix_from_json(reloaded["payload"]["matrix"]);
    EXPECT_TRUE(verify_factorization(x, f).ok) << kind;
  }
  const CommandResult eij = cmd_generate("eij-gram", {0, 4, 0});
  const Json reloaded = parse_json(dump_json(eij.to_json()));
  EXPECT_TRUE(verify_factorization(real_matrix_from_json(reloaded["payload"]["matrix"]),
                                   factorization_from_json(reloaded["payload"]["factorization"]))
                  .ok);
}

TEST(Commands, BoundReports) {
  const CommandResult id = cmd_bound(matrix_input(RealMatrix::Identity(5, 5)), {});
  EXPECT_EQ(id.payload["bounds"]["lower_combined_int"], 5);

  BoundOptions opts;
  opts.verify = Json{{"factorization", to_json(CpsdFactorization(testing_support::example_five_factors()))}};
  const CommandResult ex = cmd_bound(matrix_input(testing_support::example_five_matrix()), opts);
  ASSERT_EQ(ex.status, Status::Ok) << ex.message;
  EXPECT_EQ(ex.payload["bounds"]["lower_combined_int"], 3);
  EXPECT_EQ(ex.payload["bounds"]["lower_rank"], 2.0);
  EXPECT_EQ(ex.payload["bounds"]["upper"], 4);

  RealMatrix wrong = testing_support::example_five_matrix();
  wrong(0, 0) = 3;
  const CommandResult bad = cmd_bound(matrix_input(wrong), opts);
  EXPECT_EQ(bad.status, Status::VerificationFailed);
  EXPECT_EQ(bad.exit_code(), 4);
  ASSERT_TRUE(bad.max_residual.has_value());
  EXPECT_NEAR(*bad.max_residual, 1.0, 1e-12);

  BoundOptions graph;
  graph.graph = true;
  const CommandResult g = cmd_bound(cmd_generate("odd-cycle-dnn", {0, 0, 2}).to_json(), graph);
  EXPECT_EQ(g.payload["graph"]["cpsd_graph"], false);
  EXPECT_EQ(g.payload["graph"]["witness"], Json::parse("[0, 1, 2, 3, 4]"));
}

TEST(Commands, BehaviorPipeline) {
  BehaviorOptions opts{true, true};
  const CommandResult r = cmd_behavior(cmd_generate("exp-family", {1, 0, 0}).to_json()["payload"]["correlation"], opts);
  ASSERT_EQ(r.status, Status::Ok) << r.message;
  EXPECT_LT(r.payload["simulation"]["max_deviation"].get<double>(), 1e-9);
  EXPECT_TRUE(r.payload["affine_section_valid"].get<bool>());
  EXPECT_EQ(r.payload["bounds"]["dimension_status"], "certified");

  const CommandResult zero = cmd_behavior(matrix_input(RealMatrix::Zero(2, 2)), opts);
  ASSERT_EQ(zero.status, Status::Ok) << zero.message;
  for (const auto& v : zero.payload["behavior"]["table"].flatten()) EXPECT_DOUBLE_EQ(v.get<double>(), 0.25);

  RealMatrix not_psd(2, 2);
  not_psd << 1, 1, 1, -1;
  EXPECT_EQ(cmd_behavior(matrix_input(not_psd), {}).status, Status::InvalidInput);
}

TEST(Commands, GraphExamples) {
  EXPECT_EQ(cmd_graph(to_json(Graph::cycle(5))).payload["witness"], Json::parse("[0, 1, 2, 3, 4]"));
  EXPECT_EQ(cmd_graph(to_json(Graph(4, {{0, 1}, {1, 2}, {2, 3}}))).payload["cpsd_graph"], true);
  EXPECT_EQ(cmd_graph(to_json(Graph::cycle(6))).payload["cpsd_graph"], true);
}

TEST_F(CliBinary, DeterministicOutput) {
  const std::string in = write("c.json", dump_json(cmd_generate("exp-family", {2, 0, 0}).to_json()["payload"]["correlation"]));
  const ProcessResult a = run("behavior " + in + " --simulate --validate");
  const ProcessResult b = run("behavior " + in + " --simulate --validate");
  EXPECT_EQ(a.exit_code, 0) << stderr_text();
  EXPECT_FALSE(a.out.empty());
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run("generate cycle-sep --n 10").out, run("generate cycle-sep --n 10").out);
}

TEST_F(CliBinary, OutFileRoundTripsThroughBound) {
  const std::string fact = (dir_ / "f.json").string();
  ASSERT_EQ(run("generate eij-gram --r 3 --out " + fact).exit_code, 0) << stderr_text();
  const ProcessResult r = run("bound " + fact + " --verify " + fact + " --scale-search --graph");
  ASSERT_EQ(r.exit_code, 0) << stderr_text();
  const Json j = parse_json(r.out);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["payload"]["bounds"]["upper"], 3);
  EXPECT_TRUE(j["payload"]["verify"]["ok"].get<bool>());
}

TEST_F(CliBinary, ExitCodes) {
  EXPECT_EQ(run("generate elliptope-extreme --n 3 --r 5").exit_code, 2);
  EXPECT_EQ(parse_json(stderr_text())["status"], "invalid-input");
  EXPECT_EQ(run("generate exp-family --n 13").exit_code, 3);
  EXPECT_EQ(parse_json(stderr_text())["status"], "cap-exceeded");

  const std::string m = write("m.json", dump_json(to_json(testing_support::example_five_matrix())));
  RealMatrix other = testing_support::example_five_matrix();
  other(1, 1) = 2.5;
  const std::string wrong = write("w.json", dump_json(to_json(other)));
  const std::string f = write("f.json", dump_json(to_json(CpsdFactorization(testing_support::example_five_factors()))));
  EXPECT_EQ(run("bound " + m + " --verify " + f).exit_code, 0) << stderr_text();
  EXPECT_EQ(run("bound " + wrong + " --verify " + f).exit_code, 4);
  const Json err = parse_json(stderr_text());
  EXPECT_EQ(err["status"], "verification-failed");
  EXPECT_TRUE(err.contains("max_residual"));

  EXPECT_EQ(run("graph " + write("bad.json", "{nope")).exit_code, 2);
  EXPECT_EQ(run("graph /nonexistent/file.json").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
}
