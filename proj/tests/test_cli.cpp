#include "hsinscribe/io.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + HS_INSCRIBE_BIN + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string corpus(const std::string& name) { return std::string(HS_CORPUS_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& body) {
  auto p = std::filesystem::temp_directory_path() / ("hs_cli_" + std::to_string(::getpid()) + "_" + name);
  std::ofstream(p) << body;
  return p.string();
}

hs::io::Json json_of(const Run& r) { return hs::io::Json::parse(r.out); }

}  // namespace

TEST(Cli, VerifyPyramid) {
  auto r = run("verify " + corpus("pyramid_1_4.json"));
  EXPECT_EQ(r.code, 0);
  auto j = json_of(r);
  EXPECT_EQ(j["exit_status"], 0);
  EXPECT_NEAR(j["blue_sum"].get<double>(), -2 * hs::kPi, 1e-9);
}

TEST(Cli, VerifyRandom) { EXPECT_EQ(run("verify " + corpus("random_3_4.json")).code, 0); }

TEST(Cli, CheckGraphExamples) {
  EXPECT_EQ(run("check-graph " + corpus("wheel4.json")).code, 0);
  auto cube = run("check-graph " + corpus("cube_matching.json"));
  EXPECT_EQ(cube.code, 0);
  auto j = json_of(cube);
  EXPECT_TRUE(j.contains("weights"));
  auto nested = run("check-graph " + corpus("nested_squares_reconstruction.json"));
  EXPECT_EQ(nested.code, 1);
  auto k = json_of(nested);
  EXPECT_FALSE(k["lp"]["feasible"].get<bool>());
  EXPECT_TRUE(k["lp"]["certificate_verified"].get<bool>());
  EXPECT_TRUE(k.contains("note"));
  EXPECT_EQ(run("check-graph " + corpus("not_polyhedral.json")).code, 1);
}

TEST(Cli, Horogon) {
  EXPECT_EQ(run("horogon " + corpus("horogon_2gon.json")).code, 0);
  auto r = run("horogon --deform 0.5 " + corpus("horogon_5gon.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_LT(json_of(r)["cone_angle"].get<double>(), 2 * hs::kPi);
}

TEST(Cli, GenerateThenVerify) {
  auto g = run("generate 2 3 1.6");
  ASSERT_EQ(g.code, 0);
  auto path = temp_file("gen.json", g.out);
  EXPECT_EQ(run("verify " + path).code, 0);
  EXPECT_EQ(run("generate 1 2 2.0").code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, GenerateSeededIsDeterministic) {
  EXPECT_EQ(run("--seed 9 generate 3 4 2.0").out, run("--seed 9 generate 3 4 2.0").out);
}

TEST(Cli, OffQuadricVertex) {
  auto path = temp_file("off.json", R"({"vertices":[{"sheet":"+","u0":0,"u1":0,"x2":1.001},
    {"sheet":"-","u0":1,"u1":0},{"sheet":"-","u0":-0.5,"u1":0.8},{"sheet":"-","u0":-0.5,"u1":-0.8}]})");
  auto r = run("verify " + path);
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json_of(r)["error"], "NotOnQuadric");
  std::filesystem::remove(path);
}

TEST(Cli, MalformedInputs) {
  auto path = temp_file("bad.json", "{ not json");
  EXPECT_EQ(run("verify " + path).code, 2);
  EXPECT_EQ(run("check-graph " + path).code, 2);
  EXPECT_EQ(run("horogon " + path).code, 2);
  std::filesystem::remove(path);
  EXPECT_EQ(run("verify /nonexistent/file.json").code, 2);
  EXPECT_EQ(run("frobnicate x").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("--format yaml verify " + corpus("pyramid_1_4.json")).code, 2);
}

TEST(Cli, ToleranceSources) {
  auto def = json_of(run("verify " + corpus("pyramid_1_4.json")));
  EXPECT_EQ(def["tol"].get<double>(), 1e-9);
  auto env = json_of(run("verify " + corpus("pyramid_1_4.json"), "HS_INSCRIBE_TOL=1e-7"));
  EXPECT_EQ(env["tol"].get<double>(), 1e-7);
  auto flag = json_of(run("--tol 1e-6 verify " + corpus("pyramid_1_4.json"), "HS_INSCRIBE_TOL=1e-7"));
  EXPECT_EQ(flag["tol"].get<double>(), 1e-6);
  EXPECT_EQ(run("verify " + corpus("pyramid_1_4.json"), "HS_INSCRIBE_TOL=abc").code, 2);
  EXPECT_EQ(run("--tol -1 verify " + corpus("pyramid_1_4.json")).code, 2);
}

TEST(Cli, TextFormat) {
  auto r = run("--format text verify " + corpus("pyramid_1_4.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("PASS A2"), std::string::npos);
}

TEST(Cli, CorpusRunAll) {
  auto a = run("corpus --run-all");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, run("corpus --run-all").out);
  EXPECT_EQ(run("corpus").code, 2);
}

TEST(Cli, CorpusMutationIsCaught) {
  auto r = run("corpus --run-all --mutate angle-sign");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json_of(r)["mutation"], "angle-sign");
}
