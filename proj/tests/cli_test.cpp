#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <nlohmann/json.hpp>

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(GIN_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  char buf[4096];
  for (std::size_t k; (k = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, k);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json json_of(const Run& r) { return nlohmann::json::parse(r.out); }

std::filesystem::path scratch(const std::string& name, const std::string& content = "") {
  auto p = std::filesystem::temp_directory_path() / ("gin_cli_" + std::to_string(::getpid()) + "_" + name);
  if (!content.empty()) std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST(Cli, Froeberg) {
  auto r = run("froeberg -n 3 -d 2,2 --horizon 4");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["coeffs"], nlohmann::json::parse("[1,3,4,4,4]"));
  EXPECT_EQ(json_of(run("froeberg -n 2 -d 2,2,2 --horizon 4"))["coeffs"], nlohmann::json::parse("[1,2,0,0,0]"));
}

TEST(Cli, GinIsByteIdenticalForAFixedSeed) {
  auto a = run("gin -n 3 -d 2,2 --order lex --seed 5");
  auto b = run("gin -n 3 -d 2,2 --order lex --seed 5");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json_of(a)["ideal"]["gens"], nlohmann::json::parse("[[2,0,0],[1,1,0],[1,0,2],[0,4,0]]"));
}

TEST(Cli, GinParametric) {
  auto r = run("gin -n 2 -d 2,2 --order lex --route parametric");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["ideal"]["gens"], nlohmann::json::parse("[[2,0],[1,1],[0,3]]"));
  EXPECT_EQ(json_of(r)["route"], "parametric");
}

TEST(Cli, BudgetExhaustedExitsOne) {
  EXPECT_EQ(run("gin -n 3 -d 2,2 --route parametric --max-pairs 2").code, 1);
}

TEST(Cli, BoundAndLexseg) {
  auto r = run("bound -n 3 -d 2,2");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "4\n");
  auto hf = scratch("hf.json", R"({"coeffs":[1,3,3,1,0,0,0,0]})");
  auto l = run("lexseg -n 3 --hf " + hf.string());
  ASSERT_EQ(l.code, 0);
  EXPECT_EQ(json_of(l)["ideal"]["gens"].size(), 7u);
  auto bad = scratch("bad.json", R"({"coeffs":[1,1,3]})");
  EXPECT_EQ(run("lexseg -n 2 --hf " + bad.string()).code, 1);
  std::filesystem::remove(hf);
  std::filesystem::remove(bad);
}

TEST(Cli, CheckAndHilbert) {
  auto f = scratch("ideal.json", R"({"n":4,"gens":[[2,0,0,0],[1,1,0,0],[1,0,2,0],[0,4,0,0]]})");
  auto r = run("check " + f.string() + " --property lexsegment");
  ASSERT_EQ(r.code, 0);
  auto j = json_of(r);
  EXPECT_FALSE(j["holds"].get<bool>());
  EXPECT_EQ(j["witness"]["missing"], nlohmann::json::parse("[1,0,1,2]"));
  auto borel = json_of(run("check " + f.string() + " --property borel -p 2"));
  EXPECT_EQ(borel["characteristic"], 2);
  EXPECT_TRUE(borel["holds"].get<bool>());
  auto h = run("hilbert " + f.string() + " --horizon 3");
  ASSERT_EQ(h.code, 0);
  EXPECT_EQ(json_of(h)["coeffs"], nlohmann::json::parse("[1,4,8,12]"));
  std::filesystem::remove(f);
}

TEST(Cli, GroebnerBasis) {
  auto f = scratch("gb.json", R"({"n":3,"polys":["x1^2 + x1*x3 + x2*x3 + x3^2", "x1^2 + x1*x2 + x1*x3 + x3^2",
                                                  "x1^2 + x1*x2 - x1*x3 + x2^2 - x2*x3 - x3^2"]})");
  auto r = run("gb " + f.string() + " --order degrevlex");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["initial_ideal"]["gens"].size(), 6u);
  std::filesystem::remove(f);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("gin -n 3").code, 2);
  EXPECT_EQ(run("gin -n 3 -d 2,x").code, 2);
  EXPECT_EQ(run("gin -n 3 -d 2,2 --order bogus").code, 2);
  EXPECT_EQ(run("check /nonexistent/file --property borel").code, 2);
  auto f = scratch("broken.json", "{not json");
  EXPECT_EQ(run("hilbert " + f.string()).code, 2);
  std::filesystem::remove(f);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, SurveyEmptyGrid) {
  auto dir = scratch("survey_empty");
  std::filesystem::remove_all(dir);
  auto r = run("survey --n 3 --s 2 --d 3..2 --out " + dir.string());
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json_of(r)["cases"], 0);
  EXPECT_EQ(std::filesystem::file_size(dir / "survey.csv"), 0u);
  std::filesystem::remove_all(dir);
}

TEST(Cli, SurveyIsIdempotent) {
  auto dir = scratch("survey");
  std::filesystem::remove_all(dir);
  auto a = run("survey --n 2..3 --s 2 --d 2 --jobs 2 -q --out " + dir.string());
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(json_of(a)["appended"], 2);
  EXPECT_EQ(json_of(a)["bound_violations"], 0);
  auto b = run("survey --n 2..3 --s 2 --d 2 -q --out " + dir.string());
  EXPECT_EQ(json_of(b)["appended"], 0);
  EXPECT_EQ(json_of(b)["skipped"], 2);
  std::filesystem::remove_all(dir);
}
