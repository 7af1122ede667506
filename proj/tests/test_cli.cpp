#include <gtest/gtest.h>

#include <filesystem>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"
#include "kipas/coloring.hpp"
#include "kipas/constructions.hpp"

using namespace kipas;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() / ("kipas_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string file(const std::string& name) const { return (dir_ / name).string(); }

 private:
  std::filesystem::path dir_;
};

}  // namespace

TEST(Cli, Formula) {
  auto r = call({"formula", "--id", "bk-path", "--k", "3", "--n", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "exact 8\n");
  r = call({"formula", "--id", "path-star", "--m", "4", "--n", "3"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(first_line(r.out), "interval 5 6");
  r = call({"formula", "--id", "linear-forests", "--l1", "6", "--j1", "0", "--l2", "3", "--j2", "1"});
  EXPECT_EQ(r.out, "exact 6\n");
  r = call({"formula", "--id", "kipas-linear", "--n", "12", "--m", "6", "--min-component", "3"});
  EXPECT_EQ(r.out, "exact 15\n");
}

TEST(Cli, FormulaErrors) {
  EXPECT_EQ(call({"formula", "--id", "bk-path", "--k", "2", "--n", "6"}).code, 2);
  EXPECT_EQ(call({"formula", "--id", "nope", "--n", "6"}).code, 2);
  EXPECT_EQ(call({"formula", "--id", "bk-path", "--n", "6"}).code, 2);
}

TEST(Cli, UsageErrors) {
  auto r = call({});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("Subcommands"), std::string::npos);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"formula", "--bogus"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST_F(CliFiles, GenerateThenDetect) {
  const auto w = file("w.ecg");
  auto r = call({"generate", "--family", "t-path-witness", "--n", "5", "-o", w});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(load_coloring(w), witness_t_path(5));
  r = call({"detect", "--input", w, "--pattern", "mono:path:5", "--any-color"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "absent\n");
  r = call({"detect", "--input", w, "--pattern", "mono:path:4", "--color", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out).rfind("found color 2 map", 0), 0U);
  // T members never hold a rainbow K_{1,3}; rainbow P_3 is everywhere.
  r = call({"detect", "--input", w, "--pattern", "rainbow:star:3"});
  EXPECT_EQ(r.code, 1);
  r = call({"detect", "--input", w, "--pattern", "rainbow:path:3"});
  EXPECT_EQ(first_line(r.out).rfind("found rainbow map", 0), 0U);
  r = call({"detect", "--input", w, "--longest-path", "--color", "1"});
  EXPECT_EQ(first_line(r.out).rfind("longest-path order 4", 0), 0U);
  r = call({"detect", "--input", w, "--forest", "2", "--color", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(call({"detect", "--input", w, "--longest-path"}).code, 2);
  EXPECT_EQ(call({"detect", "--input", file("missing.ecg"), "--pattern", "path:3"}).code, 2);
}

TEST_F(CliFiles, GenerateFamilies) {
  const auto g = file("g.ecg");
  ASSERT_EQ(call({"generate", "--family", "bk", "--parts", "2,3", "--choice", "0-1=2", "-o", g}).code, 0);
  const auto bk = load_coloring(g);
  EXPECT_EQ(bk.order(), 5);
  EXPECT_EQ(bk.num_colors(), 3);
  EXPECT_EQ(bk.color(0, 1), 2);
  ASSERT_EQ(call({"generate", "--family", "g2", "--n", "6", "-o", g}).code, 0);
  EXPECT_EQ(load_coloring(g).color(0, 1), 2);
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"--family", "g3", "--n", "5"}, {"--family", "t", "--parts", "2,2,2"},
        {"--family", "g1", "--parts", "2,2,0"}, {"--family", "bk-path-witness", "--k", "3", "--n", "6"},
        {"--family", "b3-kipas-witness", "--n", "5"}, {"--family", "kipas-linear-witness", "--n", "8", "--m", "4"},
        {"--family", "gamma1"}, {"--family", "gamma2"}}) {
    std::vector<std::string> full = {"generate"};
    full.insert(full.end(), args.begin(), args.end());
    full.push_back("--verify");
    const auto r = call(full);
    EXPECT_EQ(r.code, 0) << args[1] << r.err;
    EXPECT_EQ(first_line(r.out), "ecg 1");
  }
  EXPECT_EQ(call({"generate", "--family", "bk", "--parts", "1,3"}).code, 2);
  EXPECT_EQ(call({"generate", "--family", "t"}).code, 2);
  EXPECT_EQ(call({"generate", "--family", "nope"}).code, 2);
}

TEST_F(CliFiles, ComputeRamsey) {
  auto r = call({"compute", "--quantity", "ramsey", "--red", "path:3", "--blue", "path:3", "--max-n", "6"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "exact 3");
  EXPECT_NE(r.out.find("witness K_2"), std::string::npos);
  const auto w = file("x.ecg");
  r = call({"compute", "--quantity", "t", "--target", "path:4", "--max-n", "8", "-o", w, "--threads", "2"});
  EXPECT_EQ(first_line(r.out), "exact 5");
  EXPECT_EQ(load_coloring(w).order(), 4);
  r = call({"compute", "--quantity", "ramsey", "--red", "k:3", "--blue", "k:3", "--max-n", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(first_line(r.out), "interval 6 inf");
  EXPECT_EQ(call({"compute", "--quantity", "bk", "--k", "3", "--target", "path:4", "--max-n", "15"}).code, 2);
  EXPECT_EQ(call({"compute", "--quantity", "ramsey", "--red", "k:3", "--blue", "k:4", "--max-n", "8",
                  "--max-nodes", "10"})
                .code,
            2);
}

TEST(Cli, Check) {
  auto r = call({"check", "--lemma", "3.1i", "--n", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "holds");
  EXPECT_EQ(call({"check", "--lemma", "3.1ii", "--n", "5"}).code, 0);
  EXPECT_EQ(call({"check", "--lemma", "3.2", "--n", "8", "--a", "3"}).code, 2);
  r = call({"check", "--lemma", "3.2", "--n", "12", "--a", "3", "--samples", "200", "--seed", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("not a proof"), std::string::npos);
  EXPECT_EQ(call({"check", "--lemma", "3.2", "--n", "12", "--a", "3", "--exhaustive"}).code, 2);
  EXPECT_EQ(call({"check", "--lemma", "3.1ii", "--n", "4"}).code, 2);
}

TEST(Cli, GrVerify) {
  auto r = call({"grverify", "--k", "4", "--rainbow", "p5", "--target", "path:6", "--N", "7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "holds");
  r = call({"grverify", "--k", "4", "--rainbow", "p5", "--target", "path:6", "--N", "6"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(first_line(r.out), "counterexample");
  r = call({"grverify", "--k", "3", "--rainbow", "star:3", "--target", "path:4", "--N", "5", "--mode", "full"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(call({"grverify", "--k", "3", "--rainbow", "k:3", "--target", "path:4", "--N", "5"}).code, 2);
}

TEST_F(CliFiles, Classify) {
  const auto w = file("c.ecg");
  FamilyDescriptor d;
  d.family = Family::G2;
  d.n = 6;
  d.special = {0, 1};
  save_coloring(build_family(d), w);
  auto r = call({"classify", "--input", w, "--context", "p4plus"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(first_line(r.out), "g2");
  EXPECT_NE(r.out.find("special 0 1"), std::string::npos);
  save_coloring(EdgeColoring(5, 3, 1), w);
  r = call({"classify", "--input", w, "--context", "k13"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "unclassified\n");
  EXPECT_EQ(call({"classify", "--input", w, "--context", "zz"}).code, 2);
}

TEST(Cli, JsonMirror) {
  const auto r = call({"--json", "formula", "--id", "t-path", "--n", "5"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"]["lo"], 7);
  EXPECT_EQ(j["value"]["exact"], true);
  EXPECT_EQ(j["exit"], 0);
  const auto after = call({"formula", "--id", "t-path", "--n", "5", "--json"});
  EXPECT_EQ(nlohmann::json::parse(after.out), j);
}

TEST(Cli, SelftestFilter) {
  auto r = call({"selftest", "--only", "lemma4.2"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS 4 t-path"), std::string::npos);
  EXPECT_NE(r.out.find("1/1 criteria passed"), std::string::npos);
  r = call({"selftest", "--only", "9,formula-reductions"});
  EXPECT_NE(r.out.find("1/1"), std::string::npos);
  EXPECT_EQ(call({"selftest", "--only", "nonsense"}).code, 2);
}
