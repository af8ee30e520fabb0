#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ebn_cli.hpp"

using namespace ebn;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::main(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / ("ebn_cli_test_" + name);
  std::ofstream(path, std::ios::binary) << contents;
  return path.string();
}

TEST(Cli, NormInline) {
  Result r = cli({"norm", "--inline", "(app (lam (x Q) (var x)) (lit 3 Q))"});
  EXPECT_EQ(r.code, cli::ok);
  EXPECT_EQ(r.out, "(lit 3 Q)\n");
}

TEST(Cli, NormPrettyAndNaive) {
  std::string id = "(lam (y Q) (prim * (var y) (lit 1 Q)))";
  EXPECT_EQ(cli({"norm", "--inline", id, "--output", "pretty"}).out, "\\x0:Q. x0\n");
  EXPECT_EQ(cli({"norm", "--inline", id, "--prims", "naive"}).out,
            "(lam (x0 Q) (prim * (var x0) (lit 1 Q)))\n");
}

TEST(Cli, CheckPrintsType) {
  Result r = cli({"check", "--inline", "(lam (x Q) (inl (var x) (sum Q unit)))"});
  EXPECT_EQ(r.code, cli::ok);
  EXPECT_EQ(r.out, "(arrow Q (sum Q unit))\n");
  EXPECT_EQ(cli({"check", "--inline", "(lam (x Q) (var x))", "--output", "pretty"}).out, "(Q -> Q)\n");
}

TEST(Cli, RunPrintsValue) {
  Result r = cli({"run", "--inline", "(pair (prim / (lit 1 Q) (lit 3 Q)) (inr unit (sum Q unit)))"});
  EXPECT_EQ(r.code, cli::ok);
  EXPECT_EQ(r.out, "(pair 1/3 (inr unit))\n");
}

TEST(Cli, FileInput) {
  std::string path = temp_file("term.sexp", "; identity applied\n(app (lam (x Q) (var x)) (lit 5 Q))\n");
  Result r = cli({"norm", "--file", path});
  EXPECT_EQ(r.code, cli::ok);
  EXPECT_EQ(r.out, "(lit 5 Q)\n");
}

TEST(Cli, ExitCodes) {
  Result type = cli({"check", "--inline", "(fst unit)"});
  EXPECT_EQ(type.code, cli::static_error);
  EXPECT_EQ(type.err, "type error: type mismatch: expected prod, found unit (at fst)\n");
  EXPECT_TRUE(type.out.empty());

  EXPECT_EQ(cli({"norm", "--inline", "(lam x (var x))"}).code, cli::static_error);
  EXPECT_EQ(cli({"norm", "--inline", "(pair unit"}).code, cli::static_error);
  EXPECT_EQ(cli({"run", "--inline", "(prim / (lit 1 Q) (lit 0 Q))"}).code, cli::runtime_error);
  EXPECT_EQ(cli({"norm", "--inline", "(prim / (lit 1 Q) (lit 0 Q))"}).code, cli::runtime_error);
  EXPECT_EQ(cli({"norm", "--inline", "(prim / (lit 1 Q) (lit 0 Q))", "--prims", "naive"}).code, cli::ok);

  EXPECT_EQ(cli({}).code, cli::usage);
  EXPECT_EQ(cli({"frobnicate"}).code, cli::usage);
  EXPECT_EQ(cli({"norm"}).code, cli::usage);
  EXPECT_EQ(cli({"norm", "--inline", "unit", "--prims", "clever"}).code, cli::usage);
  EXPECT_EQ(cli({"norm", "--file", "/nonexistent/ebn/input"}).code, cli::usage);
  EXPECT_EQ(cli({"norm", "--inline", "unit", "--file", "x"}).code, cli::usage);
  EXPECT_EQ(cli({"demo", "power"}).code, cli::usage);
}

TEST(Cli, Help) {
  Result r = cli({"--help"});
  EXPECT_EQ(r.code, cli::ok);
  EXPECT_NE(r.out.find("norm"), std::string::npos);
}

TEST(Cli, DemoPower) {
  Result r = cli({"demo", "power", "-6"});
  EXPECT_EQ(r.code, cli::ok);
  EXPECT_NE(r.out.find("sexpr:     (lam (x0 Q) (case (prim == (var x0) (lit 0 Q)) (lam (x1 unit) (prim / (lit -1 Q) "
                       "(prim * (prim * (var x0) (prim * (var x0) (var x0))) (prim * (var x0) (prim * (var x0) (var "
                       "x0)))))) (lam (x2 unit) (lit 0 Q))))\n"),
            std::string::npos)
      << r.out;
  EXPECT_EQ(r.out.find("UNEXPECTED"), std::string::npos);
  EXPECT_EQ(r.out.find("DISAGREES"), std::string::npos);

  Result naive = cli({"demo", "power", "-6", "--naive"});
  EXPECT_NE(naive.out.find("(x0 * 1)"), std::string::npos);
}

TEST(Cli, DemoChars) {
  Result r = cli({"demo", "chars", "--inline",
                  "(cat (cat (chr \"N\") eps) (cat (cat (chr \"B\") eps) (cat (chr \"E\") eps)))"});
  EXPECT_EQ(r.code, cli::ok);
  EXPECT_NE(r.out.find("normal: (cat (chr \"N\") (cat (chr \"B\") (cat (chr \"E\") eps)))\n"), std::string::npos);
  EXPECT_NE(r.out.find("string: NBE\n"), std::string::npos);

  std::string path = temp_file("chars.sexp", "(cat (chr \"λ\") (chr \"é\"))");
  EXPECT_NE(cli({"demo", "chars", "--file", path}).out.find("string: λé\n"), std::string::npos);
  EXPECT_EQ(cli({"demo", "chars", "--inline", "(chr \"ab\")"}).code, cli::static_error);
}

TEST(Cli, OutputIsDeterministic) {
  std::vector<std::string> args{"norm", "--inline",
                                "(lam (p (prod Q Q)) (prim == (fst (var p)) (snd (var p))))"};
  EXPECT_EQ(cli(args).out, cli(args).out);
}

TEST(Cli, SexprOutputIsAFixedPoint) {
  Result first = cli({"norm", "--inline", "(lam (x Q) (app (lam (y Q) (prim * (var y) (var y))) (var x)))"});
  ASSERT_EQ(first.code, cli::ok);
  std::string nf = first.out.substr(0, first.out.size() - 1);
  EXPECT_EQ(cli({"norm", "--inline", nf}).out, first.out);
}

}  // namespace
