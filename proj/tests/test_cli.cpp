#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "dmod/cli.hpp"
#include "dmod/dsl.hpp"
#include "dmod/geom.hpp"
#include "oracle.hpp"

namespace dmod {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fixture_file(const std::string& name) { return read_file(std::string(DMOD_FIXTURE_DIR) + "/" + name); }

std::string error_kind(const std::string& text) {
  try {
    parse_system(text);
  } catch (const Error& e) {
    return e.kind() + "|" + e.what();
  }
  return "";
}

TEST(Parse, SecondDerivative) {
  SystemDecl d = parse_system("system p(){ indep x; dep y; eq e: d[1,1](y); }");
  EXPECT_EQ(d.name, "p");
  EXPECT_EQ(d.ops.rows(), 1);
  EXPECT_EQ(d.ops.at(0, 0), OreOp::d(1, MultiIndex(std::vector<int>{2})));
}

TEST(Parse, ShorthandOnlyForOneVariable) {
  SystemDecl d = parse_system("system p(){ indep t; dep y; eq e: d(y) - y; }");
  EXPECT_EQ(d.ops.at(0, 0), OreOp::d(1, 1) - OreOp(1, RatFunc(1)));
  EXPECT_NE(error_kind("system p(){ indep x1, x2; dep y; eq e: d(y); }"), "");
}

TEST(Parse, DoublePendulumFile) {
  SystemDecl d = parse_system(fixture_file("double_pendulum.sys"));
  EXPECT_EQ(d, fixture("double_pendulum").decl);
  EXPECT_EQ(d.ring.params, (std::vector<std::string>{"l1", "l2", "g"}));
}

TEST(Parse, FilesMatchRegistry) {
  for (auto id : {"double_pendulum", "example_1_6", "example_1_7", "macaulay", "kalman", "schwarzian", "example_1_2"})
    EXPECT_EQ(parse_system(fixture_file(std::string(id) + ".sys")), fixture(id).decl) << id;
}

TEST(Parse, PrintsBackIdentically) {
  std::string text = fixture_file("example_1_6_uv.sys");
  SystemDecl d = parse_system(text);
  std::string printed = print_system(d);
  EXPECT_EQ(parse_system(printed), d);
  EXPECT_EQ(print_system(parse_system(printed)), printed);
  EXPECT_NE(printed.find("eq P: d[2,2](y) - u;"), std::string::npos) << printed;
  EXPECT_NE(printed.find("eq Q: d[1,2](y) - y - v;"), std::string::npos) << printed;
}

TEST(Parse, RoundTripWholeCorpus) {
  for (auto& id : fixture_ids()) {
    SystemDecl d = fixture(id).decl;
    EXPECT_EQ(parse_system(print_system(d)), d) << id;
  }
}

TEST(Parse, RationalCoefficients) {
  SystemDecl d = parse_system("system p(a){ indep x; dep y; eq e: (x^2 + a)/(2*x) * d(y) - 3/4*y; }");
  Ring r = d.ring;
  EXPECT_EQ(d.ops.at(0, 0).coeff(MultiIndex(std::vector<int>{1})), parse_coeff("x/2 + a/(2*x)", r));
  EXPECT_EQ(d.ops.at(0, 0).coeff(MultiIndex(std::vector<int>{0})), RatFunc(Q(-3, 4)));
  EXPECT_EQ(parse_system(print_system(d)), d);
}

TEST(Parse, Errors) {
  std::string e = error_kind("system p(){ indep x; dep y;\n eq e: d[1](y) + ; }");
  EXPECT_EQ(e.rfind("SyntaxError|", 0), 0u) << e;
  EXPECT_NE(e.find("2:"), std::string::npos) << e;  // line number reported
  EXPECT_NE(error_kind("system p(){ indep x; dep y; eq e: d[1](z); }"), "");  // undeclared unknown
  EXPECT_NE(error_kind("system p(){ indep x; dep y; eq e: b*y; }"), "");      // undeclared symbol
  EXPECT_NE(error_kind("system p(){ indep x; dep y; eq e: d[2](y); }"), "");  // index out of range
  EXPECT_NE(error_kind("system p(){ indep x; dep x; eq e: x; }"), "");        // duplicate identifier
  EXPECT_NE(error_kind("system p(){ indep x; dep y; eq e: y*y; }"), "");      // not linear
  EXPECT_NE(error_kind("system p(){ indep x; dep y; eq e: 1/(x - x)*y; }"), "");
}

TEST(Substitute, Specializes) {
  SystemDecl d = fixture("double_pendulum").decl;
  SystemDecl s = substitute(d, {"l2=l1"});
  EXPECT_EQ(s.ops.at(1, 2).coeff(MultiIndex(std::vector<int>{2})), parse_coeff("l1", d.ring));
  SystemDecl t = substitute(d, {"g=0", "l1=1"});
  EXPECT_TRUE(t.ops.at(0, 1).coeff(MultiIndex(std::vector<int>{0})).is_zero());
}

TEST(Substitute, DivisionByZeroIsReported) {
  SystemDecl d = parse_system("system p(a){ indep x; dep y; eq e: 1/a*y; }");
  EXPECT_THROW(substitute(d, {"a=0"}), Error);
  EXPECT_THROW(substitute(d, {"b=1"}), Error);
}

Options opts() { return Options{}; }

TEST(Report, DeterministicJson) {
  SystemDecl d = fixture("double_pendulum").decl;
  for (auto cmd : {"adjoint", "cc", "rank", "test", "param", "dims", "pp"}) {
    Report a = run_command(cmd, d, opts()), b = run_command(cmd, d, opts());
    EXPECT_EQ(render(a, "json"), render(b, "json")) << cmd;
    EXPECT_EQ(render(a, "text"), render(b, "text")) << cmd;
    EXPECT_FALSE(a.j.contains("wall_time_s"));
  }
  Options t;
  t.timing = true;
  EXPECT_TRUE(run_command("rank", d, t).j.contains("wall_time_s"));
}

TEST(Report, FieldOrder) {
  Report r = run_command("test", fixture("kalman").decl, opts());
  std::vector<std::string> keys;
  for (auto it = r.j.begin(); it != r.j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"tool", "version", "command", "input", "options", "status", "result"}));
  EXPECT_EQ(r.j["result"]["verdict"], "torsion_free");
}

TEST(Report, ExitCodes) {
  SystemDecl d = fixture("double_pendulum").decl;
  EXPECT_EQ(run_command("test", d, opts()).exit_code(), 0);
  Options s;
  s.subst = {"l2=l1"};
  Report t = run_command("test", d, s);
  EXPECT_EQ(t.exit_code(), 0);
  EXPECT_EQ(t.j["result"]["verdict"], "has_torsion");
  EXPECT_EQ(t.j["result"]["torsion"][0]["z"], "th1 - th2");

  Options low;
  low.max_order = 0;
  EXPECT_EQ(run_command("cc", fixture("grad3").decl, low).exit_code(), 2);
  EXPECT_EQ(run_command("spencerize", fixture("div3").decl, low).exit_code(), 2);
  EXPECT_EQ(run_command("frobnicate", d, opts()).exit_code(), 1);
  EXPECT_EQ(error_report("test", "IOError", "missing").exit_code(), 1);
}

TEST(Report, DigestFollowsCanonicalText) {
  SystemDecl a = fixture("example_1_6").decl;
  SystemDecl b = parse_system("system example_1_6(){ indep x1, x2; dep y; eq P: d[2,2](y); eq Q: -y + d[1,2](y); }");
  EXPECT_EQ(digest(a), digest(b));
  EXPECT_NE(digest(a), digest(fixture("macaulay").decl));
}

TEST(Report, SelfAdjointCommand) {
  Report r = run_command("selfadjoint", fixture("einstein3").decl, opts());
  EXPECT_EQ(r.j["result"]["self_adjoint"], true);
  Options bad;
  bad.row_scale = {1, 2};
  EXPECT_EQ(run_command("selfadjoint", fixture("einstein3").decl, bad).exit_code(), 1);
}

TEST(Demo, EveryFixturePasses) {
  for (auto& id : fixture_ids()) {
    Report r = run_demo(id, opts());
    EXPECT_EQ(r.exit_code(), 0) << id << "\n" << render(r, "text");
  }
  EXPECT_THROW(run_demo("nope", opts()), Error);
}

TEST(Demo, AllIsOrderedAndIndependentOfWorkers) {
  setenv("DMOD_WORKERS", "1", 1);
  std::string one = render(run_demo_all(opts()), "json");
  setenv("DMOD_WORKERS", "6", 1);
  Report six = run_demo_all(opts());
  EXPECT_EQ(render(six, "json"), one);
  std::vector<std::string> ids;
  for (auto& f : six.j["result"]["fixtures"]) ids.push_back(f["id"]);
  EXPECT_EQ(ids, fixture_ids());
}

}  // namespace
}  // namespace dmod
