// dmod: command-line front end.
//
//   dmod test fixtures/double_pendulum.sys --subst l2=l1
//   dmod selfadjoint --demo einstein3
//   dmod demo --all --format json

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dmod/cli.hpp"
#include "dmod/geom.hpp"

namespace {

std::vector<dmod::Q> parse_scale(const std::string& s) {
  std::vector<dmod::Q> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    dmod::Q q(item);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic workbench for linear differential operator matrices"};
  app.set_version_flag("--version", dmod::kVersion);
  std::string command, file, demo_id, format = "text", row_scale, col_scale;
  int max_order = -1;
  unsigned long seed = 1;
  std::vector<std::string> subst;
  bool all = false, timing = false;
  int r = 0, s = 4;
  app.add_option("command", command, "adjoint | cc | rank | test | test2 | param | selfadjoint | dims | pp | spencerize | demo")
      ->required()
      ->check(CLI::IsMember(dmod::command_names()));
  app.add_option("input", file, ".sys file, or the fixture id for demo");
  app.add_option("--demo", demo_id, "use a registered fixture instead of a file");
  app.add_flag("--all", all, "demo: run every fixture");
  app.add_option("--max-order", max_order, "order bound for syzygy and membership searches");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", seed, "seed for randomized cross-checks");
  app.add_option("--subst", subst, "parameter specialization sym=value (repeatable)");
  app.add_option("--row-scale", row_scale, "selfadjoint: comma separated rationals");
  app.add_option("--col-scale", col_scale, "selfadjoint: comma separated rationals");
  app.add_option("--r", r, "pp: prolongations kept");
  app.add_option("--s", s, "pp: extra prolongations projected back");
  app.add_flag("--timing", timing, "include wall time in the report");
  CLI11_PARSE(app, argc, argv);

  dmod::Options opt;
  if (max_order >= 0) opt.max_order = max_order;
  opt.format = format;
  opt.seed = seed;
  opt.subst = subst;
  opt.r = r;
  opt.s = s;
  opt.timing = timing;

  dmod::Report rep;
  try {
    if (!row_scale.empty()) opt.row_scale = parse_scale(row_scale);
    if (!col_scale.empty()) opt.col_scale = parse_scale(col_scale);
    if (command == "demo") {
      std::string id = demo_id.empty() ? file : demo_id;
      if (all)
        rep = dmod::run_demo_all(opt);
      else if (id.empty())
        throw dmod::Error("Usage", "demo needs a fixture id or --all");
      else
        rep = dmod::run_demo(id, opt);
    } else {
      dmod::SystemDecl decl;
      if (!demo_id.empty()) {
        decl = dmod::fixture(demo_id).decl;
      } else {
        if (file.empty()) throw dmod::Error("Usage", "an input .sys file or --demo id is required");
        std::ifstream in(file);
        if (!in) throw dmod::Error("IOError", "cannot read " + file);
        std::stringstream ss;
        ss << in.rdbuf();
        decl = dmod::parse_system(ss.str());
      }
      rep = dmod::run_command(command, decl, opt);
    }
  } catch (const dmod::Error& e) {
    rep = dmod::error_report(command, e.kind(), e.what());
  } catch (const std::exception& e) {
    rep = dmod::error_report(command, "Error", e.what());
  }
  std::cout << dmod::render(rep, format);
  return rep.exit_code();
}
