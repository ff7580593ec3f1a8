#include "dmod/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "dmod/duality.hpp"
#include "dmod/geom.hpp"

namespace dmod {

using json = nlohmann::ordered_json;

int Report::exit_code() const {
  switch (status) {
    case Status::Ok:
      return 0;
    case Status::Inconclusive:
      return 2;
    default:
      return 1;
  }
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"adjoint", "cc",          "rank", "test",       "test2",      "param",
                                              "selfadjoint", "dims", "pp", "spencerize", "demo"};
  return names;
}

namespace {

const char* status_name(Status s) {
  switch (s) {
    case Status::Ok:
      return "ok";
    case Status::Inconclusive:
      return "inconclusive";
    case Status::Failed:
      return "failed";
    default:
      return "error";
  }
}

std::vector<std::string> prefixed(const std::string& stem, const std::vector<std::string>& names) {
  std::vector<std::string> out;
  for (auto& s : names) out.push_back(stem + s);
  return out;
}

std::vector<std::string> numbered(int k, const std::string& stem) {
  std::vector<std::string> out;
  for (int i = 1; i <= k; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

json op_json(const OpMatrix& m, const Ring& ring, const std::vector<std::string>& unknowns) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) rows.push_back(row_to_string(m.row(i), ring, unknowns));
  json j;
  j["unknowns"] = unknowns;
  j["order"] = m.order();
  j["rows"] = rows;
  return j;
}

json input_json(const SystemDecl& d) {
  json j;
  j["name"] = d.name;
  j["digest"] = digest(d);
  j["n"] = d.ring.n();
  j["params"] = d.ring.params;
  j["unknowns"] = d.dep;
  json rows = json::array();
  for (int i = 0; i < d.ops.rows(); ++i) rows.push_back(row_to_string(d.ops.row(i), d.ring, d.dep));
  j["equations"] = rows;
  return j;
}

Report base(const std::string& command, const SystemDecl* d, const Options& opt, int bound) {
  Report r;
  r.j["tool"] = "dmod";
  r.j["version"] = kVersion;
  r.j["command"] = command;
  r.j["input"] = d ? input_json(*d) : json(nullptr);
  json o;
  o["max_order"] = bound;
  o["subst"] = opt.subst;
  o["seed"] = opt.seed;
  r.j["options"] = o;
  r.j["status"] = "ok";
  r.j["result"] = json::object();
  return r;
}

void finish(Report& r) { r.j["status"] = status_name(r.status); }

json duality_json(const DualityReport& rep, const SystemDecl& d) {
  auto lam = prefixed("lam_", d.eq_names);
  auto phi = numbered(rep.d.cols(), "phi");
  json steps = json::array();
  auto step = [&](int k, const std::string& name, const OpMatrix& m, const std::vector<std::string>& unk) {
    json s;
    s["step"] = k;
    s["name"] = name;
    s["operator"] = op_json(m, d.ring, unk);
    steps.push_back(s);
  };
  step(1, "input", rep.d1, d.dep);
  step(2, "adjoint", rep.ad_d1, lam);
  step(3, "cc_of_adjoint", rep.ad_d.cc, prefixed("mu_", d.dep));
  step(4, "parametrization", rep.d, phi);
  step(5, "cc_of_parametrization", rep.d1_prime.cc, d.dep);
  steps[2]["certified_complete"] = rep.ad_d.certified_complete;
  steps[2]["ranks"] = {rep.ad_d.rank_a, rep.ad_d.rank_cc};
  steps[4]["certified_complete"] = rep.d1_prime.certified_complete;
  steps[4]["ranks"] = {rep.d1_prime.rank_a, rep.d1_prime.rank_cc};
  json tors = json::array();
  for (auto& t : rep.torsion) {
    json e;
    e["z"] = row_to_string(t.z, d.ring, d.dep);
    e["autonomous"] = to_string(t.autonomous, d.ring, "z");
    e["multipliers"] = json::array();
    for (auto& p : t.multipliers) e["multipliers"].push_back(to_string(p, d.ring, "e"));
    tors.push_back(e);
  }
  json j;
  j["verdict"] = to_string(rep.verdict);
  j["bound"] = rep.bound;
  j["input_in_new_conditions"] = rep.d1_in_prime;
  j["new_conditions_in_input"] = rep.prime_in_d1;
  j["parametrization_order"] = rep.d.order();
  j["steps"] = steps;
  j["torsion"] = tors;
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

Status verdict_status(Verdict v) { return v == Verdict::Inconclusive ? Status::Inconclusive : Status::Ok; }


// ---- demo checks -----------------------------------------------------------------

struct Check {
  std::string name;
  json expected, actual;
};

using Checks = std::vector<Check>;

std::string verdict_of(const OpMatrix& m, int bound) { return to_string(five_step_test(m, bound).verdict); }

std::vector<std::string> rows_of(const OpMatrix& m, const Ring& ring, const std::vector<std::string>& unk) {
  std::vector<std::string> out;
  for (int i = 0; i < m.rows(); ++i) out.push_back(row_to_string(m.row(i), ring, unk));
  return out;
}

Checks demo_checks(const NamedOperator& fx) {
  const SystemDecl& d = fx.decl;
  const OpMatrix& a = d.ops;
  int bound = default_max_order(a);
  const std::string& id = fx.id;
  Checks c;
  auto zero = [](const OpMatrix& m) { return m.is_zero(); };
  if (id == "macaulay") {
    auto sf = spencerize(a, 6);
    c.push_back({"solution dimension", 8, sf.solution_dim});
    c.push_back({"Spencer unknowns", 8, static_cast<int>(sf.jets.size())});
    c.push_back({"dim R_3 after projection", json::array({20, 8, 8}), pp_reduce(a, 1, 1)});
    auto tab = SymbolTableau::from_operator(a);
    auto fib = spencer_fibers(tab, 3, 8);
    c.push_back({"Spencer fibers", json::array({8, 24, 24, 8}), fib});
    c.push_back({"Euler characteristic", 0, euler_characteristic({fib.begin(), fib.end()})});
    auto res = resolution(a, 4, 4);
    std::vector<int> fibers{res[0].cols()}, orders;
    for (auto& m : res) {
      fibers.push_back(m.rows());
      orders.push_back(m.order());
    }
    c.push_back({"resolution fibers", json::array({1, 3, 3, 1}), fibers});
    c.push_back({"resolution orders", json::array({2, 2, 2}), orders});
  } else if (id == "example_1_6") {
    auto r = cc(a, 6);
    c.push_back({"CC", json::array({"d[1,2](u) - d[2,2](v) - u"}), rows_of(r.cc, d.ring, {"u", "v"})});
    c.push_back({"pp dimensions", json::array({6, 4, 3, 2, 1, 0}), [&] {
                   auto v = pp_reduce(a, 0, 4);
                   return std::vector<int>(v.begin(), v.begin() + 6);
                 }()});
  } else if (id == "schwarzian") {
    auto sf = spencerize(a, 6);
    OpMatrix neg_ad = adjoint_matrix(sf.system);
    neg_ad = scale(neg_ad, std::vector<RatFunc>(neg_ad.rows(), RatFunc(-1)), std::vector<RatFunc>(neg_ad.cols(), RatFunc(1)));
    c.push_back({"-ad(D1)", json::array({"d[1](sigma)", "d[1](nu) + sigma", "d[1](pi) + nu"}),
                 rows_of(neg_ad, d.ring, {"sigma", "nu", "pi"})});
    Ring r = d.ring;
    OpMatrix tri = parse_matrix({"f", "x*f + u", "1/2*x^2*f + x*u + v"}, r, {"f", "u", "v"});
    OpMatrix pot = parse_matrix({"sigma", "nu + x*sigma", "pi + x*nu + 1/2*x^2*sigma"}, r, {"sigma", "nu", "pi"});
    OpMatrix dx = OpMatrix::identity(3, 1);
    for (int i = 0; i < 3; ++i) dx.at(i, i) = OreOp::d(1, 1);
    c.push_back({"pure divergence form", true, tri * neg_ad == dx * pot});
  } else if (id == "double_pendulum") {
    auto rep = five_step_test(a, bound);
    c.push_back({"verdict", "torsion_free", to_string(rep.verdict)});
    c.push_back({"parametrization order", 4, rep.d.order()});
    auto eq = substitute(d, {"l2=l1"});
    auto rep2 = five_step_test(eq.ops, bound);
    c.push_back({"verdict l1 = l2", "has_torsion", to_string(rep2.verdict)});
    c.push_back({"torsion generator", json::array({"th1 - th2"}), [&] {
                   std::vector<std::string> v;
                   for (auto& t : rep2.torsion) v.push_back(row_to_string(t.z, d.ring, d.dep));
                   return v;
                 }()});
  } else if (id == "einstein3") {
    std::vector<Q> ones(6, 1), half{1, Q(1, 2), Q(1, 2), 1, Q(1, 2), 1}, two{1, 2, 2, 1, 2, 1};
    c.push_back({"printed matrix self-adjoint", true, self_adjoint_check(a, ones, ones)});
    OpMatrix e = einstein_lin(Metric::euclidean(3));
    c.push_back({"E self-adjoint (row doubling scalings)", true, self_adjoint_check(e, half, two)});
    std::vector<RatFunc> l;
    for (auto& q : two) l.push_back(RatFunc(-2 * q));
    c.push_back({"printed = -2 diag(1,2,2,1,2,1) E", true, a == scale(e, l, std::vector<RatFunc>(6, RatFunc(1)))});
  } else if (id == "airy") {
    c.push_back({"Cauchy * Airy = 0", true, zero(cauchy(2) * a)});
    auto w = s2_weights(2);
    c.push_back({"weighted ad(Riemann) = Airy", true, weighted_adjoint(riemann_lin(2), {1}, w) == a});
  } else if (id == "beltrami") {
    c.push_back({"Cauchy * Beltrami = 0", true, zero(cauchy(3) * a)});
    c.push_back({"Cauchy * Maxwell = 0", true, zero(cauchy(3) * maxwell_potentials())});
    c.push_back({"Cauchy * Morera = 0", true, zero(cauchy(3) * morera_potentials())});
  } else if (id == "maxwell" || id == "morera") {
    c.push_back({"Cauchy * potentials = 0", true, zero(cauchy(3) * a)});
  } else if (id == "kalman" || id == "example_1_6_c" || id == "example_1_6_ab") {
    c.push_back({"verdict", "torsion_free", verdict_of(a, bound)});
  } else if (id == "kalman_uncontrollable") {
    c.push_back({"verdict", "has_torsion", verdict_of(a, bound)});
  } else if (id == "example_1_2") {
    c.push_back({"verdict (generic a)", "torsion_free", verdict_of(a, bound)});
    c.push_back({"verdict a = 0", "has_torsion", verdict_of(substitute(d, {"a=0"}).ops, bound)});
    c.push_back({"verdict a = 1", "has_torsion", verdict_of(substitute(d, {"a=1"}).ops, bound)});
  } else if (id == "example_1_7") {
    auto r = cc(a, bound);
    c.push_back({"CC", json::array({"d[1](F1) - d[2](F3)"}), rows_of(r.cc, d.ring, d.eq_names)});
    auto rep = five_step_test(a, bound);
    c.push_back({"verdict", "has_torsion", to_string(rep.verdict)});
    std::vector<std::string> zs;
    for (auto& t : rep.torsion) zs.push_back(row_to_string(t.z, d.ring, d.dep));
    c.push_back({"torsion generator", json::array({"y2 - y3"}), zs});
  } else if (id == "grad3") {
    auto r = cc(a, bound);
    c.push_back({"CC (curl)", json::array({"d[1](g2) - d[2](g1)", "d[1](g3) - d[3](g1)", "d[2](g3) - d[3](g2)"}),
                 rows_of(r.cc, d.ring, d.eq_names)});
  } else if (id == "div3") {
    auto dt = double_test(a, bound);
    c.push_back({"verdict", "torsion_free", to_string(dt.first.verdict)});
    c.push_back({"reflexive", true, dt.reflexive});
    c.push_back({"parametrization rows", 3, dt.first.d.rows()});
  } else if (id == "cauchy2") {
    auto p = parametrize(a, bound);
    c.push_back({"parametrization = Airy as modules", true, row_module_equal(cc(p, bound).cc, cc(airy(), bound).cc, bound) &&
                                                              rows_in_module(adjoint_matrix(p), adjoint_matrix(airy()), bound)});
  } else if (id == "cauchy3") {
    auto rep = five_step_test(a, 4);
    c.push_back({"verdict", "torsion_free", to_string(rep.verdict)});
    c.push_back({"Cauchy * Beltrami = 0", true, zero(a * beltrami())});
  } else if (id == "killing2" || id == "killing3") {
    int n = d.ring.n();
    auto r = cc(a, 4);
    c.push_back({"CC = Riemann as modules", true, row_module_equal(r.cc, riemann_lin(n), 2)});
    c.push_back({"CC rows", static_cast<long>(killing_sequence_fibers(n)[2]), r.cc.rows()});
  } else if (id == "riemann2") {
    c.push_back({"weighted ad(Riemann) = Airy", true, weighted_adjoint(a, {1}, s2_weights(2)) == airy()});
  } else if (id == "conformal2" || id == "conformal4") {
    int n = d.ring.n();
    Metric w = n == 4 ? Metric::minkowski(4) : Metric::euclidean(n);
    auto gens = conformal_generators(w);
    bool all = true;
    for (auto& g : gens)
      for (auto& v : dmod::apply(a, g)) all = all && v.is_zero();
    c.push_back({"generators", (n + 1) * (n + 2) / 2, static_cast<int>(gens.size())});
    c.push_back({"generators annihilated", true, all});
    c.push_back({"rows", n * (n + 1) / 2 - 1, a.rows()});
  } else if (id == "einstein2" || id == "einstein4") {
    int n = d.ring.n();
    Metric w = n == 4 ? Metric::minkowski(4) : Metric::euclidean(n);
    c.push_back({"div * Einstein = 0", true, zero(div_op(w) * a)});
    auto s = s2_pairing(w);
    std::vector<Q> inv;
    for (auto& q : s) inv.push_back(1 / q);
    c.push_back({"self-adjoint (metric pairing)", true, self_adjoint_check(a, inv, s)});
  } else if (id == "ricci4") {
    Metric w = Metric::minkowski(4);
    auto p = s2_pairing(w);
    std::vector<Q> inv;
    for (auto& q : p) inv.push_back(1 / q);
    c.push_back({"self-adjoint (metric pairing)", false, self_adjoint_check(a, inv, p)});
    auto s = s2_weights(4);
    OpMatrix wad = weighted_adjoint(a, s, s);
    OpMatrix printed = ad_ricci_printed(w);
    std::vector<RatFunc> half(10, RatFunc(Q(1, 2)));
    c.push_back({"weighted ad(Ricci) = 1/2 printed operator", true, wad == scale(printed, half, std::vector<RatFunc>(10, RatFunc(1)))});
  } else if (id == "cosserat") {
    c.push_back({"Cosserat * potentials = 0", true, zero(a * cosserat_potentials())});
    c.push_back({"verdict", "torsion_free", verdict_of(a, bound)});
  }
  return c;
}

}  // namespace

std::string digest(const SystemDecl& decl) {
  std::string s = print_system(decl);
  uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report error_report(const std::string& command, const std::string& kind, const std::string& message) {
  Report r = base(command, nullptr, Options{}, 0);
  r.status = Status::Error;
  r.j["result"] = {{"error", kind}, {"message", message}};
  finish(r);
  return r;
}

Report run_command(const std::string& command, const SystemDecl& decl0, const Options& opt) {
  SystemDecl decl = opt.subst.empty() ? decl0 : substitute(decl0, opt.subst);
  const OpMatrix& a = decl.ops;
  int bound = opt.max_order.value_or(default_max_order(a));
  Report r = base(command, &decl, opt, bound);
  auto t0 = std::chrono::steady_clock::now();
  json& res = r.j["result"];
  try {
    if (command == "adjoint") {
      res["operator"] = op_json(adjoint_matrix(a), decl.ring, prefixed("lam_", decl.eq_names));
    } else if (command == "cc") {
      CCResult c = cc(a, bound);
      res["operator"] = op_json(c.cc, decl.ring, decl.eq_names);
      res["orders"] = c.orders;
      res["search_order"] = c.search_order;
      res["certified_complete"] = c.certified_complete;
      res["rank_input"] = c.rank_a;
      res["rank_cc"] = c.rank_cc;
      if (!c.certified_complete) r.status = Status::Inconclusive;
    } else if (command == "rank") {
      res["rank"] = rank_D(a, bound);
    } else if (command == "test") {
      DualityReport rep = five_step_test(a, bound);
      res = duality_json(rep, decl);
      r.status = verdict_status(rep.verdict);
    } else if (command == "test2") {
      DoubleReport rep = double_test(a, bound);
      res["first"] = duality_json(rep.first, decl);
      if (rep.second) {
        SystemDecl second;
        second.name = decl.name + "_parametrization";
        second.ring = decl.ring;
        second.dep = numbered(rep.first.d.cols(), "phi");
        second.eq_names = decl.dep;
        second.ops = rep.first.d;
        res["second"] = duality_json(*rep.second, second);
      } else {
        res["second"] = nullptr;
      }
      res["reflexive"] = rep.reflexive;
      Verdict v = rep.second ? rep.second->verdict : rep.first.verdict;
      r.status = verdict_status(v);
    } else if (command == "param") {
      DualityReport rep = five_step_test(a, bound);
      res["verdict"] = to_string(rep.verdict);
      if (rep.verdict == Verdict::TorsionFree) {
        res["operator"] = op_json(rep.d, decl.ring, numbered(rep.d.cols(), "phi"));
      } else {
        res["torsion"] = duality_json(rep, decl)["torsion"];
        if (!rep.note.empty()) res["note"] = rep.note;
      }
      r.status = verdict_status(rep.verdict);
    } else if (command == "selfadjoint") {
      std::vector<Q> rs = opt.row_scale, cs = opt.col_scale;
      if (rs.empty()) rs.assign(a.rows(), 1);
      if (cs.empty()) cs.assign(a.cols(), 1);
      if (static_cast<int>(rs.size()) != a.rows() || static_cast<int>(cs.size()) != a.cols())
        throw Error("DimensionMismatch", "scale lengths must match the matrix");
      std::vector<std::string> srs, scs;
      for (auto& q : rs) srs.push_back(to_string(q));
      for (auto& q : cs) scs.push_back(to_string(q));
      res["row_scale"] = srs;
      res["col_scale"] = scs;
      res["self_adjoint"] = self_adjoint_check(a, rs, cs);
    } else if (command == "dims") {
      int q = std::max(a.order(), 0), n = decl.ring.n(), m = a.cols();
      res["n"] = n;
      res["m"] = m;
      res["q"] = q;
      json jets = json::array();
      for (int t = 0; t <= q + 3; ++t) {
        Dims dd = dims(n, m, t);
        jets.push_back({{"t", t}, {"dim_S", dd.s_q}, {"dim_J", dd.j_q}});
      }
      res["jets"] = jets;
      if (a.constant_coefficients() && a.rows() > 0) {
        try {
          auto tab = SymbolTableau::from_operator(a);
          json g = json::array();
          for (int t = q; t <= q + 3; ++t) g.push_back({{"t", t}, {"dim_g", tab.dim(t)}});
          res["symbol"] = g;
        } catch (const Error&) {
          res["symbol"] = nullptr;  // parameters in the symbol
        }
      }
    } else if (command == "pp") {
      res["r"] = opt.r;
      res["s"] = opt.s;
      res["dims"] = pp_reduce(a, opt.r, opt.s);
    } else if (command == "spencerize") {
      int max_q = opt.max_order.value_or(std::max(a.order(), 0) + 6);
      r.j["options"]["max_order"] = max_q;
      SpencerForm sf = spencerize(a, max_q);
      std::vector<std::string> jets;
      for (auto& [k, mu] : sf.jets) {
        OreOp unit = OreOp::d(decl.ring.n(), mu);
        jets.push_back(to_string(unit, decl.ring, decl.dep[k]));
      }
      res["order"] = sf.order;
      res["solution_dim"] = sf.solution_dim;
      res["jets"] = jets;
      res["operator"] = op_json(sf.system, decl.ring, numbered(static_cast<int>(jets.size()), "z"));
    } else {
      throw Error("UnknownCommand", command);
    }
  } catch (const Error& e) {
    bool bound_issue = e.kind() == "BoundExceeded" || e.kind() == "NotFiniteType";
    r.status = bound_issue ? Status::Inconclusive : Status::Error;
    res = {{"error", e.kind()}, {"message", e.what()}};
  }
  if (opt.timing) r.j["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  finish(r);
  return r;
}

Report run_demo(const std::string& id, const Options& opt) {
  NamedOperator fx = fixture(id);
  Report r = base("demo", &fx.decl, opt, default_max_order(fx.decl.ops));
  auto t0 = std::chrono::steady_clock::now();
  json& res = r.j["result"];
  res["id"] = id;
  res["title"] = fx.title;
  try {
    Checks checks = demo_checks(fx);
    json table = json::array();
    bool all = true;
    for (auto& c : checks) {
      bool pass = c.expected == c.actual;
      all = all && pass;
      table.push_back({{"check", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", pass}});
    }
    res["checks"] = table;
    res["passed"] = all;
    if (!all) r.status = Status::Failed;
  } catch (const Error& e) {
    r.status = e.kind() == "BoundExceeded" ? Status::Inconclusive : Status::Error;
    res["error"] = e.kind();
    res["message"] = e.what();
  }
  if (opt.timing) r.j["wall_time_s"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  finish(r);
  return r;
}

Report run_demo_all(const Options& opt) {
  std::vector<std::string> ids = fixture_ids();
  std::vector<Report> out(ids.size());
  unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("DMOD_WORKERS")) workers = std::max(1, std::atoi(env));
  workers = std::min<unsigned>(workers, static_cast<unsigned>(ids.size()));
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i = next++; i < ids.size(); i = next++) out[i] = run_demo(ids[i], opt);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  Report r = base("demo", nullptr, opt, 0);
  json list = json::array();
  int worst = 0;
  Status st = Status::Ok;
  for (auto& rep : out) {
    list.push_back({{"id", rep.j["result"].value("id", "")}, {"status", rep.j["status"]}, {"result", rep.j["result"]}});
    int rank = rep.status == Status::Ok ? 0 : rep.status == Status::Inconclusive ? 1 : 2;
    if (rank > worst) {
      worst = rank;
      st = rep.status;
    }
  }
  r.j["result"] = {{"fixtures", list}};
  r.status = st;
  finish(r);
  return r;
}

namespace {

void text(std::ostringstream& os, const json& j, int indent) {
  std::string pad(indent, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    os << pad << it.key() << ":";
    if (v.is_object()) {
      os << "\n";
      text(os, v, indent + 2);
    } else if (v.is_array()) {
      bool flat = std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_number() || x.is_boolean(); });
      if (flat) {
        os << " [";
        for (size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i].dump();
        os << "]\n";
      } else {
        os << "\n";
        for (auto& x : v) {
          if (x.is_object()) {
            os << pad << "  -\n";
            text(os, x, indent + 4);
          } else {
            os << pad << "  - " << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
          }
        }
      }
    } else {
      os << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

std::string render(const Report& rep, const std::string& format) {
  if (format == "json") return rep.j.dump(2) + "\n";
  std::ostringstream os;
  text(os, rep.j, 0);
  return os.str();
}

}  // namespace dmod
