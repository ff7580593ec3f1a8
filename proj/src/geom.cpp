#include "dmod/geom.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace dmod {

namespace {

long binom(long n, long k) {
  if (k < 0 || n < k) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r.get_si();
}

// d_i d_j (0-based)
OreOp dd(int n, int i, int j, const RatFunc& c = RatFunc(1)) {
  return OreOp::d(n, MultiIndex::unit(n, i) + MultiIndex::unit(n, j), c);
}

std::vector<std::string> s2_names(int n, const std::string& stem) {
  std::vector<std::string> out;
  for (auto [i, j] : s2_pairs(n)) out.push_back(stem + std::to_string(i + 1) + std::to_string(j + 1));
  return out;
}

std::vector<std::string> numbered(int k, const std::string& stem) {
  std::vector<std::string> out;
  for (int i = 1; i <= k; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

}  // namespace

Metric Metric::minkowski(int n) {
  Metric w = euclidean(n);
  w.sig.back() = -1;
  return w;
}

int s2_dim(int n) { return n * (n + 1) / 2; }

int s2_index(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  // rows before i hold n, n-1, ..., n-i+1 components
  return i * n - i * (i - 1) / 2 + (j - i);
}

std::vector<std::pair<int, int>> s2_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out.emplace_back(i, j);
  return out;
}

std::vector<Q> s2_weights(int n) {
  std::vector<Q> w;
  for (auto [i, j] : s2_pairs(n)) w.push_back(i == j ? 1 : 2);
  return w;
}

std::vector<Q> s2_pairing(const Metric& w) {
  std::vector<Q> out;
  for (auto [i, j] : s2_pairs(w.n())) out.push_back(Q(i == j ? 1 : 2) * w.sig[i] * w.sig[j]);
  return out;
}

OpMatrix weighted_adjoint(const OpMatrix& a, const std::vector<Q>& row_w, const std::vector<Q>& col_w) {
  std::vector<RatFunc> l, r;
  for (auto& c : col_w) l.push_back(RatFunc(Q(1) / c));
  for (auto& c : row_w) r.push_back(RatFunc(c));
  return scale(adjoint_matrix(a), l, r);
}

OpMatrix killing(const Metric& w) {
  int n = w.n();
  OpMatrix k(s2_dim(n), n, n);
  for (auto [i, j] : s2_pairs(n)) {
    int row = s2_index(n, i, j);
    // w_rj d_i xi^r + w_ir d_j xi^r
    k.at(row, j) = k.at(row, j) + OreOp::d(n, MultiIndex::unit(n, i), RatFunc(w.sig[j]));
    k.at(row, i) = k.at(row, i) + OreOp::d(n, MultiIndex::unit(n, j), RatFunc(w.sig[i]));
  }
  return k;
}

OpMatrix conformal_killing(const Metric& w) {
  int n = w.n();
  OpMatrix k = killing(w);
  // tr = w^{rr} Omega_rr
  std::vector<OreOp> tr(n, OreOp(n));
  for (int r = 0; r < n; ++r) {
    int row = s2_index(n, r, r);
    for (int c = 0; c < n; ++c) tr[c] = tr[c] + k.at(row, c).scaled(RatFunc(w.sig[r]));
  }
  OpMatrix out(0, n, n);
  for (auto [i, j] : s2_pairs(n)) {
    if (i == n - 1 && j == n - 1) continue;
    auto row = k.row(s2_index(n, i, j));
    if (i == j)
      for (int c = 0; c < n; ++c) row[c] = row[c] - tr[c].scaled(RatFunc(Q(w.sig[i], n)));
    out.append_row(row);
  }
  return out;
}

OpMatrix cauchy(int n) {
  OpMatrix c(n, s2_dim(n), n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) c.at(k, s2_index(n, i, k)) = OreOp::d(n, i + 1);
  return c;
}

std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> riemann_components(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> out;
  for (size_t a = 0; a < pairs.size(); ++a)
    for (size_t b = a; b < pairs.size(); ++b) {
      auto [i, j] = pairs[a];
      auto [k, l] = pairs[b];
      // with four distinct indices a<b<c<d, R_{ad bc} follows from the cyclic identity
      bool distinct = i != k && i != l && j != k && j != l;
      if (distinct) {
        std::vector<int> s{i, j, k, l};
        std::sort(s.begin(), s.end());
        if (i == s[0] && j == s[3]) continue;
      }
      out.push_back({pairs[a], pairs[b]});
    }
  return out;
}

OpMatrix riemann_lin(int n) {
  auto comps = riemann_components(n);
  OpMatrix r(static_cast<int>(comps.size()), s2_dim(n), n);
  for (size_t row = 0; row < comps.size(); ++row) {
    auto [ij, kl] = comps[row];
    auto [i, j] = ij;
    auto [k, l] = kl;
    auto add = [&](int a, int b, int c, int e, int sign) {
      auto& x = r.at(static_cast<int>(row), s2_index(n, c, e));
      x = x + dd(n, a, b, RatFunc(sign));
    };
    add(i, k, j, l, 1);
    add(j, l, i, k, 1);
    add(j, k, i, l, -1);
    add(i, l, j, k, -1);
  }
  return r;
}

OpMatrix ricci_lin(const Metric& w) {
  int n = w.n();
  OpMatrix r(s2_dim(n), s2_dim(n), n);
  for (auto [i, j] : s2_pairs(n)) {
    int row = s2_index(n, i, j);
    auto add = [&](int a, int b, int c, int e, const Q& f) {
      auto& x = r.at(row, s2_index(n, c, e));
      x = x + dd(n, a, b, RatFunc(f));
    };
    for (int s = 0; s < n; ++s) {
      Q h(w.sig[s], 2);  // w^{ss} / 2
      add(s, s, i, j, h);
      add(i, j, s, s, h);
      add(s, i, s, j, -h);
      add(s, j, s, i, -h);
    }
  }
  return r;
}

OpMatrix ricci_trace(const Metric& w) {
  int n = w.n();
  OpMatrix ric = ricci_lin(w);
  OpMatrix t(1, s2_dim(n), n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < s2_dim(n); ++c)
      t.at(0, c) = t.at(0, c) + ric.at(s2_index(n, r, r), c).scaled(RatFunc(w.sig[r]));
  return t;
}

OpMatrix einstein_lin(const Metric& w) {
  int n = w.n();
  OpMatrix e = ricci_lin(w);
  OpMatrix tr = ricci_trace(w);
  for (int i = 0; i < n; ++i) {
    int row = s2_index(n, i, i);
    for (int c = 0; c < s2_dim(n); ++c) e.at(row, c) = e.at(row, c) - tr.at(0, c).scaled(RatFunc(Q(w.sig[i], 2)));
  }
  return e;
}

OpMatrix div_op(const Metric& w) {
  int n = w.n();
  OpMatrix d(n, s2_dim(n), n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      auto& x = d.at(j, s2_index(n, i, j));
      x = x + OreOp::d(n, MultiIndex::unit(n, i), RatFunc(w.sig[i]));
    }
  return d;
}

OpMatrix ad_ricci_printed(const Metric& w) {
  int n = w.n();
  OpMatrix a(s2_dim(n), s2_dim(n), n);
  for (auto [r, s] : s2_pairs(n)) {
    int row = s2_index(n, r, s);
    auto add = [&](int p, int q, int c1, int c2, int f) {
      auto& x = a.at(row, s2_index(n, c1, c2));
      x = x + dd(n, p, q, RatFunc(f));
    };
    for (int k = 0; k < n; ++k) add(k, k, r, s, w.sig[k]);  // box lambda^{rs}
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (r == s) add(i, j, i, j, w.sig[r]);  // w^{rs} d_ij lambda^{ij}
        if (s == j) add(i, j, r, i, -w.sig[s]);  // w^{sj} d_ij lambda^{ri}
        if (r == i) add(i, j, s, j, -w.sig[r]);  // w^{ri} d_ij lambda^{sj}
      }
  }
  return a;
}

OpMatrix airy() {
  OpMatrix a(3, 1, 2);
  a.at(0, 0) = dd(2, 1, 1);
  a.at(1, 0) = dd(2, 0, 1, RatFunc(-1));
  a.at(2, 0) = dd(2, 0, 0);
  return a;
}

OpMatrix beltrami() {
  Ring r = default_ring(3);
  std::vector<std::string> phi = s2_names(3, "p");
  return parse_matrix({"d[3,3](p22) - 2*d[2,3](p23) + d[2,2](p33)",
                       "-d[3,3](p12) + d[2,3](p13) + d[1,3](p23) - d[1,2](p33)",
                       "d[2,3](p12) - d[2,2](p13) - d[1,3](p22) + d[1,2](p23)",
                       "d[3,3](p11) - 2*d[1,3](p13) + d[1,1](p33)",
                       "-d[2,3](p11) + d[1,3](p12) + d[1,2](p13) - d[1,1](p23)",
                       "d[2,2](p11) - 2*d[1,2](p12) + d[1,1](p22)"},
                      r, phi);
}

OpMatrix maxwell_potentials() { return beltrami().col_block({0, 3, 5}); }
OpMatrix morera_potentials() { return beltrami().col_block({1, 2, 4}); }

OpMatrix einstein_printed() {
  Ring r = default_ring(3);
  std::vector<std::string> om = s2_names(3, "O");
  return parse_matrix({"d[3,3](O22) - 2*d[2,3](O23) + d[2,2](O33)",
                       "-2*d[3,3](O12) + 2*d[2,3](O13) + 2*d[1,3](O23) - 2*d[1,2](O33)",
                       "2*d[2,3](O12) - 2*d[2,2](O13) - 2*d[1,3](O22) + 2*d[1,2](O23)",
                       "d[3,3](O11) - 2*d[1,3](O13) + d[1,1](O33)",
                       "-2*d[2,3](O11) + 2*d[1,3](O12) + 2*d[1,2](O13) - 2*d[1,1](O23)",
                       "d[2,2](O11) - 2*d[1,2](O12) + d[1,1](O22)"},
                      r, om);
}

OpMatrix cosserat() {
  Ring r = default_ring(2);
  return parse_matrix({"d[1](s11) + d[2](s21)", "d[1](s12) + d[2](s22)", "d[1](m1) + d[2](m2) + s12 - s21"}, r,
                      {"s11", "s12", "s21", "s22", "m1", "m2"});
}

OpMatrix cosserat_potentials() {
  Ring r = default_ring(2);
  return parse_matrix({"-d[2](f1)", "-d[2](f2)", "d[1](f1)", "d[1](f2)", "-d[2](f3) + f1", "d[1](f3) + f2"}, r,
                      {"f1", "f2", "f3"});
}

std::vector<std::vector<RatFunc>> conformal_generators(const Metric& w) {
  int n = w.n();
  std::vector<std::vector<RatFunc>> out;
  auto x = [](int i) { return RatFunc::var(i); };
  for (int s = 0; s < n; ++s) {
    std::vector<RatFunc> t(n);
    t[s] = 1;
    out.push_back(t);
  }
  // rotations: w_jj x^j d_i - w_ii x^i d_j (as a vector field with upper index)
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      std::vector<RatFunc> t(n);
      t[i] = x(j) * RatFunc(w.sig[j]);
      t[j] = -(x(i) * RatFunc(w.sig[i]));
      out.push_back(t);
    }
  std::vector<RatFunc> dil(n);
  for (int r = 0; r < n; ++r) dil[r] = x(r);
  out.push_back(dil);
  RatFunc x2;
  for (int r = 0; r < n; ++r) x2 += RatFunc(w.sig[r]) * x(r) * x(r);
  for (int s = 0; s < n; ++s) {
    // -1/2 x^2 delta^r_s + w_st x^t x^r
    std::vector<RatFunc> t(n);
    for (int r = 0; r < n; ++r) t[r] = RatFunc(w.sig[s]) * x(s) * x(r);
    t[s] -= RatFunc(Q(1, 2)) * x2;
    out.push_back(t);
  }
  return out;
}

OpMatrix kalman(const std::vector<std::vector<RatFunc>>& a, const std::vector<std::vector<RatFunc>>& b) {
  int k = static_cast<int>(a.size());
  int r = b.empty() ? 0 : static_cast<int>(b[0].size());
  if (static_cast<int>(b.size()) != k) throw Error("DimensionMismatch", "A and B need the same row count");
  OpMatrix m(k, k + r, 1);
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(a[i].size()) != k || static_cast<int>(b[i].size()) != r)
      throw Error("DimensionMismatch", "ragged A or B");
    m.at(i, i) = OreOp::d(1, 1).scaled(RatFunc(-1));
    for (int l = 0; l < k; ++l) m.at(i, l) = m.at(i, l) + OreOp(1, a[i][l]);
    for (int c = 0; c < r; ++c) m.at(i, k + c) = OreOp(1, b[i][c]);
  }
  return m;
}

Dims dims(int n, int m, int q) {
  if (n < 1 || q < 0) throw Error("DimensionMismatch", "dims needs n >= 1 and q >= 0");
  return {binom(q + n - 1, n - 1), m * binom(q + n, n)};
}

long euler_characteristic(const std::vector<long>& fibers) {
  long s = 0;
  for (size_t i = 0; i < fibers.size(); ++i) s += (i % 2 ? -1 : 1) * fibers[i];
  return s;
}

std::vector<long> killing_sequence_fibers(int n) {
  long m = n;
  return {m, m * (m + 1) / 2, m * m * (m * m - 1) / 12, m * m * (m * m - 1) * (m - 2) / 24};
}

// ---- fixtures -------------------------------------------------------------------

namespace {

SystemDecl make(const std::string& name, Ring ring, std::vector<std::string> dep, const OpMatrix& ops,
                std::vector<std::string> eqs = {}) {
  SystemDecl d;
  d.name = name;
  d.ring = std::move(ring);
  d.dep = std::move(dep);
  d.ops = ops;
  if (eqs.empty()) eqs = numbered(ops.rows(), "e");
  d.eq_names = std::move(eqs);
  return d;
}

SystemDecl from_text(const std::string& text) { return parse_system(text); }

using Builder = std::function<NamedOperator()>;

const std::map<std::string, Builder>& registry() {
  static const std::map<std::string, Builder> reg = [] {
    std::map<std::string, Builder> m;
    auto add = [&](const std::string& id, const std::string& title, std::function<SystemDecl()> f) {
      m[id] = [id, title, f] { return NamedOperator{id, title, f()}; };
    };
    add("kalman", "Kalman system, double integrator", [] {
      return from_text("system kalman(){ indep t; dep y1, y2, u; eq e1: -d(y1) + y2; eq e2: -d(y2) + u; }");
    });
    add("kalman_uncontrollable", "Kalman system with an uncontrollable mode", [] {
      return from_text("system kalman_uncontrollable(){ indep t; dep y1, y2, u; eq e1: -d(y1) + y1 + u; eq e2: -d(y2) + y2; }");
    });
    add("example_1_2", "first-order system with parameter a", [] {
      return from_text("system example_1_2(a){ indep x; dep n1, n2, n3; eq e1: d(n1) - a*n2 - d(n3); eq e2: n1 - d(n2) + d(n3); }");
    });
    add("double_pendulum", "double pendulum", [] {
      return from_text(
          "system double_pendulum(l1, l2, g){ indep t; dep x, th1, th2;"
          " eq e1: d[1,1](x) + l1*d[1,1](th1) + g*th1; eq e2: d[1,1](x) + l2*d[1,1](th2) + g*th2; }");
    });
    add("example_1_6", "two second-order equations with a unique second-order CC", [] {
      return from_text("system example_1_6(){ indep x1, x2; dep y; eq P: d[2,2](y); eq Q: d[1,2](y) - y; }");
    });
    add("example_1_6_ab", "fourth-order conditions A, B on (u, v)", [] {
      return from_text(
          "system example_1_6_ab(){ indep x1, x2; dep u, v;"
          " eq A: d[1,1,2,2](u) - d[1,2,2,2](v) - d[2,2](v) - u; eq B: d[1,1,1,2](u) - d[1,1](u) - d[1,1,2,2](v); }");
    });
    add("example_1_6_c", "second-order condition C on (u, v)", [] {
      return from_text("system example_1_6_c(){ indep x1, x2; dep u, v; eq C: d[1,2](u) - u - d[2,2](v); }");
    });
    add("example_1_7", "three equations with torsion z = y3 - y2", [] {
      return from_text(
          "system example_1_7(a){ indep x1, x2; dep y1, y2, y3;"
          " eq F1: d[2](y3) - d[2](y2); eq F2: d[2](y2) + d[1](y1) - a*x2*y1; eq F3: d[1](y3) - d[1](y2); }");
    });
    add("macaulay", "second-order system of finite type", [] {
      return from_text("system macaulay(){ indep x1, x2, x3; dep y; eq P: d[3,3](y); eq Q: d[2,3](y) - d[1,1](y); eq R: d[2,2](y); }");
    });
    add("schwarzian", "third-order projective equation", [] {
      return from_text("system schwarzian(){ indep x; dep xi; eq e: d[1,1,1](xi); }");
    });
    add("grad3", "gradient, n = 3", [] {
      return from_text("system grad3(){ indep x1, x2, x3; dep f; eq g1: d[1](f); eq g2: d[2](f); eq g3: d[3](f); }");
    });
    add("div3", "divergence, n = 3", [] {
      return from_text("system div3(){ indep x1, x2, x3; dep a1, a2, a3; eq div: d[1](a1) + d[2](a2) + d[3](a3); }");
    });
    add("cauchy2", "stress equations, n = 2", [] { return make("cauchy2", default_ring(2), s2_names(2, "s"), cauchy(2)); });
    add("cauchy3", "stress equations, n = 3", [] { return make("cauchy3", default_ring(3), s2_names(3, "s"), cauchy(3)); });
    add("killing2", "Killing operator, Euclidean n = 2",
        [] { return make("killing2", default_ring(2), numbered(2, "xi"), killing(Metric::euclidean(2)), s2_names(2, "O")); });
    add("killing3", "Killing operator, Euclidean n = 3",
        [] { return make("killing3", default_ring(3), numbered(3, "xi"), killing(Metric::euclidean(3)), s2_names(3, "O")); });
    add("riemann2", "linearized Riemann, n = 2", [] { return make("riemann2", default_ring(2), s2_names(2, "O"), riemann_lin(2)); });
    add("airy", "Airy parametrization", [] { return make("airy", default_ring(2), {"phi"}, airy(), s2_names(2, "s")); });
    add("beltrami", "Beltrami parametrization",
        [] { return make("beltrami", default_ring(3), s2_names(3, "p"), beltrami(), s2_names(3, "s")); });
    add("maxwell", "Maxwell potentials", [] {
      return make("maxwell", default_ring(3), {"A", "B", "C"}, maxwell_potentials(), s2_names(3, "s"));
    });
    add("morera", "Morera potentials", [] {
      return make("morera", default_ring(3), {"P", "Q", "R"}, morera_potentials(), s2_names(3, "s"));
    });
    add("einstein2", "linearized Einstein, n = 2", [] {
      return make("einstein2", default_ring(2), s2_names(2, "O"), einstein_lin(Metric::euclidean(2)), s2_names(2, "E"));
    });
    add("einstein3", "printed Einstein matrix, n = 3",
        [] { return make("einstein3", default_ring(3), s2_names(3, "O"), einstein_printed(), s2_names(3, "E")); });
    add("einstein4", "linearized Einstein, Minkowski n = 4", [] {
      return make("einstein4", default_ring(4), s2_names(4, "O"), einstein_lin(Metric::minkowski(4)), s2_names(4, "E"));
    });
    add("ricci4", "linearized Ricci, Minkowski n = 4", [] {
      return make("ricci4", default_ring(4), s2_names(4, "O"), ricci_lin(Metric::minkowski(4)), s2_names(4, "R"));
    });
    add("conformal2", "conformal Killing, n = 2", [] {
      return make("conformal2", default_ring(2), numbered(2, "xi"), conformal_killing(Metric::euclidean(2)));
    });
    add("conformal4", "conformal Killing, Minkowski n = 4", [] {
      return make("conformal4", default_ring(4), numbered(4, "xi"), conformal_killing(Metric::minkowski(4)));
    });
    add("cosserat", "Cosserat couple-stress equations, n = 2", [] {
      return make("cosserat", default_ring(2), {"s11", "s12", "s21", "s22", "m1", "m2"}, cosserat());
    });
    return m;
  }();
  return reg;
}

}  // namespace

std::vector<std::string> fixture_ids() {
  std::vector<std::string> ids;
  for (auto& [k, v] : registry()) ids.push_back(k);
  return ids;
}

NamedOperator fixture(const std::string& id) {
  auto it = registry().find(id);
  if (it == registry().end()) throw Error("UnknownFixture", id);
  return it->second();
}

}  // namespace dmod
