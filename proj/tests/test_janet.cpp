#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "dmod/dsl.hpp"
#include "dmod/geom.hpp"
#include "dmod/janet.hpp"
#include "oracle.hpp"

namespace dmod {
namespace {

OpMatrix sys(const std::string& id) { return fixture(id).decl.ops; }

std::vector<std::string> rows_of(const OpMatrix& m, const Ring& r, const std::vector<std::string>& unk) {
  std::vector<std::string> out;
  for (int i = 0; i < m.rows(); ++i) out.push_back(row_to_string(m.row(i), r, unk));
  return out;
}

long binom(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// constant-coefficient scalar system as derivative-exponent maps for the oracle
std::vector<std::map<std::vector<int>, Q>> scalar_rows(const OpMatrix& a) {
  std::vector<std::map<std::vector<int>, Q>> out;
  for (int i = 0; i < a.rows(); ++i) {
    std::map<std::vector<int>, Q> row;
    for (auto& [mu, c] : a.at(i, 0).terms()) row[mu.a] = c.const_value();
    out.push_back(row);
  }
  return out;
}

TEST(Prolong, FirstDerivative) {
  OpMatrix a = parse_matrix({"d(y)"}, default_ring(1), {"y"});
  JetMatrix j = prolong(a, 1);
  ASSERT_EQ(j.row_ids.size(), 2u);
  ASSERT_EQ(j.col_ids.size(), 3u);
  // each prolonged row is a single jet y_1 or y_2 with coefficient 1
  std::set<int> hit;
  for (auto& row : j.entries) {
    int nz = 0;
    for (size_t c = 0; c < row.size(); ++c)
      if (!row[c].is_zero()) {
        ++nz;
        EXPECT_TRUE(row[c].is_one());
        hit.insert(j.col_ids[c].second.order());
      }
    EXPECT_EQ(nz, 1);
  }
  EXPECT_EQ(hit, (std::set<int>{1, 2}));
}

TEST(Prolong, Shape) {
  for (auto id : {"example_1_6", "example_1_7", "double_pendulum"}) {
    OpMatrix a = sys(id);
    int n = a.n(), m = a.cols(), p = a.rows(), q = a.order();
    for (int r = 0; r <= 2; ++r) {
      JetMatrix j = prolong(a, r);
      EXPECT_EQ(static_cast<long>(j.col_ids.size()), m * binom(q + r + n, n));
      EXPECT_EQ(static_cast<long>(j.row_ids.size()), p * binom(r + n, n));
    }
  }
}

TEST(Prolong, FourthOrderJetsVanishForFiniteTypeSystem) {
  OpMatrix a = sys("macaulay");
  JetMatrix j = prolong(a, 2);
  // rows differentiated twice involve only order-4 jets
  oracle::QMat top;
  std::vector<size_t> cols;
  for (size_t c = 0; c < j.col_ids.size(); ++c)
    if (j.col_ids[c].second.order() == 4) cols.push_back(c);
  for (size_t i = 0; i < j.row_ids.size(); ++i) {
    if (j.row_ids[i].second.order() != 2) continue;
    std::vector<Q> row;
    for (size_t c : cols) row.push_back(j.entries[i][c].const_value());
    top.push_back(row);
  }
  EXPECT_EQ(cols.size(), 15u);
  EXPECT_EQ(oracle::dense_rank(top), 15);
}

TEST(CC, GradientGivesCurl) {
  auto fx = fixture("grad3");
  CCResult r = cc(fx.decl.ops, 4);
  EXPECT_TRUE(r.certified_complete);
  EXPECT_EQ(rows_of(r.cc, fx.decl.ring, fx.decl.eq_names),
            (std::vector<std::string>{"d[1](g2) - d[2](g1)", "d[1](g3) - d[3](g1)", "d[2](g3) - d[3](g2)"}));
  EXPECT_TRUE((r.cc * fx.decl.ops).is_zero());
}

TEST(CC, UniqueSecondOrderCondition) {
  // eliminating y from P = d22 y - u, Q = d12 y - y - v
  auto fx = fixture("example_1_6");
  CCResult r = cc(fx.decl.ops, 6);
  ASSERT_EQ(r.cc.rows(), 1);
  EXPECT_EQ(r.cc.order(), 2);
  EXPECT_TRUE(r.certified_complete);
  EXPECT_EQ(row_to_string(r.cc.row(0), fx.decl.ring, {"u", "v"}), "d[1,2](u) - d[2,2](v) - u");
}

TEST(CC, DoublePendulumAdjointHasOneFourthOrderCondition) {
  CCResult r = cc(adjoint_matrix(sys("double_pendulum")), 8);
  ASSERT_EQ(r.cc.rows(), 1);
  EXPECT_EQ(r.cc.order(), 4);
  EXPECT_TRUE(r.certified_complete);
}

TEST(CC, InvariantsOverCorpus) {
  for (auto id : {"kalman", "example_1_2", "example_1_6", "example_1_7", "macaulay", "grad3", "div3", "killing2", "cauchy2",
                  "airy", "riemann2", "conformal2"}) {
    OpMatrix a = sys(id);
    CCResult r = cc(a, 6);
    EXPECT_TRUE((r.cc * a).is_zero()) << id;
    if (r.certified_complete) EXPECT_EQ(r.rank_a + r.rank_cc, a.rows()) << id;
  }
}

TEST(Membership, Examples) {
  Ring r = default_ring(2);
  OpMatrix g = parse_matrix({"d[2](y)"}, r, {"y"});
  auto m0 = membership(parse_row("d[2](y)", r, {"y"}), g, 2);
  EXPECT_TRUE(m0.member);
  EXPECT_EQ(m0.order, 0);
  auto m1 = membership(parse_row("d[1,2](y)", r, {"y"}), g, 2);
  EXPECT_TRUE(m1.member);
  EXPECT_EQ(m1.coeffs[0], OreOp::d(2, 1));
  EXPECT_FALSE(membership(parse_row("d[1](y)", r, {"y"}), g, 3).member);
}

TEST(Membership, SecondOrderConditionAndFourthOrderPair) {
  Ring r = default_ring(2);
  OpMatrix ab = sys("example_1_6_ab");
  OpMatrix c = sys("example_1_6_c");
  auto in_ab = membership(c.row(0), ab, 2);
  ASSERT_TRUE(in_ab.member);
  // A and B have an order-2 syzygy, so only the combination is determined
  OpMatrix combo = OpMatrix::from_rows({in_ab.coeffs}, 2, 2);
  EXPECT_EQ((combo * ab).row(0), c.row(0));
  // the printed one: C = d22 B - d12 A + A
  OpMatrix printed = parse_matrix({"-d[1,2](A) + A + d[2,2](B)"}, r, {"A", "B"});
  EXPECT_EQ((printed * ab).row(0), c.row(0));
  // A = d12 C + C and B = d11 C
  auto a_in = membership(ab.row(0), c, 2);
  ASSERT_TRUE(a_in.member);
  EXPECT_EQ(a_in.coeffs[0], OreOp::d(2, 1) * OreOp::d(2, 2) + OreOp(2, RatFunc(1)));
  auto b_in = membership(ab.row(1), c, 2);
  ASSERT_TRUE(b_in.member);
  EXPECT_EQ(b_in.coeffs[0], OreOp::d(2, 1) * OreOp::d(2, 1));
}

TEST(Membership, ResolvesUnknownFromTwoEquations) {
  // y = d11 u - d12 v - v with u = d22 y and v = d12 y - y
  auto fx = fixture("example_1_6");
  auto m = membership(parse_row("y", fx.decl.ring, {"y"}), fx.decl.ops, 2);
  ASSERT_TRUE(m.member);
  EXPECT_EQ(m.order, 2);
  OpMatrix combo = OpMatrix::from_rows({m.coeffs}, 2, 2);
  EXPECT_EQ((combo * fx.decl.ops).row(0), parse_row("y", fx.decl.ring, {"y"}));
  OpMatrix printed = parse_matrix({"d[1,1](P) - d[1,2](Q) - Q"}, fx.decl.ring, {"P", "Q"});
  EXPECT_EQ((printed * fx.decl.ops).row(0), parse_row("y", fx.decl.ring, {"y"}));
}

TEST(RankD, Examples) {
  EXPECT_EQ(rank_D(OpMatrix(3, 2, 2), 4), 0);
  EXPECT_EQ(rank_D(sys("kalman"), 4), 2);
  EXPECT_EQ(rank_D(killing(Metric::euclidean(2)), 4), 2);
  EXPECT_EQ(rank_D(sys("example_1_7"), 4), 2);
  EXPECT_EQ(rank_D(sys("double_pendulum"), 6), 2);
}

TEST(RankD, AgreesWithCertificate) {
  for (auto id : {"example_1_2", "example_1_7", "killing3", "grad3", "cauchy2", "macaulay"}) {
    OpMatrix a = sys(id);
    CCResult r = cc(a, 6);
    ASSERT_TRUE(r.certified_complete) << id;
    EXPECT_EQ(rank_D(a, 6), a.rows() - rank_D(r.cc, 6)) << id;
  }
}

TEST(PP, ProjectionChain) {
  auto v = pp_reduce(sys("example_1_6"), 0, 5);
  ASSERT_GE(v.size(), 6u);
  EXPECT_EQ(std::vector<int>(v.begin(), v.begin() + 6), (std::vector<int>{6, 4, 3, 2, 1, 0}));
}

TEST(PP, FiniteTypeStabilizes) {
  auto v = pp_reduce(sys("macaulay"), 1, 2);
  EXPECT_EQ(v, (std::vector<int>{20, 8, 8, 8}));
}

TEST(PP, InvolutiveSystemIsStable) {
  for (auto id : {"div3", "grad3"}) {
    auto v = pp_reduce(sys(id), 0, 3);
    for (size_t i = 2; i < v.size(); ++i) EXPECT_EQ(v[i], v[1]) << id;
  }
}

TEST(Spencerize, SecondDerivative) {
  Ring r = default_ring(1);
  OpMatrix a = parse_matrix({"d[1,1](y)"}, r, {"y"});
  SpencerForm sf = spencerize(a, 4);
  EXPECT_EQ(sf.solution_dim, 2);
  EXPECT_EQ(rows_of(sf.system, r, {"z1", "z2"}), (std::vector<std::string>{"d[1](z1) - z2", "d[1](z2)"}));
}

TEST(Spencerize, ThirdDerivative) {
  SpencerForm sf = spencerize(sys("schwarzian"), 6);
  EXPECT_EQ(sf.solution_dim, 3);
  EXPECT_EQ(rows_of(sf.system, default_ring(1), {"z1", "z2", "z3"}),
            (std::vector<std::string>{"d[1](z1) - z2", "d[1](z2) - z3", "d[1](z3)"}));
}

TEST(Spencerize, FiniteTypeSecondOrder) {
  SpencerForm sf = spencerize(sys("macaulay"), 6);
  EXPECT_EQ(sf.jets.size(), 8u);
  EXPECT_EQ(sf.system.order(), 1);
  EXPECT_EQ(sf.system.rows(), 3 * 8);
}

TEST(Spencerize, SolutionCountMatchesPolynomialOracle) {
  std::vector<std::pair<std::string, std::vector<std::string>>> systems{
      {"x", {"d[1,1](y)"}},
      {"x", {"d[1,1,1,1](y)"}},
      {"x1 x2", {"d[1,1](y)", "d[2,2](y)"}},
      {"x1 x2", {"d[1,1](y)", "d[1,2](y)", "d[2,2](y)"}},
      {"x1 x2", {"d[1,1](y) - d[2,2](y)", "d[1,2](y)"}},
      {"x1 x2 x3", {"d[3,3](y)", "d[2,3](y) - d[1,1](y)", "d[2,2](y)"}},
      {"x1 x2 x3", {"d[1,1](y)", "d[2,2](y)", "d[3,3](y)"}},
  };
  for (auto& [vars, rows] : systems) {
    Ring r;
    std::stringstream ss(vars);
    for (std::string v; ss >> v;) r.indep.push_back(v);
    OpMatrix a = parse_matrix(rows, r, {"y"});
    SpencerForm sf = spencerize(a, 8);
    EXPECT_EQ(sf.solution_dim, oracle::polynomial_solution_count(r.n(), scalar_rows(a), 7)) << rows[0];
  }
}

TEST(Spencerize, NotFiniteType) {
  try {
    spencerize(sys("div3"), 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "NotFiniteType");
  }
}

TEST(FirstOrder, SameSolutionsAsSecondOrder) {
  OpMatrix a = sys("double_pendulum");
  OpMatrix f = first_order_reduction(a);
  EXPECT_EQ(f.order(), 1);
  EXPECT_EQ(f.cols(), 6);
  EXPECT_EQ(f.rows(), 5);
}

TEST(Resolution, FiniteTypeFibers) {
  auto res = resolution(sys("macaulay"), 4, 4);
  ASSERT_EQ(res.size(), 3u);
  EXPECT_EQ(res[0].rows(), 3);
  EXPECT_EQ(res[1].rows(), 3);
  EXPECT_EQ(res[2].rows(), 1);
  for (auto& m : res) EXPECT_EQ(m.order(), 2);
  for (size_t i = 1; i < res.size(); ++i) EXPECT_TRUE((res[i] * res[i - 1]).is_zero());
}

// ---- symbols and delta ---------------------------------------------------------

TEST(Dims, JetBundlesThreeVariables) {
  std::vector<long> s, j;
  for (int q = 0; q <= 7; ++q) {
    s.push_back(dims(3, 1, q).s_q);
    j.push_back(dims(3, 1, q).j_q);
  }
  EXPECT_EQ(s, (std::vector<long>{1, 3, 6, 10, 15, 21, 28, 36}));
  EXPECT_EQ(j, (std::vector<long>{1, 4, 10, 20, 35, 56, 84, 120}));
}

oracle::QMat product(const QMatrix& a, const QMatrix& b) { return oracle::matmul(a, b); }

bool is_zero(const oracle::QMat& m) {
  for (auto& r : m)
    for (auto& x : r)
      if (x != 0) return false;
  return true;
}

TEST(Delta, SquaresToZeroOnFullSpaces) {
  for (int n = 2; n <= 4; ++n)
    for (int t = 2; t <= 3; ++t)
      for (int r = 0; r + 1 < n; ++r) {
        QMatrix d1 = delta_full(n, 1, t, r), d2 = delta_full(n, 1, t - 1, r + 1);
        if (d1.empty() || d2.empty()) continue;
        EXPECT_TRUE(is_zero(product(d2, d1))) << n << " " << t << " " << r;
      }
}

TEST(Delta, SquaresToZeroOnRandomTableaux) {
  oracle::Rng rng(77);
  for (int k = 0; k < 10; ++k) {
    int n = rng.uniform(2, 3), q = 2;
    OpMatrix a(0, 1, n);
    int rows = rng.uniform(1, 3);
    for (int i = 0; i < rows; ++i) {
      OreOp p(n);
      for (auto& mu : multi_indices(n, q))
        if (rng.coin(50)) p.add_term(mu, RatFunc(Q(rng.uniform(-2, 2))));
      if (!p.is_zero()) a.append_row({p});
    }
    if (a.rows() == 0) continue;
    auto tab = SymbolTableau::from_operator(a);
    for (int r = 0; r + 1 < n; ++r) {
      QMatrix d1 = delta_map(tab, q + 1, r), d2 = delta_full(n, 1, q, r + 1);
      if (d1.empty() || d2.empty()) continue;
      EXPECT_TRUE(is_zero(product(d2, d1)));
    }
  }
}

TEST(Delta, RiemannCount) {
  for (int n = 2; n <= 4; ++n) {
    auto tab = SymbolTableau::from_operator(killing(Metric::euclidean(n)));
    auto dd = delta_cohomology_dims(tab, {1}, {2});
    ASSERT_EQ(dd.size(), 1u);
    EXPECT_EQ(dd[0].h, n * n * (n * n - 1) / 12) << n;
  }
}

TEST(Delta, WeylCountAsCocyclesMinusCoboundaries) {
  auto tab = SymbolTableau::from_operator(conformal_killing(Metric::minkowski(4)));
  auto dd = delta_cohomology_dims(tab, {1}, {2});
  ASSERT_EQ(dd.size(), 1u);
  EXPECT_EQ(dd[0].z, 26);
  EXPECT_EQ(dd[0].b, 16);
  EXPECT_EQ(dd[0].h, 10);
}

TEST(Delta, ConformalSymbolDims) {
  for (int n = 3; n <= 5; ++n) {
    auto tab = SymbolTableau::from_operator(conformal_killing(Metric::euclidean(n)));
    EXPECT_EQ(tab.dim(1), n * (n - 1) / 2 + 1);
    EXPECT_EQ(tab.dim(2), n);
    EXPECT_EQ(tab.dim(3), 0);
  }
}

TEST(Delta, SpencerFibersOfFiniteTypeSystem) {
  auto tab = SymbolTableau::from_operator(sys("macaulay"));
  auto fib = spencer_fibers(tab, 3, 8);
  EXPECT_EQ(fib, (std::vector<int>{8, 24, 24, 8}));
  EXPECT_EQ(euler_characteristic({fib.begin(), fib.end()}), 0);
}

}  // namespace
}  // namespace dmod
