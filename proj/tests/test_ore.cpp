#include <gtest/gtest.h>

#include "dmod/duality.hpp"
#include "dmod/dsl.hpp"
#include "dmod/geom.hpp"
#include "dmod/ore.hpp"
#include "oracle.hpp"

namespace dmod {
namespace {

RatFunc x(int i) { return RatFunc::var(i - 1); }
OreOp D(int n, int i) { return OreOp::d(n, i); }
OreOp C(int n, const RatFunc& c) { return OreOp(n, c); }

TEST(OpMul, CommutationRule) {
  EXPECT_EQ(D(1, 1) * C(1, x(1)), C(1, x(1)) * D(1, 1) + C(1, 1));
  EXPECT_EQ(D(2, 1) * D(2, 2), D(2, 2) * D(2, 1));
}

TEST(OpMul, FactoredRiccatiForm) {
  // (d - a)(d + a) = d^2 + (a' - a^2) for a = x^2 + 1
  RatFunc a = x(1) * x(1) + RatFunc(1);
  OreOp lhs = (D(1, 1) - C(1, a)) * (D(1, 1) + C(1, a));
  OreOp rhs = D(1, 1) * D(1, 1) + C(1, partial(a, 1, 1) - a * a);
  EXPECT_EQ(lhs, rhs);
}

TEST(OpMul, OrderAdds) {
  oracle::Rng rng(7);
  for (int k = 0; k < 50; ++k) {
    int n = rng.uniform(1, 3);
    OreOp p = oracle::random_op(rng, n, 3, 2), q = oracle::random_op(rng, n, 3, 2);
    if (p.is_zero() || q.is_zero()) continue;
    EXPECT_EQ((p * q).order(), p.order() + q.order());
  }
  EXPECT_EQ(OreOp(2).order(), -1);
}

TEST(OpMul, DimensionMismatch) { EXPECT_THROW(D(1, 1) * D(2, 1), Error); }

TEST(Adjoint, Examples) {
  EXPECT_EQ(adjoint(D(3, 1)), -D(3, 1));
  EXPECT_EQ(adjoint(C(2, x(1) * x(2))), C(2, x(1) * x(2)));
  EXPECT_EQ(adjoint(C(1, x(1)) * D(1, 1)), -(C(1, x(1)) * D(1, 1)) - C(1, 1));
}

TEST(AdjointMatrix, FirstOrderSystemWithParameter) {
  Ring r{{"x"}, {"a"}};
  OpMatrix d1 = parse_matrix({"d(n1) - a*n2 - d(n3)", "n1 - d(n2) + d(n3)"}, r, {"n1", "n2", "n3"});
  OpMatrix expected = parse_matrix({"-d(l1) + l2", "-a*l1 + d(l2)", "d(l1) - d(l2)"}, r, {"l1", "l2"});
  EXPECT_EQ(adjoint_matrix(d1), expected);
}

TEST(AdjointMatrix, Kalman) {
  // rows -d y^k + A y + B u ;  adjoint: d lambda + lambda A on y, lambda B on u
  std::vector<std::vector<RatFunc>> a{{0, 1}, {-2, 3}}, b{{0}, {1}};
  OpMatrix k = kalman(a, b);
  Ring r = default_ring(1);
  OpMatrix expected = parse_matrix({"d[1](l1) - 2*l2", "l1 + d[1](l2) + 3*l2", "l2"}, r, {"l1", "l2"});
  EXPECT_EQ(adjoint_matrix(k), expected);
}

TEST(AdjointMatrix, IdentityIsFixed) { EXPECT_EQ(adjoint_matrix(OpMatrix::identity(1, 2)), OpMatrix::identity(1, 2)); }

TEST(Apply, Examples) {
  OpMatrix grad = parse_matrix({"d[1](f)", "d[2](f)"}, default_ring(2), {"f"});
  auto g = apply(grad, {x(1) * x(2)});
  EXPECT_EQ(g, (std::vector<RatFunc>{x(2), x(1)}));

  auto s = apply(airy(), {x(1) * x(1) * x(2) * x(2)});
  EXPECT_EQ(s, (std::vector<RatFunc>{RatFunc(2) * x(1) * x(1), RatFunc(-4) * x(1) * x(2), RatFunc(2) * x(2) * x(2)}));

  auto k = apply(killing(Metric::euclidean(2)), {x(2), -x(1)});
  for (auto& v : k) EXPECT_TRUE(v.is_zero());
}

TEST(Apply, DimensionMismatch) { EXPECT_THROW(apply(airy(), {x(1), x(2)}), Error); }

TEST(Lclm, Examples) {
  Lclm same = lclm(D(1, 1), D(1, 1), 3);
  EXPECT_EQ(same.order, 0);
  EXPECT_EQ(same.u * D(1, 1), same.v * D(1, 1));

  OreOp dm1 = D(1, 1) - C(1, 1);
  Lclm l = lclm(D(1, 1), dm1, 3);
  EXPECT_EQ(l.order, 1);
  EXPECT_EQ(l.u * D(1, 1), l.v * dm1);

  Lclm lx = lclm(D(1, 1), C(1, x(1)), 3);
  EXPECT_LE(lx.order, 2);
  EXPECT_FALSE(lx.u.is_zero());
  EXPECT_EQ(lx.u * D(1, 1), lx.v * C(1, x(1)));
}

TEST(Lclm, BoundExceeded) {
  // x d and d^2 + x need an order-2 multiplier at least
  OreOp p = C(1, x(1)) * D(1, 1), q = D(1, 1) * D(1, 1) * D(1, 1) + C(1, x(1));
  try {
    lclm(p, q, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "BoundExceeded");
  }
}

TEST(Lclm, RandomPairsSatisfyIdentity) {
  oracle::Rng rng(11);
  for (int k = 0; k < 15; ++k) {
    int n = rng.uniform(1, 2);
    OreOp p = oracle::random_op(rng, n, 2, 1, false), q = oracle::random_op(rng, n, 2, 1, false);
    if (p.is_zero() || q.is_zero()) continue;
    Lclm l = lclm(p, q, 6);
    EXPECT_FALSE(l.u.is_zero());
    EXPECT_EQ(l.u * p - l.v * q, OreOp(n));
  }
}

TEST(TransformAffine, Identity) {
  OpMatrix a = fixture("example_1_7").decl.ops;
  AffineMap id{{{1, 0}, {0, 1}}, {0, 0}};
  EXPECT_EQ(transform_affine(a, id), a);
}

TEST(TransformAffine, CommutesWithAdjoint) {
  OpMatrix a = fixture("example_1_2").decl.ops;
  AffineMap twice{{{2}}, {0}};
  EXPECT_EQ(transform_affine(adjoint_matrix(a), twice), adjoint_matrix(transform_affine(a, twice)));

  OpMatrix b = fixture("example_1_7").decl.ops;
  AffineMap shear{{{1, 2}, {-1, 3}}, {Q(1, 2), 4}};
  EXPECT_EQ(transform_affine(adjoint_matrix(b), shear), adjoint_matrix(transform_affine(b, shear)));
}

TEST(TransformAffine, Singular) {
  AffineMap bad{{{1, 2}, {2, 4}}, {0, 0}};
  try {
    transform_affine(fixture("example_1_7").decl.ops, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), "SingularMap");
  }
}

TEST(TransformAffine, MaxwellInvolutiveForm) {
  // x3 -> x3 + x2 + x1 turns the Maxwell potentials into an involutive system
  AffineMap m{{{1, 0, 0}, {0, 1, 0}, {1, 1, 1}}, {0, 0, 0}};
  OpMatrix t = transform_affine(maxwell_potentials(), m);
  OpMatrix printed = parse_matrix({"d[3,3](C) + d[1,3](C) + d[2,3](C) + d[1,2](C)", "d[3,3](B) + d[1,3](B)",
                                   "d[3,3](A) + d[2,3](A)", "d[2,3](C) + d[2,2](C) - d[1,3](C) - d[1,3](B) - d[1,2](C)",
                                   "d[2,3](A) - d[2,2](C) + d[1,3](B) + 2*d[1,2](C) - d[1,1](C)",
                                   "d[2,2](A) + d[2,2](C) - 2*d[1,2](C) + d[1,1](C) + d[1,1](B)"},
                                  default_ring(3), {"A", "B", "C"});
  EXPECT_TRUE(row_module_equal(t, printed, 0));
}

// ---- properties ----------------------------------------------------------------

class OreProperty : public ::testing::TestWithParam<int> {};

TEST_P(OreProperty, AdjointInvolutiveAndAntiMultiplicative) {
  oracle::Rng rng(100 + GetParam());
  int n = rng.uniform(1, 3);
  OreOp p = oracle::random_op(rng, n, 3, 2), q = oracle::random_op(rng, n, 3, 2);
  EXPECT_EQ(adjoint(adjoint(p)), p);
  EXPECT_EQ(adjoint(p * q), adjoint(q) * adjoint(p));
}

TEST_P(OreProperty, AssociativeAndDistributive) {
  oracle::Rng rng(200 + GetParam());
  int n = rng.uniform(1, 3);
  OreOp p = oracle::random_op(rng, n, 2, 1), q = oracle::random_op(rng, n, 2, 1), r = oracle::random_op(rng, n, 2, 1);
  EXPECT_EQ((p * q) * r, p * (q * r));
  EXPECT_EQ(p * (q + r), p * q + p * r);
  EXPECT_EQ((p + q) * r, p * r + q * r);
}

TEST_P(OreProperty, ApplyIsComposition) {
  oracle::Rng rng(300 + GetParam());
  int n = rng.uniform(1, 3);
  OreOp p = oracle::random_op(rng, n, 2, 2), q = oracle::random_op(rng, n, 2, 2);
  RatFunc f = oracle::random_ratfunc(rng, n, 3);
  EXPECT_EQ((p * q).apply(f), p.apply(q.apply(f)));
}

TEST_P(OreProperty, IntegrationByParts) {
  // g (P f) - (ad(P) g) f is d/dx of a polynomial for polynomial data
  oracle::Rng rng(400 + GetParam());
  OreOp p = oracle::random_op(rng, 1, 3, 2, false);
  RatFunc f(oracle::random_poly(rng, 1, 4)), g(oracle::random_poly(rng, 1, 4));
  RatFunc w = g * p.apply(f) - adjoint(p).apply(g) * f;
  ASSERT_TRUE(w.den() == Poly(1));
  Poly anti = oracle::integrate_x(w.num());
  EXPECT_EQ(RatFunc(anti.derivative(0)), w);
}

TEST_P(OreProperty, MatrixAdjointLaws) {
  oracle::Rng rng(500 + GetParam());
  int n = rng.uniform(1, 2), p = rng.uniform(1, 3), m = rng.uniform(1, 3), k = rng.uniform(1, 3);
  OpMatrix a(p, m, n), b(m, k, n);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < m; ++j) a.at(i, j) = oracle::random_op(rng, n, 2, 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) b.at(i, j) = oracle::random_op(rng, n, 2, 1);
  EXPECT_EQ(adjoint_matrix(adjoint_matrix(a)), a);
  EXPECT_EQ(adjoint_matrix(a * b), adjoint_matrix(b) * adjoint_matrix(a));
}

TEST_P(OreProperty, TransformCommutesWithAdjoint) {
  oracle::Rng rng(600 + GetParam());
  OpMatrix a(2, 2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a.at(i, j) = oracle::random_op(rng, 2, 2, 1, false);
  AffineMap m{{{rng.uniform(1, 3), rng.uniform(-2, 2)}, {0, rng.uniform(1, 3)}}, {rng.uniform(-2, 2), 0}};
  EXPECT_EQ(transform_affine(adjoint_matrix(a), m), adjoint_matrix(transform_affine(a, m)));
}

INSTANTIATE_TEST_SUITE_P(Random, OreProperty, ::testing::Range(0, 40));

}  // namespace
}  // namespace dmod
