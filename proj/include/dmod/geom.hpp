// Named operators over flat diagonal metrics and the fixture registry.
//
// Symmetric 2-tensors are stored by components (ij), i <= j, in the order
// (11) < (12) < ... < (1n) < (22) < ... < (nn).  Off-diagonal components count
// twice in the pairing sigma^{ij} Omega_ij, which is what s2_weights records.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dmod/dsl.hpp"
#include "dmod/janet.hpp"

namespace dmod {

struct Metric {
  std::vector<int> sig;  // diagonal entries, each +1 or -1

  int n() const { return static_cast<int>(sig.size()); }
  static Metric euclidean(int n) { return {std::vector<int>(n, 1)}; }
  static Metric minkowski(int n);  // (+, ..., +, -)
};

int s2_dim(int n);
int s2_index(int n, int i, int j);  // 0-based i, j in any order
std::vector<std::pair<int, int>> s2_pairs(int n);
std::vector<Q> s2_weights(int n);  // 1 on the diagonal, 2 off it
// s2_weights times w^{ii} w^{jj}: pairs a lower-index tensor with itself through the metric
std::vector<Q> s2_pairing(const Metric& w);

// W_col^{-1} ad(A) W_row: the adjoint for weighted duality pairings
OpMatrix weighted_adjoint(const OpMatrix& a, const std::vector<Q>& row_w, const std::vector<Q>& col_w);

OpMatrix killing(const Metric& w);            // S2 rows x n columns
OpMatrix conformal_killing(const Metric& w);  // Killing minus trace, last diagonal row dropped
OpMatrix cauchy(int n);                       // n rows: sum_i d_i sigma^{ik}
OpMatrix riemann_lin(int n);                  // rows -2 R_{ijkl}, independent components only
std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> riemann_components(int n);
OpMatrix ricci_lin(const Metric& w);          // R_ij
OpMatrix ricci_trace(const Metric& w);        // 1 x S2: tr R
OpMatrix einstein_lin(const Metric& w);       // R_ij - 1/2 w_ij tr R
OpMatrix div_op(const Metric& w);             // (div E)_j = w^{ii} d_i E_ij
// the printed operator lambda -> sigma, box lambda^{rs} + w^{rs} d_ij lambda^{ij} - ...
OpMatrix ad_ricci_printed(const Metric& w);

OpMatrix airy();                 // 3 x 1, n = 2
OpMatrix beltrami();             // 6 x 6, n = 3, rows sigma, columns phi
OpMatrix maxwell_potentials();   // Beltrami columns 11, 22, 33
OpMatrix morera_potentials();    // Beltrami columns 12, 13, 23
OpMatrix einstein_printed();     // the 6 x 6 symmetric matrix, n = 3
OpMatrix cosserat();             // n = 2, unknowns s11, s12, s21, s22, m1, m2
OpMatrix cosserat_potentials();  // 6 x 3 first-order parametrization

// infinitesimal conformal generators: translations, rotations, dilatation, elations
std::vector<std::vector<RatFunc>> conformal_generators(const Metric& w);

OpMatrix kalman(const std::vector<std::vector<RatFunc>>& a, const std::vector<std::vector<RatFunc>>& b);

struct Dims {
  long s_q, j_q;  // dim S_q T*, dim J_q(E)
};
Dims dims(int n, int m, int q);
long euler_characteristic(const std::vector<long>& fibers);
// n, n(n+1)/2, n^2(n^2-1)/12, n^2(n^2-1)(n-2)/24
std::vector<long> killing_sequence_fibers(int n);

// ---- fixtures -------------------------------------------------------------------

struct NamedOperator {
  std::string id;
  std::string title;
  SystemDecl decl;
};

std::vector<std::string> fixture_ids();
NamedOperator fixture(const std::string& id);  // throws UnknownFixture

}  // namespace dmod
