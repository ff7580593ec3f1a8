// Jet-level linear algebra: prolongation, compatibility conditions,
// membership, ranks over D, projection chains, Spencer form and delta maps.
#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dmod/linalg.hpp"
#include "dmod/ore.hpp"

namespace dmod {

using Jet = std::pair<int, MultiIndex>;  // (unknown k, mu)

// Coefficients of an operator row on the jets y^k_mu.
SparseVec jet_vector(const std::vector<OreOp>& row, const JetCoder& coder);
std::vector<OreOp> row_from_jets(const SparseVec& v, const JetCoder& coder, int width, int n);

struct JetMatrix {
  int n = 0, p = 0, m = 0, q = 0, r = 0;
  std::vector<Jet> row_ids;  // (equation tau, nu), |nu| <= r
  std::vector<Jet> col_ids;  // (unknown k, mu), |mu| <= q + r
  std::vector<std::vector<RatFunc>> entries;
};
JetMatrix prolong(const OpMatrix& a, int r);

// Incremental prolongation of a set of generator rows: inserts d_lambda g_i
// level by level into an echelon form and reports the left syzygies found.
class Prolongator {
 public:
  // by_jet_order: level L holds d_lambda g_i up to total jet order ord(gens)+L,
  // otherwise |lambda| <= L for every generator
  explicit Prolongator(const OpMatrix& gens, bool by_jet_order = false);
  // add all rows up to the level; returns new kernel combinations
  std::vector<SparseVec> extend_to(int level);
  int level() const { return level_; }
  // row = sum P_i g_i with ord P_i <= level()?  returns the P_i
  std::optional<std::vector<OreOp>> express(const std::vector<OreOp>& row) const;
  // kernel combination -> operator row over the generators
  std::vector<OreOp> combination_row(const SparseVec& comb) const;
  const Echelon& echelon() const { return ech_; }
  const JetCoder& jets() const { return jet_; }
  const JetCoder& labels() const { return lab_; }
  const OpMatrix& gens() const { return g_; }

 private:
  OpMatrix g_;
  JetCoder jet_, lab_;
  Echelon ech_;
  int level_ = -1;
  std::vector<int> shift_;
  std::vector<int> done_;  // highest |lambda| inserted per generator
  std::vector<std::map<MultiIndex, std::vector<OreOp>>> layer_;  // rows with |lambda| == done_
};

struct CCResult {
  OpMatrix cc;
  int search_order = 0;
  bool certified_complete = false;
  int rank_a = 0, rank_cc = 0;
  std::vector<int> orders;  // order of each generator row
};
// extra: orders searched past the first certified order
CCResult cc(const OpMatrix& a, int max_order, int extra = 1);

struct Membership {
  bool member = false;
  std::vector<OreOp> coeffs;  // row = sum coeffs[i] * gens[i]
  int order = -1;             // multiplier order where membership was found
};
Membership membership(const std::vector<OreOp>& row, const OpMatrix& gens, int max_order);
// every row of b lies in the row module of a (multipliers of order <= bound)
bool rows_in_module(const OpMatrix& b, const OpMatrix& a, int bound);

int rank_D(const OpMatrix& a, int max_order);

// [dim J_{q+r}, dim R_{q+r}^{(0)}, ..., dim R_{q+r}^{(s)}]
std::vector<int> pp_reduce(const OpMatrix& a, int r, int s);

struct SpencerForm {
  OpMatrix system;          // first-order system in the parametric jets
  std::vector<Jet> jets;    // z^alpha = y^k_mu
  int order = 0;            // highest order of a parametric jet
  int solution_dim = 0;
};
SpencerForm spencerize(const OpMatrix& a, int max_q);
// Equivalent first-order presentation with the jets of order < q as unknowns.
OpMatrix first_order_reduction(const OpMatrix& a);

// Successive compatibility operators a, cc(a), cc(cc(a)), ...
std::vector<OpMatrix> resolution(const OpMatrix& a, int length, int max_order);

// ---- constant-coefficient symbols -------------------------------------------

class SymbolTableau {
 public:
  SymbolTableau(int n, int m, int q, QMatrix eqs);
  // top-order symbol of a constant-coefficient operator (rows of maximal order)
  static SymbolTableau from_operator(const OpMatrix& a);

  int n() const { return n_; }
  int m() const { return m_; }
  int q() const { return q_; }
  const QMatrix& equations() const { return eqs_; }
  int coords(int t) const;           // dim S_t T* (x) E
  int coord(int k, const MultiIndex& mu) const;
  QMatrix equations_at(int t) const;  // prolonged equations on S_t (x) E
  QMatrix basis(int t) const;         // basis of g_t
  int dim(int t) const { return static_cast<int>(basis(t).size()); }

 private:
  int n_, m_, q_;
  QMatrix eqs_;
};

// Matrix of delta : Lambda^r T* (x) g_t -> Lambda^{r+1} T* (x) S_{t-1} T* (x) E.
// Columns: basis of the source (subset I, basis vector b); rows: target coordinates.
QMatrix delta_map(const SymbolTableau& tab, int t, int r);
// Same map on the full spaces Lambda^r (x) S_t (x) E (no symbol restriction).
QMatrix delta_full(int n, int m, int t, int r);

struct DeltaDims {
  int t, r;
  int b, z, h;  // coboundaries, cocycles, cohomology at Lambda^r (x) g_t
};
std::vector<DeltaDims> delta_cohomology_dims(const SymbolTableau& tab, const std::vector<int>& t_range,
                                             const std::vector<int>& r_range);

// dim C_r = C(n,r) dim R_q - rank delta(Lambda^{r-1} (x) g_{q+1}), r = 0..n
std::vector<int> spencer_fibers(const SymbolTableau& tab, int q, int dim_rq);

}  // namespace dmod
