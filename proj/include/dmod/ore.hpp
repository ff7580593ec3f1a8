// The ring D = K[d1..dn] of linear differential operators and matrices over it.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmod/field.hpp"

namespace dmod {

struct MultiIndex {
  std::vector<int> a;

  MultiIndex() = default;
  explicit MultiIndex(int n) : a(n, 0) {}
  explicit MultiIndex(std::vector<int> v) : a(std::move(v)) {}
  static MultiIndex unit(int n, int i);  // 1_i, i in 0..n-1

  int n() const { return static_cast<int>(a.size()); }
  int order() const;
  int operator[](int i) const { return a[i]; }
  MultiIndex operator+(const MultiIndex& o) const;
  MultiIndex operator-(const MultiIndex& o) const;
  bool leq(const MultiIndex& o) const;  // componentwise
  bool operator==(const MultiIndex& o) const { return a == o.a; }
  // graded, then lexicographic: d_{11} > d_{12} > d_{22} > d_1 > d_2 > 1
  bool operator<(const MultiIndex& o) const;
};

// All multi-indices of the given order, in decreasing order.
std::vector<MultiIndex> multi_indices(int n, int order);
// All multi-indices with order <= max, decreasing.
std::vector<MultiIndex> multi_indices_upto(int n, int max);

class OreOp {
 public:
  using Terms = std::map<MultiIndex, RatFunc>;

  OreOp() = default;
  explicit OreOp(int n) : n_(n) {}
  OreOp(int n, const RatFunc& c);  // zero-order operator
  static OreOp d(int n, const MultiIndex& mu, const RatFunc& c = RatFunc(1));
  static OreOp d(int n, int i);  // d_i, i in 1..n

  int n() const { return n_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  int order() const;  // -1 stands for minus infinity
  RatFunc coeff(const MultiIndex& mu) const;
  void add_term(const MultiIndex& mu, const RatFunc& c);
  // leading coefficient: coefficient of the largest multi-index
  const RatFunc& lead_coeff() const { return t_.rbegin()->second; }

  OreOp operator+(const OreOp& o) const;
  OreOp operator-(const OreOp& o) const;
  OreOp operator-() const;
  OreOp operator*(const OreOp& o) const;  // composition
  OreOp scaled(const RatFunc& c) const;    // c * P (left multiplication)
  bool operator==(const OreOp& o) const { return n_ == o.n_ && t_ == o.t_; }
  bool operator!=(const OreOp& o) const { return !(*this == o); }

  // d_i * P
  OreOp left_d(int i) const;  // i in 0..n-1
  RatFunc apply(const RatFunc& f) const;
  bool constant_coefficients() const;
  OreOp substitute(const std::vector<const RatFunc*>& images) const;

 private:
  int n_ = 0;
  Terms t_;
};

OreOp op_mul(const OreOp& p, const OreOp& q);
OreOp adjoint(const OreOp& p);

class OpMatrix {
 public:
  OpMatrix() = default;
  OpMatrix(int rows, int cols, int n);
  static OpMatrix identity(int size, int n);
  static OpMatrix from_rows(const std::vector<std::vector<OreOp>>& rows, int cols, int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int n() const { return n_; }
  OreOp& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const OreOp& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }
  std::vector<OreOp> row(int i) const;
  OpMatrix row_block(const std::vector<int>& idx) const;
  OpMatrix col_block(const std::vector<int>& idx) const;
  void append_row(const std::vector<OreOp>& r);
  int order() const;
  bool is_zero() const;
  bool constant_coefficients() const;

  OpMatrix operator*(const OpMatrix& o) const;
  OpMatrix operator+(const OpMatrix& o) const;
  OpMatrix operator-(const OpMatrix& o) const;
  bool operator==(const OpMatrix& o) const;
  bool operator!=(const OpMatrix& o) const { return !(*this == o); }
  OpMatrix substitute(const std::vector<const RatFunc*>& images) const;

 private:
  int rows_ = 0, cols_ = 0, n_ = 0;
  std::vector<OreOp> e_;
};

OpMatrix adjoint_matrix(const OpMatrix& a);
// diag(left) * A * diag(right) with rational scalars
OpMatrix scale(const OpMatrix& a, const std::vector<RatFunc>& left, const std::vector<RatFunc>& right);
std::vector<RatFunc> apply(const OpMatrix& a, const std::vector<RatFunc>& f);

struct Lclm {
  OreOp u, v;  // u * p == v * q
  int order;
};
Lclm lclm(const OreOp& p, const OreOp& q, int max_order);

// x_bar = M x + c, M invertible
struct AffineMap {
  std::vector<std::vector<Q>> m;
  std::vector<Q> c;
};
OpMatrix transform_affine(const OpMatrix& a, const AffineMap& map);

// Canonical text form: terms by multi-index descending, "coeff*d[i,j](u)".
std::string to_string(const OreOp& p, const Ring& ring, const std::string& unknown);
std::string row_to_string(const std::vector<OreOp>& row, const Ring& ring,
                          const std::vector<std::string>& unknowns);

}  // namespace dmod
