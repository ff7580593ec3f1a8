// Sparse exact linear algebra over K, keyed by 64-bit column keys.
#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dmod/field.hpp"
#include "dmod/ore.hpp"

namespace dmod {

using Key = uint64_t;
using SparseVec = std::vector<std::pair<Key, RatFunc>>;  // strictly increasing keys

// v - f * w
SparseVec axpy(const SparseVec& v, const RatFunc& f, const SparseVec& w);
SparseVec scaled(const SparseVec& v, const RatFunc& f);
RatFunc get(const SparseVec& v, Key k);

// Column keys for jets y^k_mu.  Smaller keys come first: higher order first,
// then unknown index, then mu lexicographically increasing, so that among
// jets of one order the later variables lead (y_23 before y_11).
class JetCoder {
 public:
  explicit JetCoder(int n);
  Key key(int k, const MultiIndex& mu) const;
  int unknown(Key key) const;
  MultiIndex index(Key key) const;
  int order(Key key) const;

 private:
  int n_;
  int bits_;
};

// Row echelon form built one vector at a time.  Each stored row has a
// leading entry 1 and carries the combination of inserted vectors it came from.
class Echelon {
 public:
  struct Row {
    SparseVec v;
    SparseVec comb;
  };

  // reduce by leading entries; stops at the first non-pivot leading key
  std::pair<SparseVec, SparseVec> reduce(SparseVec v, SparseVec comb) const;
  bool contains(const SparseVec& v) const;
  // inserts v; returns the combination if v was already in the span
  std::optional<SparseVec> insert(SparseVec v, SparseVec comb = {});
  // reduce every pivot column out of v
  SparseVec full_reduce(SparseVec v) const;

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<Row>& rows() const { return rows_; }
  bool is_pivot(Key k) const { return lead_.count(k) > 0; }

 private:
  std::vector<Row> rows_;
  std::unordered_map<Key, size_t> lead_;
};

// Dense helpers over Q used by the symbol machinery.
using QMatrix = std::vector<std::vector<Q>>;
int rank(const QMatrix& m);
// basis of {v : m v = 0}, ncols given for the empty-matrix case
QMatrix nullspace(const QMatrix& m, int ncols);

}  // namespace dmod
