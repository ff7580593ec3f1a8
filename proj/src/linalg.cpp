#include "dmod/linalg.hpp"

#include <algorithm>

namespace dmod {

SparseVec axpy(const SparseVec& v, const RatFunc& f, const SparseVec& w) {
  if (f.is_zero()) return v;
  SparseVec r;
  r.reserve(v.size() + w.size());
  size_t i = 0, j = 0;
  while (i < v.size() || j < w.size()) {
    if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
      r.push_back(v[i++]);
    } else if (i == v.size() || w[j].first < v[i].first) {
      r.emplace_back(w[j].first, -(f * w[j].second));
      ++j;
    } else {
      RatFunc c = v[i].second - f * w[j].second;
      if (!c.is_zero()) r.emplace_back(v[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

SparseVec scaled(const SparseVec& v, const RatFunc& f) {
  SparseVec r;
  if (f.is_zero()) return r;
  r.reserve(v.size());
  for (auto& [k, c] : v) r.emplace_back(k, f * c);
  return r;
}

RatFunc get(const SparseVec& v, Key k) {
  auto it = std::lower_bound(v.begin(), v.end(), k,
                             [](const std::pair<Key, RatFunc>& e, Key x) { return e.first < x; });
  return (it != v.end() && it->first == k) ? it->second : RatFunc();
}

// ---- jet keys ----------------------------------------------------------------

namespace {
constexpr int kOrderShift = 57;
constexpr int kUnknownShift = 44;
constexpr Key kMaxOrder = 127;
}  // namespace

JetCoder::JetCoder(int n) : n_(n), bits_(n > 0 ? 44 / n : 44) {
  if (n > 8) throw Error("DimensionMismatch", "at most 8 independent variables are supported");
}

Key JetCoder::key(int k, const MultiIndex& mu) const {
  Key code = 0;
  int ord = 0;
  for (int i = 0; i < n_; ++i) {
    if (mu[i] >= (1 << bits_)) throw Error("BoundExceeded", "jet order too large for the column encoding");
    code = (code << bits_) | static_cast<Key>(mu[i]);
    ord += mu[i];
  }
  if (ord >= static_cast<int>(kMaxOrder) || k >= (1 << 13))
    throw Error("BoundExceeded", "jet order or unknown count too large");
  return ((kMaxOrder - ord) << kOrderShift) | (static_cast<Key>(k) << kUnknownShift) | code;
}

int JetCoder::unknown(Key key) const { return static_cast<int>((key >> kUnknownShift) & 0x1fff); }

int JetCoder::order(Key key) const { return static_cast<int>(kMaxOrder - (key >> kOrderShift)); }

MultiIndex JetCoder::index(Key key) const {
  MultiIndex mu(n_);
  Key code = key & ((Key(1) << kUnknownShift) - 1);
  Key mask = (Key(1) << bits_) - 1;
  for (int i = n_ - 1; i >= 0; --i) {
    mu.a[i] = static_cast<int>(code & mask);
    code >>= bits_;
  }
  return mu;
}

// ---- echelon -------------------------------------------------------------------

std::pair<SparseVec, SparseVec> Echelon::reduce(SparseVec v, SparseVec comb) const {
  while (!v.empty()) {
    auto it = lead_.find(v.front().first);
    if (it == lead_.end()) break;
    const Row& r = rows_[it->second];
    RatFunc f = v.front().second;
    v = axpy(v, f, r.v);
    if (!r.comb.empty() || !comb.empty()) comb = axpy(comb, f, r.comb);
  }
  return {std::move(v), std::move(comb)};
}

bool Echelon::contains(const SparseVec& v) const { return reduce(v, {}).first.empty(); }

std::optional<SparseVec> Echelon::insert(SparseVec v, SparseVec comb) {
  auto [rem, c] = reduce(std::move(v), std::move(comb));
  if (rem.empty()) return c;
  RatFunc inv = RatFunc(1) / rem.front().second;
  if (!inv.is_one()) {
    rem = scaled(rem, inv);
    c = scaled(c, inv);
  }
  lead_.emplace(rem.front().first, rows_.size());
  rows_.push_back({std::move(rem), std::move(c)});
  return std::nullopt;
}

SparseVec Echelon::full_reduce(SparseVec v) const {
  size_t i = 0;
  while (i < v.size()) {
    auto it = lead_.find(v[i].first);
    if (it == lead_.end()) {
      ++i;
      continue;
    }
    RatFunc f = v[i].second;
    v = axpy(v, f, rows_[it->second].v);  // removes entry i, touches only later keys
  }
  return v;
}

// ---- dense rational helpers ------------------------------------------------

namespace {
// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(QMatrix& m, int ncols) {
  std::vector<int> piv;
  int r = 0;
  int rows = static_cast<int>(m.size());
  for (int c = 0; c < ncols && r < rows; ++c) {
    int p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Q s = 1 / m[r][c];
    for (int j = c; j < ncols; ++j) m[r][j] *= s;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Q f = m[i][c];
      for (int j = c; j < ncols; ++j)
        if (m[r][j] != 0) m[i][j] -= f * m[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}
}  // namespace

int rank(const QMatrix& m) {
  if (m.empty()) return 0;
  QMatrix a = m;
  return static_cast<int>(rref(a, static_cast<int>(a[0].size())).size());
}

QMatrix nullspace(const QMatrix& m, int ncols) {
  QMatrix a = m;
  std::vector<int> piv = rref(a, ncols);
  std::vector<bool> is_piv(ncols, false);
  for (int c : piv) is_piv[c] = true;
  QMatrix basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    std::vector<Q> v(ncols, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace dmod
