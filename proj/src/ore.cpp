#include "dmod/ore.hpp"

#include <algorithm>
#include <sstream>

namespace dmod {

// ---- multi-indices ---------------------------------------------------------

MultiIndex MultiIndex::unit(int n, int i) {
  MultiIndex m(n);
  m.a[i] = 1;
  return m;
}

int MultiIndex::order() const {
  int s = 0;
  for (int x : a) s += x;
  return s;
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  MultiIndex r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] += o.a[i];
  return r;
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  MultiIndex r = *this;
  for (size_t i = 0; i < a.size(); ++i) r.a[i] -= o.a[i];
  return r;
}

bool MultiIndex::leq(const MultiIndex& o) const {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > o.a[i]) return false;
  return true;
}

bool MultiIndex::operator<(const MultiIndex& o) const {
  int p = order(), q = o.order();
  if (p != q) return p < q;
  return a < o.a;
}

namespace {
void gen(int n, int i, int left, std::vector<int>& cur, std::vector<MultiIndex>& out) {
  if (i == n - 1) {
    cur[i] = left;
    out.emplace_back(cur);
    return;
  }
  for (int k = left; k >= 0; --k) {
    cur[i] = k;
    gen(n, i + 1, left - k, cur, out);
  }
}

Q binom(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Q(r);
}

Q multi_binom(const MultiIndex& mu, const MultiIndex& la) {
  Q r = 1;
  for (int i = 0; i < mu.n(); ++i) r *= binom(mu[i], la[i]);
  return r;
}

// all lambda <= mu
std::vector<MultiIndex> below(const MultiIndex& mu) {
  std::vector<MultiIndex> out{MultiIndex(mu.n())};
  for (int i = 0; i < mu.n(); ++i) {
    std::vector<MultiIndex> next;
    for (auto& m : out)
      for (int k = 0; k <= mu[i]; ++k) {
        MultiIndex t = m;
        t.a[i] = k;
        next.push_back(t);
      }
    out.swap(next);
  }
  return out;
}

// repeated partial derivatives of one coefficient, memoized
class DerivCache {
 public:
  DerivCache(const RatFunc& f, int n) { cache_.emplace(MultiIndex(n), f); }
  const RatFunc& get(const MultiIndex& k) {
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    int i = 0;
    while (k[i] == 0) ++i;
    MultiIndex prev = k;
    prev.a[i] -= 1;
    RatFunc v = get(prev).derivative(i);
    return cache_.emplace(k, std::move(v)).first->second;
  }

 private:
  std::map<MultiIndex, RatFunc> cache_;
};
}  // namespace

std::vector<MultiIndex> multi_indices(int n, int order) {
  std::vector<MultiIndex> out;
  if (n == 0) {
    if (order == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> cur(n, 0);
  gen(n, 0, order, cur, out);
  return out;
}

std::vector<MultiIndex> multi_indices_upto(int n, int max) {
  std::vector<MultiIndex> out;
  for (int r = max; r >= 0; --r) {
    auto v = multi_indices(n, r);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

// ---- operators -------------------------------------------------------------

OreOp::OreOp(int n, const RatFunc& c) : n_(n) {
  if (!c.is_zero()) t_.emplace(MultiIndex(n), c);
}

OreOp OreOp::d(int n, const MultiIndex& mu, const RatFunc& c) {
  OreOp p(n);
  p.add_term(mu, c);
  return p;
}

OreOp OreOp::d(int n, int i) {
  if (i < 1 || i > n) throw Error("IndexOutOfRange", "derivation index " + std::to_string(i));
  return d(n, MultiIndex::unit(n, i - 1));
}

int OreOp::order() const { return t_.empty() ? -1 : t_.rbegin()->first.order(); }

RatFunc OreOp::coeff(const MultiIndex& mu) const {
  auto it = t_.find(mu);
  return it == t_.end() ? RatFunc() : it->second;
}

void OreOp::add_term(const MultiIndex& mu, const RatFunc& c) {
  if (c.is_zero()) return;
  auto it = t_.find(mu);
  if (it == t_.end()) {
    t_.emplace(mu, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

OreOp OreOp::operator+(const OreOp& o) const {
  OreOp r = *this;
  if (r.n_ == 0) r.n_ = o.n_;
  for (auto& [mu, c] : o.t_) r.add_term(mu, c);
  return r;
}

OreOp OreOp::operator-() const {
  OreOp r = *this;
  for (auto& [mu, c] : r.t_) c = -c;
  return r;
}

OreOp OreOp::operator-(const OreOp& o) const { return *this + (-o); }

OreOp OreOp::scaled(const RatFunc& c) const {
  OreOp r(n_);
  if (c.is_zero()) return r;
  for (auto& [mu, a] : t_) r.t_.emplace(mu, c * a);
  return r;
}

OreOp OreOp::operator*(const OreOp& o) const {
  if (n_ != o.n_ && !is_zero() && !o.is_zero())
    throw Error("DimensionMismatch", "operators over different numbers of variables");
  int n = std::max(n_, o.n_);
  OreOp r(n);
  if (is_zero() || o.is_zero()) return r;
  for (auto& [nu, b] : o.t_) {
    DerivCache db(b, n);
    for (auto& [mu, a] : t_) {
      for (auto& la : below(mu)) {
        const RatFunc& db_k = db.get(mu - la);
        if (db_k.is_zero()) continue;
        RatFunc c = a * db_k;
        Q bc = multi_binom(mu, la);
        if (bc != 1) c = c * RatFunc(bc);
        r.add_term(la + nu, c);
      }
    }
  }
  return r;
}

OreOp OreOp::left_d(int i) const {
  OreOp r(n_);
  for (auto& [mu, a] : t_) {
    r.add_term(mu + MultiIndex::unit(n_, i), a);
    r.add_term(mu, a.derivative(i));
  }
  return r;
}

RatFunc OreOp::apply(const RatFunc& f) const {
  DerivCache df(f, n_);
  RatFunc s;
  for (auto& [mu, a] : t_) s += a * df.get(mu);
  return s;
}

bool OreOp::constant_coefficients() const {
  for (auto& [mu, a] : t_)
    if (!a.is_constant_in(n_)) return false;
  return true;
}

OreOp OreOp::substitute(const std::vector<const RatFunc*>& images) const {
  OreOp r(n_);
  for (auto& [mu, a] : t_) r.add_term(mu, a.substitute(images));
  return r;
}

OreOp op_mul(const OreOp& p, const OreOp& q) { return p * q; }

OreOp adjoint(const OreOp& p) {
  OreOp r(p.n());
  for (auto& [mu, a] : p.terms()) {
    DerivCache da(a, p.n());
    bool odd = mu.order() % 2 != 0;
    for (auto& la : below(mu)) {
      const RatFunc& dk = da.get(mu - la);
      if (dk.is_zero()) continue;
      Q c = multi_binom(mu, la);
      if (odd) c = -c;
      r.add_term(la, dk * RatFunc(c));
    }
  }
  return r;
}

// ---- matrices --------------------------------------------------------------

OpMatrix::OpMatrix(int rows, int cols, int n)
    : rows_(rows), cols_(cols), n_(n), e_(static_cast<size_t>(rows) * cols, OreOp(n)) {}

OpMatrix OpMatrix::identity(int size, int n) {
  OpMatrix m(size, size, n);
  for (int i = 0; i < size; ++i) m.at(i, i) = OreOp(n, RatFunc(1));
  return m;
}

OpMatrix OpMatrix::from_rows(const std::vector<std::vector<OreOp>>& rows, int cols, int n) {
  OpMatrix m(0, cols, n);
  for (auto& r : rows) m.append_row(r);
  return m;
}

std::vector<OreOp> OpMatrix::row(int i) const {
  return {e_.begin() + static_cast<long>(i) * cols_, e_.begin() + static_cast<long>(i + 1) * cols_};
}

OpMatrix OpMatrix::row_block(const std::vector<int>& idx) const {
  OpMatrix m(0, cols_, n_);
  for (int i : idx) m.append_row(row(i));
  return m;
}

OpMatrix OpMatrix::col_block(const std::vector<int>& idx) const {
  OpMatrix m(rows_, static_cast<int>(idx.size()), n_);
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) m.at(i, static_cast<int>(j)) = at(i, idx[j]);
  return m;
}

void OpMatrix::append_row(const std::vector<OreOp>& r) {
  if (static_cast<int>(r.size()) != cols_) throw Error("DimensionMismatch", "row width");
  for (auto& x : r) {
    OreOp y = x;
    if (y.is_zero()) y = OreOp(n_);
    e_.push_back(y);
  }
  ++rows_;
}

int OpMatrix::order() const {
  int o = -1;
  for (auto& x : e_) o = std::max(o, x.order());
  return o;
}

bool OpMatrix::is_zero() const {
  for (auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool OpMatrix::constant_coefficients() const {
  for (auto& x : e_)
    if (!x.constant_coefficients()) return false;
  return true;
}

OpMatrix OpMatrix::operator*(const OpMatrix& o) const {
  if (cols_ != o.rows_ || n_ != o.n_) throw Error("DimensionMismatch", "matrix product shapes");
  OpMatrix r(rows_, o.cols_, n_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const OreOp& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const OreOp& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) = r.at(i, j) + a * b;
      }
    }
  return r;
}

OpMatrix OpMatrix::operator+(const OpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("DimensionMismatch", "matrix sum shapes");
  OpMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + o.e_[i];
  return r;
}

OpMatrix OpMatrix::operator-(const OpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error("DimensionMismatch", "matrix sum shapes");
  OpMatrix r = *this;
  for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - o.e_[i];
  return r;
}

bool OpMatrix::operator==(const OpMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i].terms() != o.e_[i].terms()) return false;
  return true;
}

OpMatrix OpMatrix::substitute(const std::vector<const RatFunc*>& images) const {
  OpMatrix r = *this;
  for (auto& x : r.e_) x = x.substitute(images);
  return r;
}

OpMatrix adjoint_matrix(const OpMatrix& a) {
  OpMatrix r(a.cols(), a.rows(), a.n());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.at(j, i) = adjoint(a.at(i, j));
  return r;
}

OpMatrix scale(const OpMatrix& a, const std::vector<RatFunc>& left, const std::vector<RatFunc>& right) {
  OpMatrix r = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      OreOp x = a.at(i, j);
      if (!left.empty()) x = x.scaled(left[i]);
      if (!right.empty()) x = x * OreOp(a.n(), right[j]);
      r.at(i, j) = x;
    }
  return r;
}

std::vector<RatFunc> apply(const OpMatrix& a, const std::vector<RatFunc>& f) {
  if (static_cast<int>(f.size()) != a.cols()) throw Error("DimensionMismatch", "apply: vector length");
  std::vector<RatFunc> out(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out[i] += a.at(i, j).apply(f[j]);
  return out;
}

// ---- affine changes of coordinates -----------------------------------------

namespace {
std::vector<std::vector<Q>> invert(std::vector<std::vector<Q>> m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Q>> inv(n, std::vector<Q>(n, 0));
  for (int i = 0; i < n; ++i) inv[i][i] = 1;
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw Error("SingularMap", "affine map matrix is singular");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Q s = 1 / m[c][c];
    for (int j = 0; j < n; ++j) {
      m[c][j] *= s;
      inv[c][j] *= s;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Q f = m[r][c];
      for (int j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}
}  // namespace

OpMatrix transform_affine(const OpMatrix& a, const AffineMap& map) {
  int n = a.n();
  if (static_cast<int>(map.m.size()) != n) throw Error("DimensionMismatch", "affine map size");
  for (auto& row : map.m)
    if (static_cast<int>(row.size()) != n) throw Error("DimensionMismatch", "affine map size");
  auto inv = invert(map.m);
  std::vector<Q> c = map.c;
  c.resize(n, 0);
  // x = M^{-1} (x_bar - c)
  std::vector<RatFunc> img(n);
  std::vector<const RatFunc*> ptr(n);
  for (int k = 0; k < n; ++k) {
    Poly p;
    for (int l = 0; l < n; ++l) p = p + (Poly::var(l) - Poly(c[l])).scaled(inv[k][l]);
    img[k] = RatFunc(p);
    ptr[k] = &img[k];
  }
  // d_i = sum_j M_ji dbar_j
  std::vector<OreOp> dbar(n, OreOp(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (map.m[j][i] != 0) dbar[i].add_term(MultiIndex::unit(n, j), RatFunc(map.m[j][i]));
  std::map<MultiIndex, OreOp> dcache;
  auto dmu = [&](const MultiIndex& mu) {
    auto it = dcache.find(mu);
    if (it != dcache.end()) return it->second;
    OreOp r(n, RatFunc(1));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < mu[i]; ++k) r = r * dbar[i];
    dcache.emplace(mu, r);
    return r;
  };
  OpMatrix out(a.rows(), a.cols(), n);
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      OreOp acc(n);
      for (auto& [mu, coef] : a.at(i, j).terms()) acc = acc + dmu(mu).scaled(coef.substitute(ptr));
      out.at(i, j) = acc;
    }
  return out;
}

// ---- printing --------------------------------------------------------------

namespace {
std::string dname(const MultiIndex& mu, const std::string& unknown) {
  if (mu.order() == 0) return unknown;
  std::ostringstream os;
  os << "d[";
  bool first = true;
  for (int i = 0; i < mu.n(); ++i)
    for (int k = 0; k < mu[i]; ++k) {
      if (!first) os << ",";
      os << i + 1;
      first = false;
    }
  os << "](" << unknown << ")";
  return os.str();
}

void emit(std::ostringstream& os, bool first, const RatFunc& c0, const std::string& atom, const Ring& ring) {
  bool neg = c0.num().lead().second < 0;
  RatFunc c = neg ? -c0 : c0;
  if (first)
    os << (neg ? "-" : "");
  else
    os << (neg ? " - " : " + ");
  if (c.is_one()) {
    os << atom;
    return;
  }
  std::string s = to_string(c, ring);
  bool atomic = c.num().terms().size() == 1 && c.den().is_const();
  if (c.is_const()) atomic = true;
  os << (atomic ? s : "(" + s + ")") << "*" << atom;
}
}  // namespace

std::string to_string(const OreOp& p, const Ring& ring, const std::string& unknown) {
  return row_to_string({p}, ring, {unknown});
}

std::string row_to_string(const std::vector<OreOp>& row, const Ring& ring,
                          const std::vector<std::string>& unknowns) {
  if (row.size() != unknowns.size()) throw Error("DimensionMismatch", "row length and unknown names differ");
  struct T {
    MultiIndex mu;
    size_t k;
    const RatFunc* c;
  };
  std::vector<T> all;
  for (size_t k = 0; k < row.size(); ++k)
    for (auto& [mu, c] : row[k].terms()) all.push_back({mu, k, &c});
  std::stable_sort(all.begin(), all.end(), [](const T& a, const T& b) {
    if (!(a.mu == b.mu)) return b.mu < a.mu;
    return a.k < b.k;
  });
  if (all.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : all) {
    emit(os, first, *t.c, dname(t.mu, unknowns[t.k]), ring);
    first = false;
  }
  return os.str();
}

}  // namespace dmod
