#include "dmod/janet.hpp"

#include <algorithm>

namespace dmod {

namespace {

long binom(int n, int k) {
  if (k < 0 || n < k) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r.get_si();
}

// m * C(t + n, n)
int jet_dim(int n, int m, int t) { return t < 0 ? 0 : static_cast<int>(m * binom(t + n, n)); }

OpMatrix drop_zero_rows(const OpMatrix& a) {
  std::vector<int> keep;
  for (int i = 0; i < a.rows(); ++i) {
    bool z = true;
    for (int j = 0; j < a.cols(); ++j) z = z && a.at(i, j).is_zero();
    if (!z) keep.push_back(i);
  }
  return a.row_block(keep);
}

int row_order(const std::vector<OreOp>& row) {
  int o = -1;
  for (auto& x : row) o = std::max(o, x.order());
  return o;
}

// scale so that the first printed coefficient is 1
std::vector<OreOp> monic_row(const std::vector<OreOp>& row) {
  const RatFunc* lead = nullptr;
  MultiIndex best;
  for (auto& x : row) {
    if (x.is_zero()) continue;
    auto it = x.terms().rbegin();
    if (!lead || best < it->first) {
      lead = &it->second;
      best = it->first;
    }
  }
  if (!lead || lead->is_one()) return row;
  RatFunc inv = RatFunc(1) / *lead;
  std::vector<OreOp> out;
  for (auto& x : row) out.push_back(x.scaled(inv));
  return out;
}

std::vector<OreOp> left_d_row(const std::vector<OreOp>& row, int i) {
  std::vector<OreOp> out;
  out.reserve(row.size());
  for (auto& x : row) out.push_back(x.left_d(i));
  return out;
}

int last_nonzero(const MultiIndex& mu) {
  for (int i = mu.n() - 1; i >= 0; --i)
    if (mu[i] > 0) return i;
  return -1;
}

// Maintains d_lambda r for |lambda| growing one layer at a time.
class RowLayers {
 public:
  RowLayers(std::vector<OreOp> row, int n) : n_(n) { cur_.emplace(MultiIndex(n), std::move(row)); }
  int done() const { return done_; }
  const std::map<MultiIndex, std::vector<OreOp>>& current() const { return cur_; }
  void advance() {
    std::map<MultiIndex, std::vector<OreOp>> next;
    for (auto& la : multi_indices(n_, done_ + 1)) {
      int j = last_nonzero(la);
      auto it = cur_.find(la - MultiIndex::unit(n_, j));
      next.emplace(la, left_d_row(it->second, j));
    }
    cur_.swap(next);
    ++done_;
  }

 private:
  int n_;
  int done_ = 0;
  std::map<MultiIndex, std::vector<OreOp>> cur_;
};

}  // namespace

SparseVec jet_vector(const std::vector<OreOp>& row, const JetCoder& coder) {
  SparseVec v;
  for (size_t k = 0; k < row.size(); ++k)
    for (auto& [mu, c] : row[k].terms()) v.emplace_back(coder.key(static_cast<int>(k), mu), c);
  std::sort(v.begin(), v.end(), [](auto& a, auto& b) { return a.first < b.first; });
  return v;
}

std::vector<OreOp> row_from_jets(const SparseVec& v, const JetCoder& coder, int width, int n) {
  std::vector<OreOp> row(width, OreOp(n));
  for (auto& [key, c] : v) row[coder.unknown(key)].add_term(coder.index(key), c);
  return row;
}

JetMatrix prolong(const OpMatrix& a, int r) {
  JetMatrix jm;
  jm.n = a.n();
  jm.p = a.rows();
  jm.m = a.cols();
  jm.q = std::max(a.order(), 0);
  jm.r = r;
  JetCoder coder(a.n());
  for (auto& mu : multi_indices_upto(jm.n, jm.q + r))
    for (int k = 0; k < jm.m; ++k) jm.col_ids.emplace_back(k, mu);
  std::sort(jm.col_ids.begin(), jm.col_ids.end(), [&](const Jet& x, const Jet& y) {
    return coder.key(x.first, x.second) < coder.key(y.first, y.second);
  });
  std::map<Key, size_t> col_of;
  for (size_t c = 0; c < jm.col_ids.size(); ++c) col_of[coder.key(jm.col_ids[c].first, jm.col_ids[c].second)] = c;
  for (int tau = 0; tau < jm.p; ++tau) {
    RowLayers layers(a.row(tau), jm.n);
    std::vector<std::pair<MultiIndex, std::vector<OreOp>>> all;
    for (int s = 0; s <= r; ++s) {
      if (s > 0) layers.advance();
      for (auto& [nu, row] : layers.current()) all.emplace_back(nu, row);
    }
    std::sort(all.begin(), all.end(), [](auto& x, auto& y) { return y.first < x.first; });
    for (auto& [nu, row] : all) {
      jm.row_ids.emplace_back(tau, nu);
      std::vector<RatFunc> e(jm.col_ids.size());
      for (auto& [key, c] : jet_vector(row, coder)) e[col_of.at(key)] = c;
      jm.entries.push_back(std::move(e));
    }
  }
  return jm;
}

// ---- incremental prolongation ------------------------------------------------

Prolongator::Prolongator(const OpMatrix& gens, bool by_jet_order)
    : g_(gens), jet_(gens.n()), lab_(gens.n()) {
  int q = std::max(gens.order(), 0);
  for (int i = 0; i < g_.rows(); ++i) {
    int o = row_order(g_.row(i));
    shift_.push_back(by_jet_order && o >= 0 ? q - o : 0);
    done_.push_back(-1);
    layer_.emplace_back();
  }
}

std::vector<SparseVec> Prolongator::extend_to(int level) {
  std::vector<SparseVec> kernel;
  int n = g_.n();
  for (int L = level_ + 1; L <= level; ++L) {
    for (int i = 0; i < g_.rows(); ++i) {
      int target = L + shift_[i];
      while (done_[i] < target) {
        if (done_[i] < 0) {
          layer_[i].clear();
          layer_[i].emplace(MultiIndex(n), g_.row(i));
        } else {
          std::map<MultiIndex, std::vector<OreOp>> next;
          for (auto& la : multi_indices(n, done_[i] + 1)) {
            int j = last_nonzero(la);
            next.emplace(la, left_d_row(layer_[i].at(la - MultiIndex::unit(n, j)), j));
          }
          layer_[i].swap(next);
        }
        ++done_[i];
        // insert in decreasing multi-index order for determinism
        for (auto it = layer_[i].rbegin(); it != layer_[i].rend(); ++it) {
          SparseVec comb{{lab_.key(i, it->first), RatFunc(1)}};
          auto k = ech_.insert(jet_vector(it->second, jet_), std::move(comb));
          if (k) {
            std::sort(k->begin(), k->end(), [](auto& a, auto& b) { return a.first < b.first; });
            kernel.push_back(std::move(*k));
          }
        }
      }
    }
    level_ = L;
  }
  return kernel;
}

std::optional<std::vector<OreOp>> Prolongator::express(const std::vector<OreOp>& row) const {
  auto [rem, comb] = ech_.reduce(jet_vector(row, jet_), {});
  if (!rem.empty()) return std::nullopt;
  return combination_row(scaled(comb, RatFunc(-1)));
}

std::vector<OreOp> Prolongator::combination_row(const SparseVec& comb) const {
  return row_from_jets(comb, lab_, g_.rows(), g_.n());
}

// ---- compatibility conditions --------------------------------------------------

CCResult cc(const OpMatrix& a, int max_order, int extra) {
  CCResult res;
  int p = a.rows(), n = a.n();
  res.cc = OpMatrix(0, p, n);
  res.rank_a = rank_D(a, std::max(max_order, 1));
  Prolongator pr(a);
  Echelon known;  // syzygies already generated, as vectors over (tau, nu)
  const JetCoder& lab = pr.labels();
  std::vector<RowLayers> gen_layers;
  std::vector<int> gen_order;
  int cert = -1;
  int s = 0;
  for (; s <= max_order; ++s) {
    auto kernel = pr.extend_to(s);
    for (size_t g = 0; g < gen_layers.size(); ++g) {
      while (gen_order[g] + gen_layers[g].done() < s) {
        gen_layers[g].advance();
        for (auto it = gen_layers[g].current().rbegin(); it != gen_layers[g].current().rend(); ++it)
          known.insert(jet_vector(it->second, lab));
      }
    }
    bool changed = false;
    for (auto& w : kernel) {
      if (known.contains(w)) continue;
      known.insert(w);
      auto row = monic_row(pr.combination_row(w));
      res.cc.append_row(row);
      res.orders.push_back(row_order(row));
      gen_layers.emplace_back(row, n);
      gen_order.push_back(s);
      changed = true;
    }
    if (changed || s == 0) {
      res.rank_cc = rank_D(res.cc, std::max(max_order, 1));
      if (cert < 0 && res.rank_a + res.rank_cc == p) cert = s;
    }
    if (cert >= 0 && s >= cert + extra) break;
  }
  res.search_order = std::min(s, max_order);
  res.certified_complete = cert >= 0;
  return res;
}

Membership membership(const std::vector<OreOp>& row, const OpMatrix& gens, int max_order) {
  Membership m;
  if (row_order(row) < 0) {
    m.member = true;
    m.order = 0;
    m.coeffs.assign(gens.rows(), OreOp(gens.n()));
    return m;
  }
  if (gens.rows() == 0) return m;
  Prolongator pr(gens);
  for (int t = 0; t <= max_order; ++t) {
    pr.extend_to(t);
    if (auto c = pr.express(row)) {
      m.member = true;
      m.coeffs = *c;
      m.order = t;
      return m;
    }
  }
  return m;
}

bool rows_in_module(const OpMatrix& b, const OpMatrix& a, int bound) {
  if (b.rows() == 0) return true;
  OpMatrix gens = drop_zero_rows(a);
  Prolongator pr(gens);
  int t = 0;
  pr.extend_to(0);
  for (int i = 0; i < b.rows(); ++i) {
    auto row = b.row(i);
    if (row_order(row) < 0) continue;
    if (gens.rows() == 0) return false;
    while (!pr.express(row)) {
      if (t >= bound) return false;
      pr.extend_to(++t);
    }
  }
  return true;
}

// ---- common left multiples and ranks ----------------------------------------

Lclm lclm(const OreOp& p, const OreOp& q, int max_order) {
  if (p.is_zero() || q.is_zero()) throw Error("DimensionMismatch", "lclm of a zero operator");
  int n = std::max(p.n(), q.n());
  OpMatrix pq(2, 1, n);
  pq.at(0, 0) = p;
  pq.at(1, 0) = q;
  Prolongator pr(pq);
  for (int r = 0; r <= max_order; ++r) {
    auto kernel = pr.extend_to(r);
    if (kernel.empty()) continue;
    auto row = monic_row(pr.combination_row(kernel.front()));
    return {row[0], -row[1], r};
  }
  throw Error("BoundExceeded", "no common left multiple up to order " + std::to_string(max_order));
}

int rank_D(const OpMatrix& a0, int max_order) {
  OpMatrix a = drop_zero_rows(a0);
  if (a.rows() == 0) return 0;
  int n = a.n();
  if (a.constant_coefficients()) {
    // D is commutative here: replace d_i by the variable x_i (absent from the coefficients)
    Echelon e;
    for (int i = 0; i < a.rows(); ++i) {
      SparseVec v;
      for (int j = 0; j < a.cols(); ++j) {
        RatFunc s;
        for (auto& [mu, c] : a.at(i, j).terms()) {
          Mono mono;
          for (int k = 0; k < n; ++k)
            if (mu[k]) mono = mono * Mono::var(k, mu[k]);
          s += c * RatFunc(Poly(1).mul_mono(mono, 1));
        }
        if (!s.is_zero()) v.emplace_back(static_cast<Key>(j), s);
      }
      e.insert(v);
    }
    return e.rank();
  }
  std::vector<std::vector<OreOp>> rows;
  for (int i = 0; i < a.rows(); ++i) rows.push_back(a.row(i));
  int rank = 0;
  for (int j = 0; j < a.cols() && !rows.empty(); ++j) {
    int piv = -1;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][j].is_zero()) continue;
      if (piv < 0 || rows[i][j].order() < rows[piv][j].order()) piv = static_cast<int>(i);
    }
    if (piv < 0) continue;
    std::vector<OreOp> prow = rows[piv];
    std::vector<std::vector<OreOp>> rest;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == piv) continue;
      std::vector<OreOp> r = rows[i];
      if (!r[j].is_zero()) {
        Lclm l = lclm(prow[j], r[j], max_order);
        for (size_t k = 0; k < r.size(); ++k) r[k] = l.v * r[k] - l.u * prow[k];
      }
      if (row_order(r) >= 0) rest.push_back(std::move(r));
    }
    rows.swap(rest);
    ++rank;
  }
  return rank;
}

// ---- projection chains and first-order forms ------------------------------------

namespace {
int pivots_up_to_order(const Prolongator& pr, int t) {
  int c = 0;
  for (auto& row : pr.echelon().rows())
    if (pr.jets().order(row.v.front().first) <= t) ++c;
  return c;
}
}  // namespace

std::vector<int> pp_reduce(const OpMatrix& a, int r, int s) {
  int q = std::max(a.order(), 0);
  int dimj = jet_dim(a.n(), a.cols(), q + r);
  std::vector<int> out{dimj};
  Prolongator pr(drop_zero_rows(a), true);
  for (int k = 0; k <= s; ++k) {
    pr.extend_to(r + k);
    out.push_back(dimj - pivots_up_to_order(pr, q + r));
  }
  return out;
}

SpencerForm spencerize(const OpMatrix& a, int max_q) {
  int n = a.n(), m = a.cols();
  int q = std::max(a.order(), 0);
  Prolongator pr(drop_zero_rows(a), true);
  const JetCoder& jc = pr.jets();
  int prev_t = -1, prev_dim = -1;
  int tstar = -1;
  for (int L = 0; q + L <= max_q + 2; ++L) {
    pr.extend_to(L);
    int T = q + L;
    std::vector<int> d(T + 1);
    for (int t = 0; t <= T; ++t) d[t] = jet_dim(n, m, t) - pivots_up_to_order(pr, t);
    int found = -1;
    for (int t = 0; t + 2 <= T; ++t)
      if (d[t] == d[t + 1]) {
        found = t;
        break;
      }
    if (found >= 0 && found == prev_t && d[found] == prev_dim) {
      tstar = found;
      break;
    }
    prev_t = found;
    prev_dim = found >= 0 ? d[found] : -1;
  }
  if (tstar < 0) throw Error("NotFiniteType", "symbols do not vanish up to order " + std::to_string(max_q));
  SpencerForm sf;
  sf.order = tstar;
  for (int t = 0; t <= tstar; ++t) {
    auto mus = multi_indices(n, t);
    for (int k = 0; k < m; ++k)
      for (auto& mu : mus)
        if (!pr.echelon().is_pivot(jc.key(k, mu))) sf.jets.emplace_back(k, mu);
  }
  sf.solution_dim = static_cast<int>(sf.jets.size());
  std::map<Key, int> zindex;
  for (size_t a_ = 0; a_ < sf.jets.size(); ++a_) zindex[jc.key(sf.jets[a_].first, sf.jets[a_].second)] = static_cast<int>(a_);
  int nz = static_cast<int>(sf.jets.size());
  sf.system = OpMatrix(0, nz, n);
  for (int i = n - 1; i >= 0; --i) {
    for (int al = 0; al < nz; ++al) {
      auto [k, mu] = sf.jets[al];
      SparseVec e{{jc.key(k, mu + MultiIndex::unit(n, i)), RatFunc(1)}};
      SparseVec r = pr.echelon().full_reduce(e);
      std::vector<OreOp> row(nz, OreOp(n));
      row[al] = OreOp::d(n, i + 1);
      for (auto& [key, c] : r) {
        auto it = zindex.find(key);
        if (it == zindex.end()) throw Error("NotFiniteType", "jet reduction left a principal jet");
        row[it->second] = row[it->second] - OreOp(n, c);
      }
      sf.system.append_row(row);
    }
  }
  return sf;
}

OpMatrix first_order_reduction(const OpMatrix& a) {
  int n = a.n(), m = a.cols();
  int q = a.order();
  if (q <= 1) return a;
  std::vector<Jet> z;
  for (int t = 0; t < q; ++t)
    for (int k = 0; k < m; ++k)
      for (auto& mu : multi_indices(n, t)) z.emplace_back(k, mu);
  std::map<std::pair<int, std::vector<int>>, int> zi;
  for (size_t i = 0; i < z.size(); ++i) zi[{z[i].first, z[i].second.a}] = static_cast<int>(i);
  int nz = static_cast<int>(z.size());
  OpMatrix out(0, nz, n);
  // y^k_nu with |nu| = q is d_j z^(k, nu - 1_j), j the first variable present
  auto top = [&](int k, const MultiIndex& nu) {
    int j = 0;
    while (nu[j] == 0) ++j;
    return std::make_pair(zi.at({k, (nu - MultiIndex::unit(n, j)).a}), j);
  };
  for (int al = 0; al < nz; ++al) {
    auto [k, mu] = z[al];
    if (mu.order() > q - 2) continue;
    for (int i = 0; i < n; ++i) {
      std::vector<OreOp> row(nz, OreOp(n));
      row[al] = OreOp::d(n, i + 1);
      row[zi.at({k, (mu + MultiIndex::unit(n, i)).a})] = OreOp(n, RatFunc(-1));
      out.append_row(row);
    }
  }
  for (int k = 0; k < m; ++k)
    for (auto& nu : multi_indices(n, q)) {
      auto [c0, j0] = top(k, nu);
      for (int i = 0; i < n; ++i) {
        if (nu[i] == 0 || i == j0) continue;
        std::vector<OreOp> row(nz, OreOp(n));
        row[zi.at({k, (nu - MultiIndex::unit(n, i)).a})] = OreOp::d(n, i + 1);
        row[c0] = row[c0] - OreOp::d(n, j0 + 1);
        out.append_row(row);
      }
    }
  for (int tau = 0; tau < a.rows(); ++tau) {
    std::vector<OreOp> row(nz, OreOp(n));
    for (int k = 0; k < m; ++k)
      for (auto& [mu, c] : a.at(tau, k).terms()) {
        if (mu.order() < q) {
          row[zi.at({k, mu.a})].add_term(MultiIndex(n), c);
        } else {
          auto [ci, j] = top(k, mu);
          row[ci].add_term(MultiIndex::unit(n, j), c);
        }
      }
    out.append_row(row);
  }
  return out;
}

std::vector<OpMatrix> resolution(const OpMatrix& a, int length, int max_order) {
  std::vector<OpMatrix> out{a};
  while (static_cast<int>(out.size()) < length) {
    CCResult r = cc(out.back(), max_order);
    if (r.cc.rows() == 0) break;
    out.push_back(r.cc);
  }
  return out;
}

// ---- symbols and delta -------------------------------------------------------------

namespace {
int mu_index(const MultiIndex& mu) {
  // position of mu inside multi_indices(n, |mu|)
  auto all = multi_indices(mu.n(), mu.order());
  return static_cast<int>(std::find(all.begin(), all.end(), mu) - all.begin());
}

std::vector<std::vector<int>> subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  if (r < 0 || r > n) return out;
  std::vector<int> cur(r);
  for (int i = 0; i < r; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[i] == n - r + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}
}  // namespace

SymbolTableau::SymbolTableau(int n, int m, int q, QMatrix eqs) : n_(n), m_(m), q_(q), eqs_(std::move(eqs)) {
  for (auto& row : eqs_)
    if (static_cast<int>(row.size()) != coords(q_)) throw Error("DimensionMismatch", "tableau row width");
}

SymbolTableau SymbolTableau::from_operator(const OpMatrix& a) {
  int n = a.n(), m = a.cols(), q = a.order();
  if (q < 0) throw Error("DimensionMismatch", "symbol of the zero operator");
  SymbolTableau tab(n, m, q, {});
  for (int tau = 0; tau < a.rows(); ++tau) {
    std::vector<Q> row(tab.coords(q), 0);
    bool any = false;
    for (int k = 0; k < m; ++k)
      for (auto& [mu, c] : a.at(tau, k).terms()) {
        if (mu.order() != q) continue;
        if (!c.is_const()) throw Error("DimensionMismatch", "symbol needs rational constant coefficients");
        row[tab.coord(k, mu)] = c.const_value();
        any = true;
      }
    if (any) tab.eqs_.push_back(std::move(row));
  }
  return tab;
}

int SymbolTableau::coords(int t) const { return t < 0 ? 0 : static_cast<int>(m_ * binom(t + n_ - 1, n_ - 1)); }

int SymbolTableau::coord(int k, const MultiIndex& mu) const {
  return k * static_cast<int>(binom(mu.order() + n_ - 1, n_ - 1)) + mu_index(mu);
}

QMatrix SymbolTableau::equations_at(int t) const {
  QMatrix out;
  if (t < q_) return out;
  auto base = multi_indices(n_, q_);
  for (auto& eq : eqs_)
    for (auto& nu : multi_indices(n_, t - q_)) {
      std::vector<Q> row(coords(t), 0);
      for (int k = 0; k < m_; ++k)
        for (auto& mu : base) {
          const Q& c = eq[coord(k, mu)];
          if (c != 0) row[coord(k, mu + nu)] = c;
        }
      out.push_back(std::move(row));
    }
  return out;
}

QMatrix SymbolTableau::basis(int t) const {
  if (t < 0) return {};
  return nullspace(equations_at(t), coords(t));
}

namespace {
// columns are given as source vectors in Lambda^r (x) S_t (x) E coordinates
QMatrix delta_on(int n, int m, int t, int r, const QMatrix& fiber_basis) {
  auto src = subsets(n, r);
  auto dst = subsets(n, r + 1);
  std::map<std::vector<int>, int> dst_index;
  for (size_t i = 0; i < dst.size(); ++i) dst_index[dst[i]] = static_cast<int>(i);
  SymbolTableau shape(n, m, 0, {});
  int tgt_fiber = shape.coords(t - 1);
  int rows = static_cast<int>(dst.size()) * tgt_fiber;
  auto mus = multi_indices(n, t);
  QMatrix out(rows, std::vector<Q>(src.size() * fiber_basis.size(), 0));
  int col = 0;
  for (auto& I : src)
    for (auto& b : fiber_basis) {
      if (t >= 1)
        for (int k = 0; k < m; ++k)
          for (auto& mu : mus) {
            const Q& c = b[shape.coord(k, mu)];
            if (c == 0) continue;
            for (int i = 0; i < n; ++i) {
              if (mu[i] == 0 || std::find(I.begin(), I.end(), i) != I.end()) continue;
              std::vector<int> J = I;
              J.insert(std::upper_bound(J.begin(), J.end(), i), i);
              int before = static_cast<int>(std::lower_bound(I.begin(), I.end(), i) - I.begin());
              Q sign = before % 2 ? -1 : 1;
              int row = dst_index.at(J) * tgt_fiber + shape.coord(k, mu - MultiIndex::unit(n, i));
              out[row][col] += sign * c;
            }
          }
      ++col;
    }
  return out;
}
}  // namespace

QMatrix delta_map(const SymbolTableau& tab, int t, int r) {
  return delta_on(tab.n(), tab.m(), t, r, tab.basis(t));
}

QMatrix delta_full(int n, int m, int t, int r) {
  SymbolTableau full(n, m, 0, {});
  return delta_on(n, m, t, r, full.basis(t));
}

std::vector<DeltaDims> delta_cohomology_dims(const SymbolTableau& tab, const std::vector<int>& t_range,
                                             const std::vector<int>& r_range) {
  std::vector<DeltaDims> out;
  int n = tab.n();
  for (int t : t_range)
    for (int r : r_range) {
      DeltaDims d{t, r, 0, 0, 0};
      int src = static_cast<int>(binom(n, r)) * tab.dim(t);
      int out_rank = (t >= 1 && r < n) ? rank(delta_map(tab, t, r)) : 0;
      d.z = src - out_rank;
      d.b = r >= 1 ? rank(delta_map(tab, t + 1, r - 1)) : 0;
      d.h = d.z - d.b;
      out.push_back(d);
    }
  return out;
}

std::vector<int> spencer_fibers(const SymbolTableau& tab, int q, int dim_rq) {
  std::vector<int> out;
  int n = tab.n();
  for (int r = 0; r <= n; ++r) {
    int b = r >= 1 ? rank(delta_map(tab, q + 1, r - 1)) : 0;
    out.push_back(static_cast<int>(binom(n, r)) * dim_rq - b);
  }
  return out;
}

}  // namespace dmod
