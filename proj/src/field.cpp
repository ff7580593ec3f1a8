#include "dmod/field.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace dmod {

// ---- monomials -------------------------------------------------------------

void Mono::trim() {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Mono Mono::var(int i, unsigned power) {
  Mono m;
  if (power == 0) return m;
  m.e.assign(i + 1, 0);
  m.e[i] = static_cast<uint16_t>(power);
  m.deg = power;
  return m;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r;
  r.e.resize(std::max(e.size(), o.e.size()), 0);
  for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = (*this)[i] + o[i];
  r.deg = deg + o.deg;
  return r;
}

bool Mono::divides(const Mono& o) const {
  if (deg > o.deg || e.size() > o.e.size()) return false;
  for (size_t i = 0; i < e.size(); ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Mono Mono::operator/(const Mono& o) const {
  Mono r;
  r.e = e;
  for (size_t i = 0; i < o.e.size(); ++i) r.e[i] -= o.e[i];
  r.deg = deg - o.deg;
  r.trim();
  return r;
}

bool mono_greater(const Mono& a, const Mono& b) {
  if (a.deg != b.deg) return a.deg > b.deg;
  size_t len = std::max(a.e.size(), b.e.size());
  for (size_t i = 0; i < len; ++i) {
    uint16_t x = a[i], y = b[i];
    if (x != y) return x < y;
  }
  return false;
}

// ---- polynomials -----------------------------------------------------------

Poly::Poly(const Q& c) {
  if (c != 0) t_.emplace_back(Mono{}, c);
}

Poly Poly::var(int i) {
  Poly p;
  p.t_.emplace_back(Mono::var(i), Q(1));
  return p;
}

Poly Poly::from_terms(std::vector<Term> t) {
  std::sort(t.begin(), t.end(),
            [](const Term& a, const Term& b) { return mono_greater(a.first, b.first); });
  Poly p;
  for (auto& term : t) {
    if (!p.t_.empty() && p.t_.back().first == term.first) {
      p.t_.back().second += term.second;
      if (p.t_.back().second == 0) p.t_.pop_back();
    } else if (term.second != 0) {
      p.t_.push_back(std::move(term));
    }
  }
  return p;
}

unsigned Poly::total_degree() const { return t_.empty() ? 0 : t_.front().first.deg; }

int Poly::degree_in(int v) const {
  int d = 0;
  for (auto& [m, c] : t_) d = std::max<int>(d, m[v]);
  return d;
}

int Poly::max_var() const {
  int v = -1;
  for (auto& [m, c] : t_) v = std::max(v, static_cast<int>(m.e.size()) - 1);
  return v;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.t_) c = -c;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.t_.reserve(t_.size() + o.t_.size());
  size_t i = 0, j = 0;
  while (i < t_.size() || j < o.t_.size()) {
    if (j == o.t_.size() || (i < t_.size() && mono_greater(t_[i].first, o.t_[j].first))) {
      r.t_.push_back(t_[i++]);
    } else if (i == t_.size() || mono_greater(o.t_[j].first, t_[i].first)) {
      r.t_.push_back(o.t_[j++]);
    } else {
      Q c = t_[i].second + o.t_[j].second;
      if (c != 0) r.t_.emplace_back(t_[i].first, c);
      ++i;
      ++j;
    }
  }
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.is_const()) return scaled(o.t_[0].second);
  if (is_const()) return o.scaled(t_[0].second);
  std::vector<Term> acc;
  acc.reserve(t_.size() * o.t_.size());
  for (auto& [a, x] : t_)
    for (auto& [b, y] : o.t_) acc.emplace_back(a * b, x * y);
  return from_terms(std::move(acc));
}

Poly Poly::scaled(const Q& c) const {
  if (c == 0) return {};
  Poly r = *this;
  for (auto& [m, x] : r.t_) x *= c;
  return r;
}

Poly Poly::mul_mono(const Mono& mono, const Q& c) const {
  if (c == 0) return {};
  Poly r;
  r.t_.reserve(t_.size());
  for (auto& [m, x] : t_) r.t_.emplace_back(m * mono, x * c);
  return r;  // multiplication by a monomial preserves the order
}

bool Poly::operator==(const Poly& o) const {
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (!(t_[i].first == o.t_[i].first) || t_[i].second != o.t_[i].second) return false;
  return true;
}

Poly Poly::divexact(const Poly& o) const {
  if (o.is_zero()) throw Error("ZeroDenominator", "polynomial division by zero");
  if (o.is_const()) return scaled(1 / o.t_[0].second);
  Poly r = *this;
  std::vector<Term> q;
  const auto& [lm, lc] = o.lead();
  while (!r.is_zero()) {
    const auto& [rm, rc] = r.lead();
    if (!lm.divides(rm)) throw Error("InexactDivision", "polynomial does not divide");
    Mono qm = rm / lm;
    Q qc = rc / lc;
    r = r - o.mul_mono(qm, qc);
    q.emplace_back(std::move(qm), std::move(qc));
  }
  Poly out;
  out.t_ = std::move(q);  // produced in decreasing order
  return out;
}

Poly Poly::derivative(int v) const {
  std::vector<Term> out;
  for (auto& [m, c] : t_) {
    uint16_t k = m[v];
    if (k == 0) continue;
    Mono d = m;
    d.e[v] -= 1;
    d.deg -= 1;
    d.trim();
    out.emplace_back(std::move(d), c * k);
  }
  return from_terms(std::move(out));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  return scaled(1 / lead().second);
}

Q Poly::eval(const std::vector<Q>& point) const {
  Q s = 0;
  for (auto& [m, c] : t_) {
    Q v = c;
    for (size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (i >= point.size()) throw Error("IndexOutOfRange", "evaluation point too short");
      Q p;
      mpz_pow_ui(p.get_num_mpz_t(), point[i].get_num_mpz_t(), m.e[i]);
      mpz_pow_ui(p.get_den_mpz_t(), point[i].get_den_mpz_t(), m.e[i]);
      p.canonicalize();
      v *= p;
    }
    s += v;
  }
  return s;
}

Poly pow(const Poly& p, unsigned k) {
  Poly r(1), b = p;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

Poly Poly::substitute(const std::vector<const Poly*>& images) const {
  Poly out;
  std::map<std::pair<size_t, unsigned>, Poly> cache;
  for (auto& [m, c] : t_) {
    Mono keep;
    Poly factor(c);
    for (size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (i < images.size() && images[i]) {
        auto key = std::make_pair(i, static_cast<unsigned>(m.e[i]));
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, pow(*images[i], m.e[i])).first;
        factor = factor * it->second;
      } else {
        keep = keep * Mono::var(static_cast<int>(i), m.e[i]);
      }
    }
    out = out + factor.mul_mono(keep, 1);
  }
  return out;
}

// ---- gcd: recursive primitive remainder sequences ---------------------------

namespace {

using UPoly = std::vector<Poly>;  // coefficients by degree in the main variable

UPoly to_upoly(const Poly& p, int v) {
  UPoly u(p.degree_in(v) + 1);
  std::vector<std::vector<Poly::Term>> parts(u.size());
  for (auto& [m, c] : p.terms()) {
    Mono r = m;
    unsigned k = m[v];
    if (k) {
      r.e[v] = 0;
      r.deg -= k;
      r.trim();
    }
    parts[k].emplace_back(std::move(r), c);
  }
  for (size_t k = 0; k < u.size(); ++k) u[k] = Poly::from_terms(std::move(parts[k]));
  return u;
}

Poly from_upoly(const UPoly& u, int v) {
  std::vector<Poly::Term> all;
  for (size_t k = 0; k < u.size(); ++k) {
    Mono x = Mono::var(v, static_cast<unsigned>(k));
    for (auto& [m, c] : u[k].terms()) all.emplace_back(m * x, c);
  }
  return Poly::from_terms(std::move(all));
}

void strip(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

Poly content(const UPoly& u) {
  Poly g;
  for (auto& c : u) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_const()) return Poly(1);
  }
  return g;
}

UPoly divide_all(const UPoly& u, const Poly& c) {
  if (c.is_const()) {
    UPoly r = u;
    Q s = 1 / c.const_value();
    for (auto& x : r) x = x.scaled(s);
    return r;
  }
  UPoly r(u.size());
  for (size_t k = 0; k < u.size(); ++k) r[k] = u[k].divexact(c);
  return r;
}

// pseudo-remainder of a by b, deg a >= deg b >= 1
UPoly prem(UPoly a, const UPoly& b) {
  const Poly& lb = b.back();
  size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    Poly la = a.back();
    size_t shift = a.size() - b.size();
    for (auto& x : a) x = x * lb;
    for (size_t k = 0; k <= db; ++k) a[k + shift] = a[k + shift] - la * b[k];
    strip(a);
  }
  return a;
}

UPoly primitive(const UPoly& u) {
  UPoly r = divide_all(u, content(u));
  // keep rational coefficients tame
  Q s = 1 / r.back().lead().second;
  for (auto& x : r) x = x.scaled(s);
  return r;
}

// dense univariate image of p in variable v, the other variables set to pt
std::vector<Q> image(const Poly& p, int v, const std::vector<long>& pt) {
  std::vector<Q> u(p.degree_in(v) + 1, Q(0));
  for (auto& [m, c] : p.terms()) {
    Q x = c;
    for (size_t i = 0; i < m.e.size(); ++i)
      if (static_cast<int>(i) != v)
        for (unsigned k = 0; k < m.e[i]; ++k) x *= pt[i];
    u[m[v]] += x;
  }
  return u;
}

size_t udegree_gcd(std::vector<Q> a, std::vector<Q> b) {
  auto trim = [](std::vector<Q>& u) {
    while (!u.empty() && u.back() == 0) u.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size()) {
      Q f = a.back() / b.back();
      size_t shift = a.size() - b.size();
      for (size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
      trim(a);
    }
    std::swap(a, b);
  }
  return a.size() - 1;
}

// True when gcd(a, b) is certainly free of v.  Specialising the other variables
// where both leading coefficients in v survive cannot lower the degree in v of
// the gcd, so a constant univariate gcd is a proof.
bool coprime_in(const Poly& a, const Poly& b, int v) {
  int nv = std::max(a.max_var(), b.max_var()) + 1;
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<long> pt(nv);
    for (int i = 0; i < nv; ++i) pt[i] = 3 + 7 * i + 13 * attempt + (i * i * (attempt + 1)) % 11;
    auto ua = image(a, v, pt), ub = image(b, v, pt);
    if (ua.back() == 0 || ub.back() == 0) continue;
    return udegree_gcd(ua, ub) == 0;
  }
  return false;
}

// ---- heuristic gcd (evaluate at a large integer, rebuild, verify) ---------------
// Inputs have integer coefficients.  A candidate is accepted only when it divides
// both arguments, so a wrong guess costs time, never correctness.

mpz_class norm(const Poly& p) {
  mpz_class m = 0;
  for (auto& [mono, c] : p.terms())
    if (abs(c.get_num()) > m) m = abs(c.get_num());
  return m;
}

mpz_class int_content(const Poly& p) {
  mpz_class g = 0;
  for (auto& [mono, c] : p.terms()) g = gcd(g, c.get_num());
  return g;
}

// p with the integer content removed, leading coefficient positive
Poly primitive_z(const Poly& p, mpz_class* content = nullptr) {
  mpz_class g = int_content(p);
  if (p.lead().second < 0) g = -g;
  if (content) *content = abs(g);
  return p.scaled(Q(1) / Q(g));
}

Poly eval_at(const Poly& p, int v, const mpz_class& xi) {
  std::vector<mpz_class> pw(p.degree_in(v) + 1);
  pw[0] = 1;
  for (size_t k = 1; k < pw.size(); ++k) pw[k] = pw[k - 1] * xi;
  std::vector<Poly::Term> out;
  for (auto& [m, c] : p.terms()) {
    Mono r = m;
    unsigned k = m[v];
    if (k) {
      r.e[v] = 0;
      r.deg -= k;
      r.trim();
    }
    out.emplace_back(std::move(r), c * Q(pw[k]));
  }
  return Poly::from_terms(std::move(out));
}

// xi-adic expansion of g, symmetric digits, as a polynomial in v
Poly rebuild(Poly g, int v, const mpz_class& xi) {
  std::vector<Poly::Term> out;
  mpz_class half = xi / 2;
  for (unsigned k = 0; !g.is_zero(); ++k) {
    if (k > 10000) return Poly();
    std::vector<Poly::Term> digit;
    for (auto& [m, c] : g.terms()) {
      mpz_class r = c.get_num() % xi;
      if (r < 0) r += xi;
      if (r > half) r -= xi;
      if (r != 0) digit.emplace_back(m, Q(r));
    }
    Poly d = Poly::from_terms(digit);
    g = (g - d).scaled(Q(1) / Q(xi));
    Mono x = Mono::var(v, k);
    for (auto& [m, c] : d.terms()) out.emplace_back(m * x, c);
  }
  return Poly::from_terms(std::move(out));
}

bool divides(const Poly& g, const Poly& a) {
  try {
    a.divexact(g);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::optional<Poly> heu_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero() ? Poly() : primitive_z(b) * Poly(Q(int_content(b)));
  if (b.is_zero()) return primitive_z(a) * Poly(Q(int_content(a)));
  mpz_class ca, cb;
  Poly pa = primitive_z(a, &ca), pb = primitive_z(b, &cb);
  Poly c(Q(gcd(ca, cb)));
  if (pa.is_const() || pb.is_const()) return c;
  int v = std::max(pa.max_var(), pb.max_var());
  int deg = std::max(pa.degree_in(v), pb.degree_in(v));
  mpz_class xi = 2 * std::min(norm(pa), norm(pb)) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    if (mpz_sizeinbase(xi.get_mpz_t(), 2) * (deg + 1) > 6000) return std::nullopt;
    auto h = heu_gcd(eval_at(pa, v, xi), eval_at(pb, v, xi));
    if (h) {
      Poly g = rebuild(*h, v, xi);
      if (!g.is_zero()) {
        g = primitive_z(g);
        if (divides(g, pa) && divides(g, pb)) return g * c;
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

// a scaled to integer coefficients
Poly integral(const Poly& a) {
  mpz_class l = 1;
  for (auto& [m, c] : a.terms()) l = lcm(l, c.get_den());
  return a.scaled(Q(l));
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_const() || b.is_const()) return Poly(1);
  if (a == b) return a.monic();
  if (auto g = heu_gcd(integral(a), integral(b))) return g->monic();
  int v = std::max(a.max_var(), b.max_var());
  bool in_a = a.has_var(v), in_b = b.has_var(v);
  if (!in_a) return gcd(a, content(to_upoly(b, v)));
  if (!in_b) return gcd(content(to_upoly(a, v)), b);
  UPoly ua = to_upoly(a, v), ub = to_upoly(b, v);
  if (coprime_in(a, b, v)) return gcd(content(ua), content(ub));
  Poly ca = content(ua), cb = content(ub);
  Poly c = gcd(ca, cb);
  ua = primitive(divide_all(ua, ca));
  ub = primitive(divide_all(ub, cb));
  if (ua.size() < ub.size()) std::swap(ua, ub);
  while (ub.size() > 1) {
    UPoly r = prem(ua, ub);
    ua = std::move(ub);
    if (r.empty()) {
      ub.clear();
      break;
    }
    ub = primitive(r);
  }
  if (!ub.empty()) return c.monic();  // remainder constant in v: coprime parts
  return (c * from_upoly(ua, v)).monic();
}

// ---- rational functions ----------------------------------------------------

RatFunc::RatFunc(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error("ZeroDenominator", "denominator is the zero polynomial");
  if (num.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (den.is_const()) {
    num_ = num.scaled(1 / den.const_value());
    den_ = Poly(1);
    return;
  }
  Poly g = gcd(num, den);
  Poly n = g.is_const() ? num : num.divexact(g);
  Poly d = g.is_const() ? den : den.divexact(g);
  Q s = 1 / d.lead().second;
  num_ = n.scaled(s);
  den_ = d.scaled(s);
}

RatFunc normalize(const Poly& num, const Poly& den) { return RatFunc(num, den); }

bool RatFunc::is_one() const { return den_.is_const() && num_.is_const() && num_.const_value() == 1; }

bool RatFunc::is_constant_in(int n) const {
  for (const Poly* p : {&num_, &den_})
    for (auto& [m, c] : p->terms())
      for (int i = 0; i < n && i < static_cast<int>(m.e.size()); ++i)
        if (m.e[i]) return false;
  return true;
}

RatFunc RatFunc::operator-() const {
  RatFunc r = *this;
  r.num_ = -r.num_;
  return r;
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  if (o.is_zero()) return *this;
  if (is_zero()) return o;
  if (den_.is_const() && o.den_.is_const()) return RatFunc(num_ + o.num_);
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  if (o.den_.is_const()) return RatFunc(num_ + o.num_ * den_, den_);
  if (den_.is_const()) return RatFunc(num_ * o.den_ + o.num_, o.den_);
  Poly g = gcd(den_, o.den_);
  if (g.is_const()) return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  Poly a = den_.divexact(g), b = o.den_.divexact(g);
  return RatFunc(num_ * b + o.num_ * a, a * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  if (is_zero() || o.is_zero()) return RatFunc();
  if (is_const() && o.is_const()) return RatFunc(num_.const_value() * o.num_.const_value());
  if (den_.is_const() && o.den_.is_const()) return RatFunc(num_ * o.num_);
  // cross-cancel so that the product is reduced without a final gcd
  Poly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  Poly n1 = g1.is_const() ? num_ : num_.divexact(g1);
  Poly d2 = g1.is_const() ? o.den_ : o.den_.divexact(g1);
  Poly n2 = g2.is_const() ? o.num_ : o.num_.divexact(g2);
  Poly d1 = g2.is_const() ? den_ : den_.divexact(g2);
  Poly n = n1 * n2, d = d1 * d2;
  RatFunc r;
  Q s = 1 / d.lead().second;
  r.num_ = n.scaled(s);
  r.den_ = d.scaled(s);
  return r;
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.is_zero()) throw Error("ZeroDenominator", "division by zero in K");
  RatFunc inv;
  Q s = 1 / o.num_.lead().second;
  inv.num_ = o.den_.scaled(s);
  inv.den_ = o.num_.scaled(s);
  return *this * inv;
}

RatFunc RatFunc::derivative(int v) const {
  if (den_.is_const()) return RatFunc(num_.derivative(v));
  Poly dn = num_.derivative(v), dd = den_.derivative(v);
  if (dd.is_zero()) return RatFunc(dn, den_);
  return RatFunc(dn * den_ - num_ * dd, den_ * den_);
}

Q RatFunc::eval(const std::vector<Q>& point) const {
  Q d = den_.eval(point);
  if (d == 0) throw Error("PoleAtPoint", "denominator vanishes at the evaluation point");
  return num_.eval(point) / d;
}

RatFunc RatFunc::substitute(const std::vector<const RatFunc*>& images) const {
  // bring every image to a common denominator per variable, substitute
  // numerators and clear denominators degree-wise
  int maxv = std::max(num_.max_var(), den_.max_var());
  if (maxv < 0) return *this;
  bool trivial = true;
  for (int i = 0; i <= maxv && i < static_cast<int>(images.size()); ++i)
    if (images[i] && (num_.has_var(i) || den_.has_var(i))) trivial = false;
  if (trivial) return *this;
  // rational substitution: evaluate via Horner-free expansion term by term
  RatFunc out_num, out_den;
  auto eval_poly = [&](const Poly& p) {
    RatFunc acc;
    for (auto& [m, c] : p.terms()) {
      RatFunc t(c);
      Mono keep;
      for (size_t i = 0; i < m.e.size(); ++i) {
        if (!m.e[i]) continue;
        if (i < images.size() && images[i]) {
          for (unsigned k = 0; k < m.e[i]; ++k) t = t * *images[i];
        } else {
          keep = keep * Mono::var(static_cast<int>(i), m.e[i]);
        }
      }
      acc = acc + t * RatFunc(Poly(1).mul_mono(keep, 1));
    }
    return acc;
  };
  RatFunc d = eval_poly(den_);
  if (d.is_zero()) throw Error("ZeroDenominator", "substitution makes a denominator vanish");
  return eval_poly(num_) / d;
}

RatFunc partial(const RatFunc& f, int i, int n) {
  if (i < 1 || i > n) throw Error("IndexOutOfRange", "derivation index " + std::to_string(i));
  return f.derivative(i - 1);
}

Q eval(const RatFunc& f, const std::vector<Q>& point) { return f.eval(point); }

Q eval(const RatFunc& f, const Ring& ring, const std::map<std::string, Q>& point) {
  std::vector<Q> p(ring.nvars());
  for (int i = 0; i < ring.nvars(); ++i) {
    auto it = point.find(ring.var_name(i));
    if (it != point.end()) p[i] = it->second;
  }
  return f.eval(p);
}

// ---- rings and printing ----------------------------------------------------

std::string Ring::var_name(int i) const {
  if (i < n()) return indep[i];
  if (i < nvars()) return params[i - n()];
  return "v" + std::to_string(i + 1);
}

int Ring::index_of(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (var_name(i) == name) return i;
  return -1;
}

Ring default_ring(int n, std::vector<std::string> params) {
  Ring r;
  for (int i = 1; i <= n; ++i) r.indep.push_back("x" + std::to_string(i));
  r.params = std::move(params);
  return r;
}

std::string to_string(const Q& q) { return q.get_str(); }

std::string to_string(const Poly& p, const Ring& ring) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : p.terms()) {
    Q a = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (m.is_one() || a != 1) {
      os << a.get_str();
      need_star = true;
    }
    for (int i = 0; i < static_cast<int>(m.e.size()); ++i) {
      if (!m.e[i]) continue;
      if (need_star) os << "*";
      os << ring.var_name(i);
      if (m.e[i] > 1) os << "^" << m.e[i];
      need_star = true;
    }
  }
  return os.str();
}

std::string to_string(const RatFunc& f, const Ring& ring) {
  if (f.den().is_const()) return to_string(f.num(), ring);
  auto wrap = [&](const Poly& p) {
    std::string s = to_string(p, ring);
    bool atom = p.terms().size() == 1 && p.lead().second == 1;
    return atom ? s : "(" + s + ")";
  };
  // a denominator after "/" must be a single factor
  const Poly& d = f.den();
  bool single = d.terms().size() == 1 && d.lead().second == 1 && d.lead().first.deg == 1;
  return wrap(f.num()) + "/" + (single ? to_string(d, ring) : "(" + to_string(d, ring) + ")");
}

}  // namespace dmod
