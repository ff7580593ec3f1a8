// Exact arithmetic in K = Q(params)(x1..xn).
//
// Variables share one index space: 0..n-1 are the independent variables,
// n.. are the constant parameters.  Monomials are compared degree first,
// then reverse-lexicographically with x1 the smallest variable.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dmod {

using Q = mpq_class;

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct Mono {
  std::vector<uint16_t> e;  // trailing zeros trimmed
  unsigned deg = 0;

  uint16_t operator[](size_t i) const { return i < e.size() ? e[i] : 0; }
  bool is_one() const { return deg == 0; }
  static Mono var(int i, unsigned power = 1);
  Mono operator*(const Mono& o) const;
  bool divides(const Mono& o) const;
  Mono operator/(const Mono& o) const;  // requires divides
  bool operator==(const Mono& o) const { return e == o.e; }
  void trim();
};

// true iff a > b in degrevlex
bool mono_greater(const Mono& a, const Mono& b);

class Poly {
 public:
  using Term = std::pair<Mono, Q>;

  Poly() = default;
  Poly(const Q& c);  // NOLINT: constants convert implicitly
  Poly(long c) : Poly(Q(c)) {}
  static Poly var(int i);
  static Poly from_terms(std::vector<Term> t);  // any order, merges duplicates

  bool is_zero() const { return t_.empty(); }
  bool is_const() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  Q const_value() const { return t_.empty() ? Q(0) : t_[0].second; }
  const std::vector<Term>& terms() const { return t_; }
  const Term& lead() const { return t_.front(); }
  unsigned total_degree() const;
  int degree_in(int v) const;
  int max_var() const;  // -1 for constants
  bool has_var(int v) const { return degree_in(v) > 0; }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Q& c) const;
  Poly mul_mono(const Mono& m, const Q& c) const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // exact quotient; throws if o does not divide *this
  Poly divexact(const Poly& o) const;
  Poly derivative(int v) const;
  Poly monic() const;  // leading coefficient 1
  Q eval(const std::vector<Q>& point) const;
  // substitute variable i by images[i] (missing entries keep the variable)
  Poly substitute(const std::vector<const Poly*>& images) const;

 private:
  std::vector<Term> t_;  // strictly decreasing in degrevlex
};

Poly pow(const Poly& p, unsigned k);
// monic gcd; gcd(0,0) = 0
Poly gcd(const Poly& a, const Poly& b);

class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(const Q& c) : num_(c), den_(1) {}  // NOLINT
  RatFunc(long c) : RatFunc(Q(c)) {}          // NOLINT
  RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT
  // normalize: reduce by gcd, make the denominator monic
  RatFunc(const Poly& num, const Poly& den);
  static RatFunc var(int i) { return RatFunc(Poly::var(i)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_const() const { return num_.is_const() && den_.is_const(); }
  bool is_one() const;
  Q const_value() const { return num_.const_value(); }
  // true if no independent variable 0..n-1 occurs
  bool is_constant_in(int n) const;
  unsigned weight() const { return num_.total_degree() + den_.total_degree(); }
  size_t size() const { return num_.terms().size() + den_.terms().size(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  RatFunc derivative(int v) const;
  Q eval(const std::vector<Q>& point) const;
  RatFunc substitute(const std::vector<const RatFunc*>& images) const;

 private:
  Poly num_, den_;
};

// Names of the variables of one system: independent variables then parameters.
struct Ring {
  std::vector<std::string> indep;
  std::vector<std::string> params;

  int n() const { return static_cast<int>(indep.size()); }
  int nvars() const { return static_cast<int>(indep.size() + params.size()); }
  std::string var_name(int i) const;
  int index_of(const std::string& name) const;  // -1 if unknown
  bool operator==(const Ring& o) const { return indep == o.indep && params == o.params; }
};

// Ring with names x1..xn and the given parameters.
Ring default_ring(int n, std::vector<std::string> params = {});

RatFunc normalize(const Poly& num, const Poly& den);
// d/dx^i with i in 1..n
RatFunc partial(const RatFunc& f, int i, int n);
// point indexed like the ring variables (x's then parameters)
Q eval(const RatFunc& f, const std::vector<Q>& point);
Q eval(const RatFunc& f, const Ring& ring, const std::map<std::string, Q>& point);

std::string to_string(const Q& q);
std::string to_string(const Poly& p, const Ring& ring);
std::string to_string(const RatFunc& f, const Ring& ring);

}  // namespace dmod
