#include "dmod/dsl.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace dmod {

namespace {

struct Tok {
  enum Kind { Ident, Int, Sym, End } kind;
  std::string text;
  int line, col;
};

std::vector<Tok> lex(const std::string& s) {
  std::vector<Tok> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto adv = [&](size_t k) {
    for (size_t j = 0; j < k; ++j) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      adv(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') adv(1);
      continue;
    }
    int l = line, cl = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, s.substr(i, j - i), l, cl});
      adv(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Int, s.substr(i, j - i), l, cl});
      adv(j - i);
    } else if (std::string("(){}[];:,+-*/^=").find(c) != std::string::npos) {
      out.push_back({Tok::Sym, std::string(1, c), l, cl});
      adv(1);
    } else {
      throw Error("SyntaxError", std::to_string(l) + ":" + std::to_string(cl) + ": unexpected character '" +
                                     std::string(1, c) + "'");
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

// Value of a subexpression: either a scalar in K or a row linear in the unknowns.
struct Val {
  bool is_row = false;
  RatFunc s;
  std::vector<OreOp> row;
};

class Parser {
 public:
  Parser(std::vector<Tok> t) : t_(std::move(t)) {}

  const Tok& peek() const { return t_[p_]; }
  bool at(const std::string& sym) const { return peek().kind != Tok::End && peek().kind != Tok::Ident && peek().text == sym; }
  bool at_word(const std::string& w) const { return peek().kind == Tok::Ident && peek().text == w; }
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("SyntaxError", std::to_string(peek().line) + ":" + std::to_string(peek().col) + ": " + msg);
  }
  void expect(const std::string& sym) {
    if (!at(sym)) fail("expected '" + sym + "'" + (peek().text.empty() ? "" : " before '" + peek().text + "'"));
    ++p_;
  }
  void expect_word(const std::string& w) {
    if (!at_word(w)) fail("expected '" + w + "'");
    ++p_;
  }
  std::string ident() {
    if (peek().kind != Tok::Ident) fail("expected identifier");
    return t_[p_++].text;
  }
  std::vector<std::string> ident_list(const std::string& stop) {
    std::vector<std::string> v;
    if (at(stop)) return v;
    v.push_back(ident());
    while (at(",")) {
      ++p_;
      v.push_back(ident());
    }
    return v;
  }
  bool done() const { return peek().kind == Tok::End; }

  void bind(const Ring* ring, const std::vector<std::string>* dep) {
    ring_ = ring;
    dep_ = dep;
  }

  Val expr() {
    Val v;
    bool neg = false;
    if (at("-") || at("+")) {
      neg = at("-");
      ++p_;
    }
    v = product();
    if (neg) v = negate(v);
    while (at("+") || at("-")) {
      bool minus = at("-");
      ++p_;
      Val w = product();
      v = add(v, minus ? negate(w) : w);
    }
    return v;
  }

 private:
  int n() const { return ring_->n(); }
  Val scalar(const RatFunc& c) {
    Val v;
    v.s = c;
    return v;
  }
  Val negate(const Val& v) {
    Val r = v;
    if (v.is_row)
      for (auto& x : r.row) x = -x;
    else
      r.s = -v.s;
    return r;
  }
  Val add(const Val& a, const Val& b) {
    if (a.is_row != b.is_row) fail("cannot add an operator term and a bare coefficient");
    Val r = a;
    if (a.is_row)
      for (size_t k = 0; k < r.row.size(); ++k) r.row[k] = r.row[k] + b.row[k];
    else
      r.s = a.s + b.s;
    return r;
  }
  Val mul(const Val& a, const Val& b) {
    if (a.is_row && b.is_row) fail("product of two unknowns is not linear");
    if (!a.is_row && !b.is_row) return scalar(a.s * b.s);
    const Val& row = a.is_row ? a : b;
    const RatFunc& c = a.is_row ? b.s : a.s;
    Val r = row;
    for (auto& x : r.row) x = x.scaled(c);
    return r;
  }
  Val product() {
    Val v = power();
    while (at("*") || at("/")) {
      bool div = at("/");
      ++p_;
      Val w = power();
      if (div) {
        if (w.is_row) fail("division by an unknown");
        if (w.s.is_zero()) fail("division by zero");
        v = mul(v, scalar(RatFunc(1) / w.s));
      } else {
        v = mul(v, w);
      }
    }
    return v;
  }
  Val power() {
    Val v = atom();
    if (at("^")) {
      ++p_;
      if (peek().kind != Tok::Int) fail("expected integer exponent");
      long k = std::stol(t_[p_++].text);
      if (v.is_row) fail("power of an unknown");
      RatFunc r(1);
      for (long i = 0; i < k; ++i) r *= v.s;
      v.s = r;
    }
    return v;
  }
  Val unknown(int k, const MultiIndex& mu) {
    Val v;
    v.is_row = true;
    v.row.assign(dep_->size(), OreOp(n()));
    v.row[k] = OreOp::d(n(), mu);
    return v;
  }
  Val atom() {
    const Tok& t = peek();
    if (t.kind == Tok::Int) {
      ++p_;
      return scalar(RatFunc(Q(t.text)));
    }
    if (at("(")) {
      ++p_;
      Val v = expr();
      expect(")");
      return v;
    }
    if (t.kind == Tok::Ident) {
      std::string name = t.text;
      if (name == "d" && p_ + 1 < t_.size() && (t_[p_ + 1].text == "[" || t_[p_ + 1].text == "(")) {
        ++p_;
        MultiIndex mu(n());
        if (at("[")) {
          ++p_;
          do {
            if (at(",")) ++p_;
            if (peek().kind != Tok::Int) fail("expected derivative index");
            int i = std::stoi(t_[p_].text);
            if (i < 1 || i > n()) fail("derivative index out of range");
            ++p_;
            mu = mu + MultiIndex::unit(n(), i - 1);
          } while (at(","));
          expect("]");
        } else {
          if (n() != 1) fail("d(u) shorthand needs exactly one independent variable");
          mu = MultiIndex::unit(1, 0);
        }
        expect("(");
        Val inner = expr();
        expect(")");
        if (!inner.is_row) fail("derivative of a coefficient; write the operator on an unknown");
        for (auto& x : inner.row) x = OreOp::d(n(), mu) * x;
        return inner;
      }
      ++p_;
      for (size_t k = 0; k < dep_->size(); ++k)
        if ((*dep_)[k] == name) return unknown(static_cast<int>(k), MultiIndex(n()));
      int idx = ring_->index_of(name);
      if (idx < 0) {
        --p_;
        fail("undeclared identifier '" + name + "'");
      }
      return scalar(RatFunc::var(idx));
    }
    fail("unexpected token '" + t.text + "'");
  }

  std::vector<Tok> t_;
  size_t p_ = 0;
  const Ring* ring_ = nullptr;
  const std::vector<std::string>* dep_ = nullptr;
};

void check_distinct(const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (auto& s : names) {
    if (s == "d") throw Error("SyntaxError", "'d' is reserved");
    if (!seen.insert(s).second) throw Error("SyntaxError", "duplicate identifier '" + s + "'");
  }
}

}  // namespace

SystemDecl parse_system(const std::string& text) {
  Parser ps(lex(text));
  SystemDecl decl;
  ps.expect_word("system");
  decl.name = ps.ident();
  ps.expect("(");
  decl.ring.params = ps.ident_list(")");
  ps.expect(")");
  ps.expect("{");
  ps.expect_word("indep");
  decl.ring.indep = ps.ident_list(";");
  ps.expect(";");
  ps.expect_word("dep");
  decl.dep = ps.ident_list(";");
  ps.expect(";");
  std::vector<std::string> all = decl.ring.indep;
  all.insert(all.end(), decl.ring.params.begin(), decl.ring.params.end());
  all.insert(all.end(), decl.dep.begin(), decl.dep.end());
  check_distinct(all);
  if (decl.ring.indep.empty()) throw Error("SyntaxError", "at least one independent variable is needed");
  decl.ops = OpMatrix(0, static_cast<int>(decl.dep.size()), decl.ring.n());
  ps.bind(&decl.ring, &decl.dep);
  while (ps.at_word("eq")) {
    ps.expect_word("eq");
    decl.eq_names.push_back(ps.ident());
    ps.expect(":");
    Val v = ps.expr();
    if (!v.is_row) {
      if (!v.s.is_zero()) ps.fail("equation has no unknown");
      v.row.assign(decl.dep.size(), OreOp(decl.ring.n()));
    }
    decl.ops.append_row(v.row);
    ps.expect(";");
  }
  ps.expect("}");
  if (!ps.done()) ps.fail("trailing input");
  check_distinct(decl.eq_names);
  return decl;
}

std::string print_system(const SystemDecl& decl) {
  auto join = [](const std::vector<std::string>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
  };
  std::ostringstream os;
  os << "system " << decl.name << "(" << join(decl.ring.params) << ") {\n";
  os << "  indep " << join(decl.ring.indep) << ";\n";
  os << "  dep " << join(decl.dep) << ";\n";
  for (int i = 0; i < decl.ops.rows(); ++i)
    os << "  eq " << decl.eq_names[i] << ": " << row_to_string(decl.ops.row(i), decl.ring, decl.dep) << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<OreOp> parse_row(const std::string& expr, const Ring& ring, const std::vector<std::string>& dep) {
  Parser ps(lex(expr));
  ps.bind(&ring, &dep);
  Val v = ps.expr();
  if (!ps.done()) ps.fail("trailing input");
  if (!v.is_row) {
    if (!v.s.is_zero()) throw Error("SyntaxError", "row has no unknown");
    return std::vector<OreOp>(dep.size(), OreOp(ring.n()));
  }
  return v.row;
}

RatFunc parse_coeff(const std::string& expr, const Ring& ring) {
  Parser ps(lex(expr));
  std::vector<std::string> none;
  ps.bind(&ring, &none);
  Val v = ps.expr();
  if (!ps.done()) ps.fail("trailing input");
  return v.s;
}

OpMatrix parse_matrix(const std::vector<std::string>& rows, const Ring& ring, const std::vector<std::string>& dep) {
  OpMatrix m(0, static_cast<int>(dep.size()), ring.n());
  for (auto& r : rows) m.append_row(parse_row(r, ring, dep));
  return m;
}

SystemDecl substitute(const SystemDecl& decl, const std::vector<std::string>& assignments) {
  std::vector<RatFunc> images;
  std::vector<const RatFunc*> ptr(decl.ring.nvars(), nullptr);
  images.reserve(assignments.size());
  for (auto& a : assignments) {
    auto eq = a.find('=');
    if (eq == std::string::npos) throw Error("SyntaxError", "substitution must read sym=value: " + a);
    std::string sym = a.substr(0, eq);
    int idx = decl.ring.index_of(sym);
    if (idx < decl.ring.n()) throw Error("SyntaxError", "only parameters can be substituted: " + sym);
    images.push_back(parse_coeff(a.substr(eq + 1), decl.ring));
    ptr[idx] = &images.back();
  }
  SystemDecl out = decl;
  out.ops = decl.ops.substitute(ptr);
  return out;
}

}  // namespace dmod
