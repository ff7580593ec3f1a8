// The .sys input language.
//
//   system name(p1, p2) {
//     indep x, t;
//     dep u, v;
//     eq e1: d[1,2](u) - u - d[2,2](v);
//   }
//
// Coefficients are rational functions of the independent variables and the
// parameters; x^k is accepted for integer powers.  d(u) means d[1](u) when n = 1.
#pragma once

#include <string>
#include <vector>

#include "dmod/ore.hpp"

namespace dmod {

struct SystemDecl {
  std::string name;
  Ring ring;
  std::vector<std::string> dep;
  std::vector<std::string> eq_names;
  OpMatrix ops;  // one row per equation, one column per unknown

  bool operator==(const SystemDecl& o) const {
    return name == o.name && ring == o.ring && dep == o.dep && eq_names == o.eq_names && ops == o.ops;
  }
};

SystemDecl parse_system(const std::string& text);
std::string print_system(const SystemDecl& decl);

// One operator row in the unknowns `dep`, e.g. "d[1](u) - x1*v".
std::vector<OreOp> parse_row(const std::string& expr, const Ring& ring, const std::vector<std::string>& dep);
RatFunc parse_coeff(const std::string& expr, const Ring& ring);
OpMatrix parse_matrix(const std::vector<std::string>& rows, const Ring& ring, const std::vector<std::string>& dep);

// Replace parameters: each entry is "sym=expr" with expr over the ring.
SystemDecl substitute(const SystemDecl& decl, const std::vector<std::string>& assignments);

}  // namespace dmod
