// Double-duality test for torsion / parametrizability of an operator matrix.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dmod/janet.hpp"

namespace dmod {

enum class Verdict { TorsionFree, HasTorsion, Inconclusive };
std::string to_string(Verdict v);

struct TorsionElement {
  std::vector<OreOp> z;          // combination of the unknowns
  OreOp autonomous;              // P with P z in the row module of D1
  std::vector<OreOp> multipliers;  // P z = sum multipliers[i] * D1[i]
};

struct DualityReport {
  OpMatrix d1;         // input
  OpMatrix ad_d1;      // step 2
  CCResult ad_d;       // step 3: cc(ad(D1))
  OpMatrix d;          // step 4: ad(ad(D))
  CCResult d1_prime;   // step 5: cc(D)
  bool d1_in_prime = false;  // rows of D1 in the module of D1'
  bool prime_in_d1 = false;  // rows of D1' in the module of D1
  std::vector<TorsionElement> torsion;
  Verdict verdict = Verdict::Inconclusive;
  int bound = 0;
  std::string note;  // why the verdict is inconclusive, if it is
};

int default_max_order(const OpMatrix& d1);

DualityReport five_step_test(const OpMatrix& d1, int max_order);

// D with D1 * D = 0 and cc(D) equal to D1 as modules; throws HasTorsion or Inconclusive.
OpMatrix parametrize(const OpMatrix& d1, int max_order);

struct DoubleReport {
  DualityReport first;   // on D1
  std::optional<DualityReport> second;  // on the parametrization D, if the first is torsion free
  bool reflexive = false;
};
DoubleReport double_test(const OpMatrix& d1, int max_order);

// Mutual row-module membership with multipliers of order <= bound.
bool row_module_equal(const OpMatrix& a, const OpMatrix& b, int bound);

// diag(row_scale) * ad(A) * diag(col_scale) == A
bool self_adjoint_check(const OpMatrix& a, const std::vector<Q>& row_scale, const std::vector<Q>& col_scale);

// Search for a nonzero P with P z in the row module of gens, |multipliers| <= bound.
std::optional<TorsionElement> autonomous_relation(const std::vector<OreOp>& z, const OpMatrix& gens, int bound);

}  // namespace dmod
