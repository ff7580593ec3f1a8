#include "dmod/duality.hpp"

namespace dmod {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::TorsionFree:
      return "torsion_free";
    case Verdict::HasTorsion:
      return "has_torsion";
    default:
      return "inconclusive";
  }
}

int default_max_order(const OpMatrix& d1) { return 2 * (std::max(d1.order(), 0) + d1.n() + 1); }

bool row_module_equal(const OpMatrix& a, const OpMatrix& b, int bound) {
  return rows_in_module(a, b, bound) && rows_in_module(b, a, bound);
}

bool self_adjoint_check(const OpMatrix& a, const std::vector<Q>& row_scale, const std::vector<Q>& col_scale) {
  if (a.rows() != a.cols()) throw Error("DimensionMismatch", "self-adjointness needs a square matrix");
  std::vector<RatFunc> l(row_scale.begin(), row_scale.end()), r(col_scale.begin(), col_scale.end());
  return scale(adjoint_matrix(a), l, r) == a;
}

std::optional<TorsionElement> autonomous_relation(const std::vector<OreOp>& z, const OpMatrix& gens, int bound) {
  int n = gens.n();
  OpMatrix stacked(0, gens.cols(), n);
  stacked.append_row(z);
  for (int i = 0; i < gens.rows(); ++i) stacked.append_row(gens.row(i));
  Prolongator pr(stacked);
  for (int level = 0; level <= bound; ++level) {
    for (auto& w : pr.extend_to(level)) {
      auto row = pr.combination_row(w);
      if (row[0].is_zero()) continue;
      TorsionElement t;
      t.z = z;
      // normalize P to leading coefficient 1
      RatFunc inv = RatFunc(1) / row[0].lead_coeff();
      t.autonomous = row[0].scaled(inv);
      for (size_t i = 1; i < row.size(); ++i) t.multipliers.push_back(-row[i].scaled(inv));
      return t;
    }
  }
  return std::nullopt;
}

DualityReport five_step_test(const OpMatrix& d1, int max_order) {
  DualityReport rep;
  rep.d1 = d1;
  rep.bound = max_order;
  rep.ad_d1 = adjoint_matrix(d1);
  rep.ad_d = cc(rep.ad_d1, max_order);
  rep.d = adjoint_matrix(rep.ad_d.cc);
  rep.d1_prime = cc(rep.d, max_order);
  const OpMatrix& p = rep.d1_prime.cc;
  rep.d1_in_prime = rows_in_module(d1, p, max_order);

  // rows of D1' outside the module of D1, pruned so none is generated by D1 and the others kept
  OpMatrix span = d1;
  std::vector<std::vector<OreOp>> outside;
  for (int i = 0; i < p.rows(); ++i) {
    auto row = p.row(i);
    if (membership(row, span, max_order).member) continue;
    outside.push_back(row);
    span.append_row(row);
  }
  rep.prime_in_d1 = outside.empty();
  for (auto& z : outside) {
    if (auto t = autonomous_relation(z, d1, max_order)) rep.torsion.push_back(std::move(*t));
  }

  bool certified = rep.ad_d.certified_complete && rep.d1_prime.certified_complete;
  if (certified && rep.prime_in_d1 && rep.d1_in_prime) {
    rep.verdict = Verdict::TorsionFree;
  } else if (!rep.torsion.empty()) {
    rep.verdict = Verdict::HasTorsion;
    if (rep.torsion.size() < outside.size()) rep.note = "some new conditions have no autonomous relation within the bound";
  } else {
    rep.verdict = Verdict::Inconclusive;
    if (!certified)
      rep.note = "rank certificate failed at order " + std::to_string(max_order);
    else if (!rep.d1_in_prime)
      rep.note = "input rows not recovered from the new conditions within the bound";
    else
      rep.note = "new conditions found but no autonomous relation within the bound";
  }
  return rep;
}

OpMatrix parametrize(const OpMatrix& d1, int max_order) {
  DualityReport rep = five_step_test(d1, max_order);
  if (rep.verdict == Verdict::HasTorsion)
    throw Error("HasTorsion", std::to_string(rep.torsion.size()) + " torsion generator(s)");
  if (rep.verdict == Verdict::Inconclusive) throw Error("Inconclusive", rep.note);
  return rep.d;
}

DoubleReport double_test(const OpMatrix& d1, int max_order) {
  DoubleReport out;
  out.first = five_step_test(d1, max_order);
  if (out.first.verdict == Verdict::TorsionFree) {
    out.second = five_step_test(out.first.d, max_order);
    out.reflexive = out.second->verdict == Verdict::TorsionFree;
  }
  return out;
}

}  // namespace dmod
