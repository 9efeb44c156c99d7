#include "f4x/polycheck.hpp"

namespace f4x {

const QPolynomial& f4_order() {
  static const QPolynomial p = OrbitTable::get().type("F4").order;
  return p;
}

SumCheck orbit_count_sum_check(std::optional<int> skip) {
  SumCheck s;
  for (const auto& r : OrbitTable::get().orbits())
    if (!skip || *skip != r.index) s.sum += r.count;
  s.difference = s.sum - QPolynomial::q(48);
  s.ok = s.difference.is_zero();
  return s;
}

std::vector<int> degree_mismatches() {
  std::vector<int> out;
  for (const auto& r : OrbitTable::get().orbits())
    if (r.count.degree() != r.dim_orbit()) out.push_back(r.index);
  return out;
}

std::vector<int> negative_evaluations() {
  std::vector<int> out;
  for (const auto& r : OrbitTable::get().orbits())
    for (int n = 1; n <= 8; ++n)
      if (r.count.evaluate(BigInt(1) << n) < 0) {
        out.push_back(r.index);
        break;
      }
  return out;
}

StabilizerFit orbit_stabilizer_consistency(int index) {
  const auto& t = OrbitTable::get();
  const OrbitRecord& r = t.at(index);
  StabilizerFit f;
  f.index = index;
  const QPolynomial& g = f4_order();
  if (!g.divisible_by(r.count)) {
    f.detail = "orbit count does not divide #F4(q)";
    return f;
  }
  f.quotient = g.exact_div(r.count);
  if (r.component_group == ComponentGroup::kS3) {
    f.stabilizer = QPolynomial::q(r.dim_stab);
    f.ok = f.quotient == f.stabilizer;
    if (f.ok) f.torus_rank = 0, f.torus_ranks = {0};
    else f.detail = "count * q^dim differs from #F4(q)";
    return f;
  }
  const ReductiveType& red = t.type(r.reductive_type);
  const QPolynomial qm1 = QPolynomial::q() - QPolynomial(1);
  for (int tr = 0; tr <= 4; ++tr) {
    const int u = r.dim_stab - red.dim - tr;
    if (u < 0) break;
    const QPolynomial h = QPolynomial::q(u) * qm1.pow(tr) * red.order;
    if (h == f.quotient) {
      f.torus_ranks.push_back(tr);
      f.stabilizer = h;
    }
  }
  if (f.torus_ranks.size() == 1) f.torus_rank = f.torus_ranks.front();
  f.ok = f.torus_rank.has_value();
  if (f.torus_ranks.empty())
    f.detail = f.quotient.divisible_by(red.order) ? "no torus rank fits the radical" : "reductive type order does not divide";
  else if (!f.ok)
    f.detail = "several torus ranks fit";
  return f;
}

}  // namespace f4x
