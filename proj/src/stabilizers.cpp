#include "f4x/stabilizers.hpp"

#include <stdexcept>

namespace f4x {

namespace {

int simple(int i) {
  Coeffs c{0, 0, 0, 0};
  c[i] = 1;
  return RootSystem::get().index(c);
}

}  // namespace

CountProblem unipotent_stabilizer_problem(const VElement& v) {
  CountProblem p;
  p.start = v;
  p.target = v;
  p.mask = kAllCoords;
  for (int r : negative_roots_by_height()) p.factors.push_back({r, std::nullopt});
  return p;
}

Count u_stabilizer_count(const VElement& v, int n, bool oracle) {
  if (n < 1 || n > 2) throw std::invalid_argument("stabilizer counts support F_2 and F_4");
  const CountProblem p = unipotent_stabilizer_problem(v);
  if (oracle) {
    if (n != 1) throw std::invalid_argument("plain enumeration is limited to F_2");
    return count_solutions_plain(1, p);
  }
  return count_solutions(n, p);
}

bool element_fixes(const GroupWord& w, const VElement& v, int n) {
  VModule m(n);
  return m.apply(w, v) == v;
}

GroupWord xi17_u() { return GroupWord{RootElem{simple(0), 1}, RootElem{simple(3), 1}}; }
GroupWord xi17_s() { return GroupWord{SimpleLift{0}, SimpleLift{3}}; }

OperatorCheck sus_identity_check() {
  VModule m(2);
  const GroupWord s = xi17_s(), u = xi17_u();
  const GroupWord rhs{RootElem{RootSystem::negation(simple(0)), 1}, RootElem{RootSystem::negation(simple(3)), 1}};
  OperatorCheck r;
  r.first_disagreement = m.first_disagreement(s * u * s, rhs);
  r.ok = !r.first_disagreement;
  return r;
}

bool Order6Census::ok() const {
  if (!u_involution || !s_involution) return false;
  for (const auto& [label, fixes] : words)
    if (!fixes) return false;
  return true;
}

Order6Census order6_census() {
  const auto xi = OrbitTable::get().find("xi17").rep();
  const GroupWord u = xi17_u(), s = xi17_s();
  VModule m(2);
  Order6Census c;
  const std::vector<std::pair<std::string, GroupWord>> words = {
      {"e", GroupWord{}}, {"u", u}, {"s", s}, {"us", u * s}, {"su", s * u}, {"usu", u * s * u}};
  for (const auto& [label, w] : words) c.words.emplace_back(label, m.apply(w, xi) == xi);
  c.u_involution = m.same_operator(u * u, GroupWord{});
  c.s_involution = m.same_operator(s * s, GroupWord{});
  return c;
}

int support_lattice_rank(const std::vector<int>& support) {
  // Rank over Q of the coefficient vectors, by fraction-free elimination.
  std::vector<std::array<long long, 4>> rows;
  for (int r : support) {
    const Coeffs& c = RootSystem::get().root(r).coeffs;
    rows.push_back({c[0], c[1], c[2], c[3]});
  }
  int rank = 0;
  for (int col = 0; col < 4 && rank < static_cast<int>(rows.size()); ++col) {
    int piv = -1;
    for (int i = rank; i < static_cast<int>(rows.size()); ++i)
      if (rows[i][col] != 0) piv = i;
    if (piv < 0) continue;
    std::swap(rows[rank], rows[piv]);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      const long long a = rows[rank][col], b = rows[i][col];
      for (int j = 0; j < 4; ++j) rows[i][j] = rows[i][j] * a - rows[rank][j] * b;
    }
    ++rank;
  }
  return rank;
}

int borel_torus_rank(const VElement& v) {
  VModule m(2);
  int hits = 0;
  for (Elem a = 1; a < 4; ++a)
    for (Elem b = 1; b < 4; ++b)
      for (Elem c = 1; c < 4; ++c)
        for (Elem d = 1; d < 4; ++d) {
          CountProblem p = unipotent_stabilizer_problem(v);
          p.start = m.apply(TorusElem{{a, b, c, d}}, v);
          if (count_solutions(2, p) > 0) ++hits;
        }
  int r = 0;
  for (int k = 1; k < hits; k *= 3) ++r;
  int pw = 1;
  for (int i = 0; i < r; ++i) pw *= 3;
  if (pw != hits) throw std::logic_error("torus image in B_xi(F_4) is not a power of 3: " + std::to_string(hits));
  return r;
}

StabDimension stabilizer_dimension(const OrbitRecord& rec, bool oracle) {
  StabDimension d;
  d.index = rec.index;
  const VElement v = rec.rep();
  d.count = u_stabilizer_count(v, 1, oracle);
  d.log2 = exact_log2(d.count);
  d.components = rec.component_group == ComponentGroup::kS3 ? 2 : 1;
  d.torus_rank_lattice = 4 - support_lattice_rank(rec.support);
  d.torus_rank = borel_torus_rank(v);
  d.expected_dim = rec.dim_b_stab;
  const int comp_log = d.components == 2 ? 1 : 0;
  d.ok = d.log2 >= 0 && d.log2 == rec.dim_b_stab - d.torus_rank + comp_log;
  return d;
}

}  // namespace f4x
