#include "f4x/fibers.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "f4x/packed.hpp"

namespace f4x {

namespace {

int simple(int i) {
  Coeffs c{0, 0, 0, 0};
  c[i] = 1;
  return RootSystem::get().index(c);
}

std::vector<int> inversion_by_height(const WeylElement& w) {
  const auto inv = WeylGroup::get().inversion_set(w);
  std::vector<int> out;
  for (int r : negative_roots_by_height())
    if (std::find(inv.begin(), inv.end(), r) != inv.end()) out.push_back(r);
  return out;
}

bool contains(const std::vector<int>& v, int x) { return std::find(v.begin(), v.end(), x) != v.end(); }

GroupWord inverse_lift(const WeylElement& w) {
  std::vector<int> rev(w.word.rbegin(), w.word.rend());
  return GroupWord::weyl_lift(rev);
}

bool nonpositive(const VElement& v) {
  for (int r = RootSystem::kNumNegative; r < RootSystem::kNumRoots; ++r)
    if (v.c[r]) return false;
  return true;
}

int leading_exponent(Count c) {
  int k = -1;
  while (c) c >>= 1, ++k;
  return k;
}

}  // namespace

CountProblem cell_problem(const VElement& xi, const WeylElement& w) {
  CountProblem p;
  p.start = xi;
  for (int r : inversion_by_height(w)) {
    p.factors.push_back({r, std::nullopt});
    p.mask |= std::uint64_t{1} << r;
  }
  return p;
}

Count cell_count(const VElement& xi, const WeylElement& w, int n) { return count_solutions(n, cell_problem(xi, w)); }

Count cell_count_oracle(const VElement& xi, const WeylElement& w) {
  const auto roots = inversion_by_height(w);
  if (roots.size() > 20) throw std::invalid_argument("brute-force cell count is limited to length 20");
  VModule m(1);
  const GroupWord winv = inverse_lift(w);
  Count total = 0;
  for (std::uint32_t bits = 0; bits < (1u << roots.size()); ++bits) {
    // u = x_{r_m}(t_m) ... x_{r_1}(t_1); u^-1 = x_{r_1}(t_1) ... x_{r_m}(t_m).
    GroupWord uinv;
    for (std::size_t k = 0; k < roots.size(); ++k) uinv.gens.emplace_back(RootElem{roots[k], static_cast<Elem>(bits >> k & 1)});
    if (nonpositive(m.apply(winv, m.apply(uinv, xi)))) ++total;
  }
  return total;
}

int CellProfile::max_exponent() const {
  int k = -1;
  for (Count c : cells) k = std::max(k, leading_exponent(c));
  return k;
}

CellProfile fiber_count(const VElement& xi, int threads, int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("fiber counts support F_2 .. F_16");
  const auto t0 = std::chrono::steady_clock::now();
  const auto& W = WeylGroup::get();
  CellProfile prof;
  prof.cells.assign(W.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < W.size();) prof.cells[k] = cell_count(xi, W.elements()[k], n);
  };
  const int nt = std::max(1, threads);
  if (nt == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nt; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (Count c : prof.cells) prof.total += c;
  prof.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return prof;
}

SemismallReport semismall_check(int k_max, const OrbitRecord& r) {
  SemismallReport s;
  s.k_max = k_max;
  s.bound = r.dim_stab - 4;
  s.ok = 2 * k_max <= s.bound;
  s.equality = 2 * k_max == s.bound;
  return s;
}

CocharacterReport cocharacter_check(int index) {
  const auto& rs = RootSystem::get();
  const OrbitRecord& rec = OrbitTable::get().at(index);
  CocharacterReport c;
  c.index = index;
  c.equal_pairings = true;
  for (int r : rec.support) {
    const int v = rec.cocharacter.pair(rs.root(r).coeffs);
    auto& slot = rs.root(r).is_long() ? c.long_exponent : c.short_exponent;
    if (v <= 0 || (slot && *slot != v)) c.equal_pairings = false;
    if (!slot) slot = v;
  }
  for (int r = 0; r < RootSystem::kNumNegative; ++r) {
    const int v = rec.cocharacter.pair(rs.root(r).coeffs);
    if (v == 0) c.zero_pairing.push_back(r);
    if (v < 0) c.negative_pairing.push_back(r);
  }
  std::vector<int> expected_zero;
  if (rec.component_group == ComponentGroup::kS3) expected_zero = {simple(0), simple(3)};
  std::sort(expected_zero.begin(), expected_zero.end());
  c.ok = c.equal_pairings && c.negative_pairing.empty() && c.zero_pairing == expected_zero;
  return c;
}

bool fixed_locus_formula_check() {
  VModule m(2);
  const auto& f = m.field();
  const auto& rs = RootSystem::get();
  const VElement xi = OrbitTable::get().find("xi17").rep();
  const int r1111 = rs.index(std::string("1111")), r1122 = rs.index(std::string("1122"));
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b) {
      const VElement lhs = m.apply(GroupWord{RootElem{simple(0), a}, RootElem{simple(3), b}}, xi);
      VElement rhs = xi;
      rhs.c[r1111] ^= a ^ b;
      rhs.c[r1122] ^= a ^ f.mul(b, b);
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<std::pair<Elem, Elem>> fixed_locus_probe(const WeylElement& w, int n) {
  VModule m(n);
  const auto inv = WeylGroup::get().inversion_set(w);
  const int a1 = simple(0), a4 = simple(3);
  const Elem amax = contains(inv, a1) ? static_cast<Elem>(m.field().order()) : 1;
  const Elem bmax = contains(inv, a4) ? static_cast<Elem>(m.field().order()) : 1;
  const VElement xi = OrbitTable::get().find("xi17").rep();
  const GroupWord winv = inverse_lift(w);
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < amax; ++a)
    for (Elem b = 0; b < bmax; ++b) {
      const GroupWord ginv{RootElem{a4, b}, RootElem{a1, a}};
      if (nonpositive(m.apply(winv, m.apply(ginv, xi)))) out.emplace_back(a, b);
    }
  return out;
}

Xi17Census xi17_cell_census(int threads) {
  const auto& W = WeylGroup::get();
  const VElement xi = OrbitTable::get().find("xi17").rep();
  const CellProfile prof = fiber_count(xi, threads);
  const int a1 = simple(0), a2 = simple(1), a4 = simple(3);
  const auto& rs = RootSystem::get();
  Xi17Census c;
  c.total = prof.total;
  c.doubles_satisfy_alpha14 = c.doubles_satisfy_alpha12 = c.pieces_ok = true;
  for (std::size_t k = 0; k < W.size(); ++k) {
    if (prof.cells[k] == 0) continue;
    const WeylElement& w = W.elements()[k];
    const WeylElement wi = W.inverse(w);
    CellClass cell;
    cell.w = k;
    cell.count = prof.cells[k];
    cell.fixed_points = fixed_locus_probe(w, 2);
    cell.is_double = cell.fixed_points.size() == 2;
    auto not_negative = [&](int r) { return !rs.root(wi(r)).negative(); };
    cell.alpha14_condition = not_negative(a1) && not_negative(a4);
    cell.alpha12_condition = not_negative(a1) && not_negative(a2);

    // Group the F_2-points by their limit (a, b) under the cocharacter.
    const CountProblem base = cell_problem(xi, w);
    const bool has_a = base.mask >> a1 & 1, has_b = base.mask >> a4 & 1;
    Count sum = 0;
    for (Elem a = 0; a <= (has_a ? 1 : 0); ++a)
      for (Elem b = 0; b <= (has_b ? 1 : 0); ++b) {
        CountProblem p = base;
        for (auto& f : p.factors) {
          if (f.root == a1) f.fixed = a;
          if (f.root == a4) f.fixed = b;
        }
        const Count piece = count_solutions(1, p);
        sum += piece;
        if (piece) cell.pieces.push_back(piece);
      }
    bool ok = sum == cell.count;
    if (cell.is_double) {
      ok = ok && cell.pieces.size() == 2;
      for (Count p : cell.pieces) ok = ok && exact_log2(p) >= 0;
      for (Count p : cell.pieces) c.k_max = std::max(c.k_max, exact_log2(p));
      ++c.m_double;
      c.doubles_satisfy_alpha14 = c.doubles_satisfy_alpha14 && cell.alpha14_condition;
      c.doubles_satisfy_alpha12 = c.doubles_satisfy_alpha12 && cell.alpha12_condition;
    } else {
      ok = ok && exact_log2(cell.count) >= 0;
      c.k_max = std::max(c.k_max, exact_log2(cell.count));
      ++c.n_single;
    }
    cell.pieces_ok = ok;
    c.pieces_ok = c.pieces_ok && ok;
    c.cells.push_back(std::move(cell));
  }
  return c;
}

VElement xi17_twisted_form() {
  VElement v = OrbitTable::get().find("xi17").rep();
  v.c[RootSystem::get().index(std::string("1122"))] ^= 1;
  return v;
}

bool xi17_twisted_form_check() {
  VModule m(2);
  const auto& f = m.field();
  const Elem w = f.generator();
  const GroupWord g{RootElem{simple(0), w}, RootElem{simple(3), w}};
  const GroupWord fg{RootElem{simple(0), f.frobenius(w)}, RootElem{simple(3), f.frobenius(w)}};
  const VElement xi = OrbitTable::get().find("xi17").rep();
  GroupWord u{RootElem{simple(0), 1}, RootElem{simple(3), 1}};
  return m.apply(g, xi) == xi17_twisted_form() && m.same_operator(g.inverse(f) * fg, u);
}

GlobalIdentity global_identity_check(const std::vector<Count>& fibers, Count xi17_twisted_fiber) {
  const auto& t = OrbitTable::get();
  if (fibers.size() != t.orbits().size()) throw std::invalid_argument("need one fiber count per orbit");
  auto big = [](Count c) {
    BigInt r = static_cast<std::uint64_t>(c >> 64);
    r <<= 64;
    r += static_cast<std::uint64_t>(c);
    return r;
  };
  GlobalIdentity g;
  BigInt flags = 0;
  const auto dist = WeylGroup::get().length_distribution();
  for (std::size_t l = 0; l < dist.size(); ++l) flags += BigInt(dist[l]) << l;
  g.rhs = flags << 24;
  for (const auto& r : t.orbits()) {
    const BigInt points = r.count.evaluate(2);
    g.lhs += points * big(fibers[r.index - 1]);
    g.lhs_twisted += points * big(r.component_group == ComponentGroup::kS3 ? xi17_twisted_fiber : fibers[r.index - 1]);
  }
  g.ok = g.lhs == g.rhs;
  g.ok_twisted = g.lhs_twisted == g.rhs;
  return g;
}

}  // namespace f4x
