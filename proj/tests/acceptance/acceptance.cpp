// Acceptance criteria 1-14, one PASS/FAIL line each.

#include <boost/multiprecision/cpp_int.hpp>
#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "f4x/fibers.hpp"
#include "f4x/orbits.hpp"
#include "f4x/polycheck.hpp"
#include "f4x/stabilizers.hpp"

using namespace f4x;
using Big = boost::multiprecision::cpp_int;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int simple(int i) {
  Coeffs c{0, 0, 0, 0};
  c[i] = 1;
  return RootSystem::get().index(c);
}

// Independent evaluator for the count strings: + - * ^, parentheses,
// implicit products, integers and q.
class Eval {
 public:
  Eval(const std::string& s, const Big& q) : s_(s), q_(q) {}
  Big run() {
    Big v = sum();
    if (i_ != s_.size()) throw std::runtime_error("trailing input in " + s_);
    return v;
  }

 private:
  char peek() {
    while (i_ < s_.size() && s_[i_] == ' ') ++i_;
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  Big sum() {
    Big v = product();
    for (char c; (c = peek()) == '+' || c == '-';) {
      ++i_;
      v = c == '+' ? Big(v + product()) : Big(v - product());
    }
    return v;
  }
  Big product() {
    Big v = power();
    for (char c; (c = peek()) == '*' || c == '(' || c == 'q' || std::isdigit(static_cast<unsigned char>(c));) {
      if (c == '*') ++i_;
      v *= power();
    }
    return v;
  }
  Big power() {
    Big b = atom();
    if (peek() == '^') {
      ++i_;
      const Big e = atom();
      Big r = 1;
      for (Big k = 0; k < e; ++k) r *= b;
      return r;
    }
    return b;
  }
  Big atom() {
    const char c = peek();
    if (c == '-') return ++i_, Big(-power());
    if (c == '(') {
      ++i_;
      Big v = sum();
      if (peek() != ')') throw std::runtime_error("missing ) in " + s_);
      ++i_;
      return v;
    }
    if (c == 'q') return ++i_, q_;
    Big v = 0;
    if (!std::isdigit(static_cast<unsigned char>(c))) throw std::runtime_error("bad token in " + s_);
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) v = v * 10 + (s_[i_++] - '0');
    return v;
  }
  std::string s_;
  Big q_;
  std::size_t i_ = 0;
};

Big table_value(const OrbitRecord& r, const Big& q) { return Eval(r.count_text, q).run(); }

Big big(Count c) {
  Big r = static_cast<std::uint64_t>(c >> 64);
  r <<= 64;
  return r + static_cast<std::uint64_t>(c);
}

std::uint64_t poincare_at_2() {
  std::uint64_t p = 1;
  for (int d : {2, 6, 8, 12}) p *= (std::uint64_t{1} << d) - 1;
  return p;
}

// 1. Roots from the Cartan matrix by reflection closure, compared with the library.
Outcome c1() {
  const int cartan[4][4] = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
  auto reflect = [&](int i, const Coeffs& b) {
    int pair = 0;
    for (int j = 0; j < 4; ++j) pair += b[j] * cartan[i][j];
    Coeffs r = b;
    r[i] -= pair;
    return r;
  };
  std::set<Coeffs> longs, shorts;
  auto close = [&](std::set<Coeffs>& s, Coeffs seed) {
    std::vector<Coeffs> todo{seed};
    s.insert(seed);
    while (!todo.empty()) {
      Coeffs b = todo.back();
      todo.pop_back();
      for (int i = 0; i < 4; ++i) {
        Coeffs r = reflect(i, b);
        if (s.insert(r).second) todo.push_back(r);
      }
    }
  };
  close(longs, {1, 0, 0, 0});
  close(shorts, {0, 0, 0, 1});
  const auto& rs = RootSystem::get();
  bool same = rs.roots().size() == 48 && longs.size() == 24 && shorts.size() == 24;
  for (const auto& r : rs.roots()) same = same && (r.is_long() ? longs : shorts).count(r.coeffs) == 1;
  auto a = rs.derived_edges(), b = RootSystem::transcribed_edges();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::ostringstream d;
  d << rs.roots().size() << " roots, " << longs.size() << " long / " << shorts.size() << " short, " << a.size()
    << " diagram edges" << (a == b ? " match" : " DIFFER");
  return {same && a == b, d.str()};
}

Outcome c2() {
  const auto& W = WeylGroup::get();
  const auto dist = W.length_distribution();
  std::uint64_t flags = 0;
  for (std::size_t l = 0; l < dist.size(); ++l) flags += dist[l] << l;
  std::ostringstream d;
  d << "|W| = " << W.size() << ", sum 2^l = " << flags << ", degree product = " << poincare_at_2();
  return {W.size() == 1152 && flags == 197358525 && flags == poincare_at_2(), d.str()};
}

Outcome c3() {
  const auto c = adjoint_consistency_check(2);
  std::ostringstream d;
  d << c.comparisons << " comparisons, " << c.mismatches.size() << " mismatches; regimes 1/t/t^2 and zero weight: "
    << c.linear_terms << "/" << c.quadratic_terms << "/" << c.v0_terms;
  return {c.ok() && c.comparisons == 48u * 52u * 4u && c.linear_terms && c.quadratic_terms && c.v0_terms, d.str()};
}

Outcome c4() {
  const auto& t = OrbitTable::get();
  // A degree-48 identity is settled by 49 evaluations.
  bool sum_ok = true;
  for (int q = 2; q <= 50; ++q) {
    Big s = 0;
    for (const auto& r : t.orbits()) s += table_value(r, q);
    Big q48 = 1;
    for (int k = 0; k < 48; ++k) q48 *= q;
    sum_ok = sum_ok && s == q48;
  }
  const bool poly_ok = orbit_count_sum_check().ok;
  int bad_deg = 0;
  for (const auto& r : t.orbits()) bad_deg += r.count.degree() != 52 - r.dim_stab;
  std::ostringstream d;
  d << "sum = q^48 at 49 points: " << sum_ok << ", as polynomials: " << poly_ok << ", degree mismatches: " << bad_deg;
  return {sum_ok && poly_ok && bad_deg == 0, d.str()};
}

Outcome c5() {
  const auto& t = OrbitTable::get();
  int ok = 0, unique = 0;
  std::string ranks;
  for (const auto& r : t.orbits()) {
    const auto f = orbit_stabilizer_consistency(r.index);
    ok += f.ok;
    unique += f.torus_ranks.size() == 1;
    ranks += f.torus_rank ? std::to_string(*f.torus_rank) : "?";
  }
  const bool xi17 = t.at(17).count * QPolynomial::q(12) == f4_order();
  std::ostringstream d;
  d << ok << "/24 rows fit, torus ranks " << ranks << ", xi17 = #F4/q^12: " << xi17;
  return {ok == 24 && unique == 24 && xi17, d.str()};
}

Outcome c6(std::uint64_t budget, int threads) {
  const auto& t = OrbitTable::get();
  OrbitOptions opt;
  opt.budget = budget;
  opt.threads = threads;
  bool ok = true;
  std::ostringstream d;
  int done = 0;
  for (const auto& r : t.orbits()) {
    const Big expected = table_value(r, 2);
    if (expected > Big(budget)) continue;
    const auto set = bfs_orbit_set(r.rep(), opt);
    ok = ok && Big(set->size()) == expected;
    for (const auto& other : t.orbits())
      if (other.index != r.index && set->contains(pack<1>(other.rep()))) ok = false;
    d << r.id << "=" << set->size() << " ";
    ++done;
  }
  d << "(" << done << " orbits within budget, disjoint: " << ok << ")";
  return {ok && done >= 6, d.str()};
}

Outcome c7() {
  const auto& t = OrbitTable::get();
  const auto hits = weyl_obstruction_search(t.at(20).support, t.at(21).support);
  return {hits.empty(), std::to_string(hits.size()) + " of 1152 elements qualify"};
}

Outcome c8() {
  const auto& t = OrbitTable::get();
  bool agree = true, powers = true;
  std::vector<std::string> exceptions;
  for (const auto& r : t.orbits()) {
    const Count fast = u_stabilizer_count(r.rep(), 1);
    const Count slow = u_stabilizer_count(r.rep(), 1, true);
    agree = agree && fast == slow;
    powers = powers && exact_log2(fast) >= 0;
    const auto dim = stabilizer_dimension(r);
    if (!dim.ok) exceptions.push_back(r.id + " (computed " + std::to_string(dim.log2 + dim.torus_rank - (dim.components - 1)) +
                                      ", table " + std::to_string(r.dim_b_stab) + ")");
  }
  const bool xi1 = u_stabilizer_count(t.at(1).rep(), 1) == Count{1} << 24;
  std::ostringstream d;
  d << "oracle agrees: " << agree << ", powers of 2: " << powers << ", xi1 = 2^24: " << xi1 << ", dim B exceptions:";
  for (const auto& e : exceptions) d << " " << e;
  if (exceptions.empty()) d << " none";
  return {agree && powers && xi1 && exceptions.empty(), d.str()};
}

Outcome c9() {
  const auto xi = OrbitTable::get().find("xi17").rep();
  VModule m(2);
  const GroupWord u = xi17_u(), s = xi17_s();
  const bool fix = m.apply(u, xi) == xi && m.apply(s, xi) == xi;
  const bool sus = sus_identity_check().ok;
  const bool inv = m.same_operator(u * u, GroupWord{}) && m.same_operator(s * s, GroupWord{});
  std::ostringstream d;
  d << "u, s fix xi17: " << fix << ", sus identity: " << sus << ", involutions: " << inv;
  return {fix && sus && inv, d.str()};
}

std::vector<Count> g_fibers;

Outcome c10(int threads) {
  const auto& t = OrbitTable::get();
  g_fibers.assign(24, 0);
  bool ok = true;
  std::ostringstream d;
  for (const auto& r : t.orbits()) {
    const auto p = fiber_count(r.rep(), threads);
    g_fibers[r.index - 1] = p.total;
    int k_max = p.max_exponent();
    if (r.index == 17) {
      const auto c = xi17_cell_census(threads);
      ok = ok && c.pieces_ok && c.doubles_satisfy_alpha14;
      k_max = c.k_max;
      d << "xi17: " << c.n_single << " single + " << c.m_double << " double cells, k_max " << k_max << "; ";
    } else {
      for (Count c : p.cells) ok = ok && (c == 0 || exact_log2(c) >= 0);
    }
    ok = ok && semismall_check(k_max, r).ok;
  }
  ok = ok && g_fibers[23] == 1 && g_fibers[0] == 197358525;
  d << "xi1 fiber " << to_string(g_fibers[0]) << ", xi24 fiber " << to_string(g_fibers[23]);
  return {ok, d.str()};
}

Outcome c11(int threads) {
  const auto& t = OrbitTable::get();
  if (g_fibers.empty()) c10(threads);
  Big lhs = 0;
  for (const auto& r : t.orbits()) lhs += table_value(r, 2) * big(g_fibers[r.index - 1]);
  const Big rhs = Big(poincare_at_2()) << 24;
  // The same sum with the xi17 term at the form xi17 + v_1122.
  const Count twisted = fiber_count(xi17_twisted_form(), threads).total;
  const Big lhs_tw = lhs - table_value(t.at(17), 2) * big(g_fibers[16]) + table_value(t.at(17), 2) * big(twisted);
  std::ostringstream d;
  d << "lhs " << lhs << ", rhs " << rhs << ", difference " << Big(lhs - rhs) << "; with the twisted xi17 fiber (" << to_string(twisted)
    << " instead of " << to_string(g_fibers[16]) << "): " << (lhs_tw == rhs ? "equal" : "unequal");
  return {lhs == rhs, d.str()};
}

Outcome c12() {
  const auto& rs = RootSystem::get();
  bool twice = true;
  for (const auto& r : rs.roots()) {
    const Coeffs pp = phi_sharp(phi_sharp(r.coeffs));
    for (int i = 0; i < 4; ++i) twice = twice && pp[i] == 2 * r.coeffs[i];
  }
  const auto& t = OrbitTable::get();
  const bool five = psi(GF2k(1), t.at(5).rep()) == t.at(6).rep();
  int landed = 0;
  for (const auto& tr : isogeny_transport_check()) landed += tr.ok;
  const GF2k f(2);
  bool squaring = true;
  for (int c = 0; c < kDimV; ++c)
    for (Elem l : f.elements()) squaring = squaring && psi(f, psi(f, VElement::basis(c, l))) == VElement::basis(c, f.frobenius(l));
  std::ostringstream d;
  d << "phi#^2 = 2: " << twice << ", psi(xi5) = xi6: " << five << ", transported pairs " << landed << "/5, psi^2 = squaring: " << squaring;
  return {twice && five && landed == 5 && squaring, d.str()};
}

Outcome c13() {
  const bool formula = fixed_locus_formula_check();
  VModule m(2);
  const auto xi = OrbitTable::get().find("xi17").rep();
  std::vector<std::pair<Elem, Elem>> sol;
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 0; b < 4; ++b)
      if (m.apply(GroupWord{RootElem{simple(0), a}, RootElem{simple(3), b}}, xi) == xi) sol.emplace_back(a, b);
  const std::vector<std::pair<Elem, Elem>> expect = {{0, 0}, {1, 1}};
  std::ostringstream d;
  d << "formula on F_4^2: " << formula << ", solutions:";
  for (auto [a, b] : sol) d << " (" << int(a) << "," << int(b) << ")";
  return {formula && sol == expect, d.str()};
}

Outcome c14() {
  const std::size_t classes = WeylGroup::get().conjugacy_class_count();
  int irr = 0;
  for (const auto& r : OrbitTable::get().orbits()) irr += r.component_group == ComponentGroup::kS3 ? 3 : 1;
  std::ostringstream d;
  d << classes << " classes, " << irr << " pairs, difference " << irr - static_cast<int>(classes);
  return {classes == 25 && irr == 26, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only, expect_fail;
  std::string budget = "28";
  int threads = 1;
  app.add_option("--only", only, "Run these criteria")->check(CLI::Range(1, 14));
  app.add_option("--expect-fail", expect_fail, "Criteria known to fail")->delimiter(',')->check(CLI::Range(1, 14));
  app.add_option("--budget-log2", budget, "BFS budget exponent");
  app.add_option("--threads", threads)->check(CLI::Range(1, 256));
  CLI11_PARSE(app, argc, argv);
  const std::uint64_t bfs_budget = std::uint64_t{1} << std::stoi(budget);

  const std::vector<std::function<Outcome()>> criteria = {
      c1, c2, c3, c4, c5, [&] { return c6(bfs_budget, threads); }, c7, c8, c9, [&] { return c10(threads); },
      [&] { return c11(threads); }, c12, c13, c14};

  std::set<int> failed;
  for (int k = 1; k <= 14; ++k) {
    if (!only.empty() && std::find(only.begin(), only.end(), k) == only.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) failed.insert(k);
    std::printf("criterion %2d: %s  %s  [%.2f s]\n", k, o.pass ? "PASS" : "FAIL", o.detail.c_str(), s);
    std::fflush(stdout);
  }
  std::set<int> expected;
  for (int k : expect_fail)
    if (only.empty() || std::find(only.begin(), only.end(), k) != only.end()) expected.insert(k);
  std::printf("%zu failing; expected failures:", failed.size());
  for (int k : expected) std::printf(" %d", k);
  std::printf("%s\n", expected.empty() ? " none" : "");
  return failed == expected ? 0 : 1;
}
