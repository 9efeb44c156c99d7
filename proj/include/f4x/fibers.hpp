#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "f4x/chevalley.hpp"
#include "f4x/qpoly.hpp"
#include "f4x/tables.hpp"
#include "f4x/unipotent.hpp"

namespace f4x {

/// The points u w B of the Bruhat cell of w (u in U_w, the product of the
/// root groups of the inversion set of w) with w^-1 u^-1 xi in V^{<=0}.
/// Equivalently (u xi) vanishes on every root of the inversion set.
CountProblem cell_problem(const VElement& xi, const WeylElement& w);

/// Number of F_{2^n}-points of the fiber of xi in the cell of w.
Count cell_count(const VElement& xi, const WeylElement& w, int n = 1);

/// Same count by brute force: every u in U_w(F_2), then the lift of w^-1
/// applied to u^-1 xi, then a test of the positive-root coordinates.
Count cell_count_oracle(const VElement& xi, const WeylElement& w);

struct CellProfile {
  std::vector<Count> cells;  // indexed like WeylGroup::elements()
  Count total = 0;
  double seconds = 0;

  /// log2 of the largest nonempty cell; cells that are not powers of two
  /// contribute the exponent of their leading bit.
  int max_exponent() const;
};

CellProfile fiber_count(const VElement& xi, int threads = 1, int n = 1);

struct SemismallReport {
  int k_max = 0;
  int bound = 0;  // dim G_xi - 4
  bool ok = false;
  bool equality = false;
};

/// 2 k_max <= 48 - dim orbit, with k_max the largest affine piece.
SemismallReport semismall_check(int k_max, const OrbitRecord& r);

struct CocharacterReport {
  int index = 0;
  std::optional<int> short_exponent;  // common pairing with the short support
  std::optional<int> long_exponent;
  bool equal_pairings = false;
  std::vector<int> zero_pairing;  // negative roots pairing to 0
  std::vector<int> negative_pairing;  // negative roots pairing below 0
  bool ok = false;
};

/// Equal positive pairings on each length of the support, and positivity on
/// every negative root (for xi_17: zero exactly on alpha_1, alpha_4).
CocharacterReport cocharacter_check(int index);

/// x_{alpha_1}(a) x_{alpha_4}(b) xi_17 = xi_17 + (a + b) v_1111 + (a + b^2) v_1122
/// for all a, b in F_4.
bool fixed_locus_formula_check();

/// Points x_{alpha_1}(a) x_{alpha_4}(b) w B of the fiber of xi_17 over
/// F_{2^n}.  A parameter whose root is outside the inversion set of w does
/// not move the point and is held at 0.
std::vector<std::pair<Elem, Elem>> fixed_locus_probe(const WeylElement& w, int n);

struct CellClass {
  std::size_t w = 0;
  Count count = 0;
  bool is_double = false;
  std::vector<std::pair<Elem, Elem>> fixed_points;  // probe over F_4
  std::vector<Count> pieces;  // F_2 points grouped by limit point, nonzero only
  bool alpha14_condition = false;  // w^-1(alpha_1), w^-1(alpha_4) not negative
  bool alpha12_condition = false;  // w^-1(alpha_1), w^-1(alpha_2) not negative
  bool pieces_ok = false;  // every piece a power of two, two pieces iff double
};

struct Xi17Census {
  int n_single = 0;
  int m_double = 0;
  std::vector<CellClass> cells;  // nonempty cells only
  bool doubles_satisfy_alpha14 = false;
  bool doubles_satisfy_alpha12 = false;
  bool pieces_ok = false;
  int k_max = 0;
  Count total = 0;
};

Xi17Census xi17_cell_census(int threads = 1);

/// xi_17 + v_1122, the F_2-form of O_17 attached to the class of u: it is
/// g xi_17 for g = x_{alpha_1}(w) x_{alpha_4}(w) over F_4 with g^-1 F(g) = u.
VElement xi17_twisted_form();
bool xi17_twisted_form_check();

struct GlobalIdentity {
  BigInt lhs, rhs;
  bool ok = false;
  /// The same sum with the xi_17 term evaluated at the twisted form.
  BigInt lhs_twisted;
  bool ok_twisted = false;
};

/// sum_i #O_i(F_2) * #fiber(xi_i)  against  #(G/B)(F_2) * 2^24.
GlobalIdentity global_identity_check(const std::vector<Count>& fibers, Count xi17_twisted_fiber);

}  // namespace f4x
