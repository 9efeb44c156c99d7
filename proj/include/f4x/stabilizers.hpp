#pragma once

#include <string>
#include <vector>

#include "f4x/chevalley.hpp"
#include "f4x/packed.hpp"
#include "f4x/tables.hpp"
#include "f4x/unipotent.hpp"

namespace f4x {

/// Counting problem for {u in U(F_{2^n}) : u v = v}, u written as the
/// product of the 24 negative root groups in increasing height.
CountProblem unipotent_stabilizer_problem(const VElement& v);

/// #U_xi(F_{2^n}) for n = 1, 2.  With `oracle`, n must be 1 and the count
/// comes from the unpruned enumeration of all 2^24 products.
Count u_stabilizer_count(const VElement& v, int n, bool oracle = false);

/// Whether the word fixes v over F_{2^n}.
bool element_fixes(const GroupWord& w, const VElement& v, int n = 2);

/// u = x_{alpha_1}(1) x_{alpha_4}(1) and s = s_1 s_4 (lifts).
GroupWord xi17_u();
GroupWord xi17_s();

struct OperatorCheck {
  bool ok = false;
  std::optional<int> first_disagreement;  // basis coordinate
};

/// s u s against x_{-alpha_1}(1) x_{-alpha_4}(1) as operators over F_4.
OperatorCheck sus_identity_check();

struct Order6Census {
  std::vector<std::pair<std::string, bool>> words;  // label, fixes xi_17
  bool u_involution = false;
  bool s_involution = false;
  bool ok() const;
};
Order6Census order6_census();

/// Comparison of a q = 2 stabilizer count with the table's dim B_xi.
struct StabDimension {
  int index = 0;
  Count count = 0;
  int log2 = -1;  // -1 when count is not a power of 2
  int components = 1;  // 2 for xi_17
  int torus_rank = 0;  // rank of the maximal torus of B_xi
  int torus_rank_lattice = 0;  // 4 - rank of the support's root lattice
  int expected_dim = 0;  // table value
  bool ok = false;
};

/// Torus rank of B_xi from F_4 points: 3^r elements t of T(F_4) have t xi in
/// U(F_4) xi.
int borel_torus_rank(const VElement& v);
int support_lattice_rank(const std::vector<int>& support);

/// log2(#U_xi(F_2)) = dim B_xi - r + log2(#components).
StabDimension stabilizer_dimension(const OrbitRecord& r, bool oracle = false);

}  // namespace f4x
