#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "f4x/gf2k.hpp"
#include "f4x/rootsys.hpp"

namespace f4x {

using Elem = GF2k::Elem;

/// Dimension of V = g_s + g/g_s.
inline constexpr int kDimV = 52;

/// Coordinates 0..47 are root coordinates (RootSystem layout); the last four
/// span the zero weight space: h_3, h_4 span h_s and hbar_1, hbar_2 span h/h_s.
enum ZeroCoord : int { kH3 = 48, kH4 = 49, kHbar1 = 50, kHbar2 = 51 };

/// True for the coordinates spanning g_s (short roots, h_3, h_4).
bool in_gs_summand(int coord);

/// A vector of V over F_{2^n}.  The field is carried by the caller.
struct VElement {
  std::array<Elem, kDimV> c{};

  static VElement basis(int coord, Elem value = 1) {
    VElement v;
    v.c[coord] = value;
    return v;
  }
  /// Sum of v_beta over the given root indices (coefficient 1).
  static VElement from_support(const std::vector<int>& roots);

  bool is_zero() const;
  std::vector<int> support() const;
  VElement& operator+=(const VElement& o) {
    for (int i = 0; i < kDimV; ++i) c[i] ^= o.c[i];
    return *this;
  }
  friend VElement operator+(VElement a, const VElement& b) { return a += b; }
  friend bool operator==(const VElement&, const VElement&) = default;
};

std::string to_string(const VElement& v);

/// x_alpha(t).
struct RootElem {
  int root = 0;
  Elem t = 1;
};
/// prod_i alpha_i^vee(t_i); all t_i nonzero.
struct TorusElem {
  std::array<Elem, 4> t{1, 1, 1, 1};
};
/// The lift phi_{alpha_i}([[0,1],[1,0]]) of s_i, i in 0..3.
struct SimpleLift {
  int i = 0;
};

using Generator = std::variant<RootElem, TorusElem, SimpleLift>;

/// A product g_0 g_1 ... g_{k-1} of generators.  As an operator the
/// rightmost factor acts first.
struct GroupWord {
  std::vector<Generator> gens;

  GroupWord() = default;
  GroupWord(std::initializer_list<Generator> g) : gens(g) {}

  GroupWord& operator*=(const GroupWord& o) {
    gens.insert(gens.end(), o.gens.begin(), o.gens.end());
    return *this;
  }
  friend GroupWord operator*(GroupWord a, const GroupWord& b) { return a *= b; }
  GroupWord inverse(const GF2k& field) const;
  GroupWord power(int k) const;

  /// The lift w_dot = s_{word[0]}^dot s_{word[1]}^dot ... of a Weyl word.
  static GroupWord weyl_lift(const std::vector<int>& word);
};

std::string to_string(const Generator& g);
std::string to_string(const GroupWord& w);

/// Action of generators on V over a fixed field.
///
/// Root elements act by the root-string rule: on v_beta with beta != -alpha,
/// add t v_{alpha+beta} if alpha+beta is a root of beta's length, else add
/// t^2 v_{2alpha+beta} if that is a root of beta's length.  On the zero
/// weight space x_alpha(t) v = v + t alpha(v) v_alpha, and
/// x_alpha(t) v_{-alpha} = v_{-alpha} + t (alpha^vee mod 2) + t^2 v_alpha.
class VModule {
 public:
  explicit VModule(int n);

  const GF2k& field() const { return field_; }

  VElement apply(const RootElem& g, const VElement& v) const;
  VElement apply(const TorusElem& g, const VElement& v) const;
  VElement apply(const SimpleLift& g, const VElement& v) const;
  VElement apply(const Generator& g, const VElement& v) const;
  VElement apply(const GroupWord& w, const VElement& v) const;

  /// alpha(v) for v in V_0 (only the last four coordinates are read).
  Elem alpha_functional(int alpha, const VElement& v) const;

  /// Whether two words act identically on all 52 basis vectors (and, over
  /// fields larger than F_2, on the basis scaled by the generator).
  bool same_operator(const GroupWord& a, const GroupWord& b) const;
  /// First basis coordinate on which the two words disagree.
  std::optional<int> first_disagreement(const GroupWord& a, const GroupWord& b) const;

 private:
  GF2k field_;
};

/// alpha(h) mod 2 for the zero-weight basis coordinate h (kH3..kHbar2).
int alpha_on_zero_coord(int alpha, int coord);

/// Bitmask of the coordinates other than `coord` that x_alpha(t) e_coord
/// can have nonzero.
std::uint64_t action_reach(int alpha, int coord);

// --- adjoint oracle -------------------------------------------------------

/// Element of g on the Chevalley basis {X_beta (48, root layout), H_1..H_4}.
struct AdjointElement {
  std::array<Elem, kDimV> c{};
  friend bool operator==(const AdjointElement&, const AdjointElement&) = default;
};

/// x_alpha(t) on g from the Chevalley formulas with signs dropped:
/// x_alpha(t) X_beta = sum_k t^k C(p+k, k) X_{beta+k alpha},
/// x_alpha(t) X_{-alpha} = X_{-alpha} + t H_alpha + t^2 X_alpha,
/// x_alpha(t) H = H + t alpha(H) X_alpha.
AdjointElement adjoint_apply(const GF2k& field, int alpha, Elem t, const AdjointElement& x);

struct ConsistencyMismatch {
  int alpha = 0;
  int coord = 0;
  Elem t = 0;
  std::string reason;
};

struct ConsistencyReport {
  int field_degree = 0;
  std::size_t comparisons = 0;
  /// Number of (alpha, basis, t) cases in which a t, t^2 term was nonzero.
  std::size_t linear_terms = 0;
  std::size_t quadratic_terms = 0;
  std::size_t v0_terms = 0;
  std::vector<ConsistencyMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Projects the adjoint action to V (g_s into g, g onto g/g_s) and compares it
/// with VModule for every root, every basis vector and every t in F_{2^n}.
ConsistencyReport adjoint_consistency_check(int n = 2);

// --- special isogeny ------------------------------------------------------

/// psi: V -> V.  Long source v_beta -> v_alpha with phi#(alpha) = beta;
/// short source lambda v_beta -> lambda^2 v_alpha with phi#(alpha) = 2 beta.
/// On V_0: hbar_1 -> h_4, hbar_2 -> h_3, and h_3 -> hbar_2, h_4 -> hbar_1
/// with the coefficient squared.
VElement psi(const GF2k& field, const VElement& v);

/// Target coordinate of psi for each source coordinate.
int psi_target(int coord);

/// The isogeny on generators: x_gamma(t) -> x_{phi#(gamma)}(t^2) for short
/// gamma and x_{phi#(gamma)/2}(t) for long gamma; s_i -> s_{5-i};
/// prod alpha_i^vee(t_i) -> alpha_1^vee(t_4^2) alpha_2^vee(t_3^2) alpha_3^vee(t_2) alpha_4^vee(t_1).
Generator isogeny_image(const GF2k& field, const Generator& g);
GroupWord isogeny_image(const GF2k& field, const GroupWord& w);

}  // namespace f4x
