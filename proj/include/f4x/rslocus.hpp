#pragma once

#include <array>
#include <optional>
#include <vector>

#include "f4x/chevalley.hpp"
#include "f4x/unipotent.hpp"

namespace f4x {

/// A zero-weight vector with alpha(v0) != 0 for every root alpha.
struct RsWitness {
  int n = 0;
  std::array<Elem, 4> v0{};  // h_3, h_4, hbar_1, hbar_2
  std::vector<Elem> values;  // alpha(v0), root layout

  VElement vector() const;
};

/// Values of all 48 root functionals at v0.
std::vector<Elem> root_functionals(int n, const std::array<Elem, 4>& v0);

/// Lexicographically first witness in V_0(F_{2^n}), n in 1..4.
std::optional<RsWitness> find_rs(int n);

/// #U_v(F_{2^n}) for v = v0 (the witness, or any zero-weight vector).
Count rs_unipotent_stabilizer(int n, const std::array<Elem, 4>& v0);
Count rs_unipotent_stabilizer(const RsWitness& w);

/// Zero-weight part of the lift of s_i applied to v0.  It satisfies
/// alpha(s_i v0) = (s_i alpha)(v0).
std::array<Elem, 4> reflect_zero(int n, int i, const std::array<Elem, 4>& v0);

/// The translate of v0 by w (reduced word applied right to left).
std::array<Elem, 4> weyl_translate(int n, const WeylElement& w, const std::array<Elem, 4>& v0);

/// For every w in W: the translate of the witness is a witness and its
/// functional values are those of the witness permuted by w.
bool rs_equivariance_check(const RsWitness& w);

}  // namespace f4x
