#include "f4x/rslocus.hpp"

#include <stdexcept>

#include "f4x/stabilizers.hpp"

namespace f4x {

namespace {

VElement zero_vector(const std::array<Elem, 4>& v0) {
  VElement v;
  for (int k = 0; k < 4; ++k) v.c[kH3 + k] = v0[k];
  return v;
}

void check_degree(int n) {
  if (n < 1 || n > 4) throw std::invalid_argument("rs search supports F_2 .. F_16");
}

}  // namespace

VElement RsWitness::vector() const { return zero_vector(v0); }

std::vector<Elem> root_functionals(int n, const std::array<Elem, 4>& v0) {
  check_degree(n);
  VModule m(n);
  const VElement v = zero_vector(v0);
  std::vector<Elem> out(RootSystem::kNumRoots);
  for (int a = 0; a < RootSystem::kNumRoots; ++a) out[a] = m.alpha_functional(a, v);
  return out;
}

std::optional<RsWitness> find_rs(int n) {
  check_degree(n);
  const Elem q = static_cast<Elem>(1u << n);
  std::array<Elem, 4> v0{};
  for (std::uint32_t code = 0; code < (1u << (4 * n)); ++code) {
    std::uint32_t rest = code;
    for (int k = 3; k >= 0; --k, rest /= q) v0[k] = static_cast<Elem>(rest % q);
    auto vals = root_functionals(n, v0);
    bool all = true;
    for (Elem x : vals) all = all && x != 0;
    if (all) return RsWitness{n, v0, std::move(vals)};
  }
  return std::nullopt;
}

Count rs_unipotent_stabilizer(int n, const std::array<Elem, 4>& v0) {
  check_degree(n);
  return count_solutions(n, unipotent_stabilizer_problem(zero_vector(v0)));
}

Count rs_unipotent_stabilizer(const RsWitness& w) { return rs_unipotent_stabilizer(w.n, w.v0); }

std::array<Elem, 4> reflect_zero(int n, int i, const std::array<Elem, 4>& v0) {
  VModule m(n);
  const VElement img = m.apply(SimpleLift{i}, zero_vector(v0));
  return {img.c[kH3], img.c[kH4], img.c[kHbar1], img.c[kHbar2]};
}

std::array<Elem, 4> weyl_translate(int n, const WeylElement& w, const std::array<Elem, 4>& v0) {
  std::array<Elem, 4> v = v0;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) v = reflect_zero(n, *it, v);
  return v;
}

bool rs_equivariance_check(const RsWitness& wit) {
  const auto& W = WeylGroup::get();
  for (const auto& w : W.elements()) {
    const auto vals = root_functionals(wit.n, weyl_translate(wit.n, w, wit.v0));
    // alpha(w v0) = (w^-1 alpha)(v0)
    const WeylElement wi = W.inverse(w);
    for (int a = 0; a < RootSystem::kNumRoots; ++a)
      if (vals[a] == 0 || vals[a] != wit.values[wi(a)]) return false;
  }
  return true;
}

}  // namespace f4x
