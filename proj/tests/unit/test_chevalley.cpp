#include "doctest.h"
#include "f4x/chevalley.hpp"

#include <random>

using namespace f4x;

namespace {
int idx(const char* s) { return RootSystem::get().index(std::string(s)); }
VElement v(const char* s) { return VElement::basis(idx(s)); }
}  // namespace

TEST_CASE("root elements on basis vectors") {
  VModule m(2);
  const Elem t = 2, t2 = 3;
  CHECK(m.apply(RootElem{idx("0100"), t}, v("0010")) == v("0010") + VElement::basis(idx("0110"), t));
  CHECK(m.apply(RootElem{idx("0010"), t}, v("0100")) == v("0100") + VElement::basis(idx("0120"), t2));
  CHECK(m.apply(RootElem{idx("1000"), t}, v("0001")) == v("0001"));
  CHECK(m.apply(RootElem{idx("0001"), t}, VElement::basis(kH3)) == VElement::basis(kH3) + VElement::basis(idx("0001"), t));
}

TEST_CASE("torus") {
  VModule m(2);
  const Elem s = 2;
  TorusElem a1{{s, 1, 1, 1}};
  CHECK(m.apply(a1, v("1000")) == VElement::basis(idx("1000"), m.field().mul(s, s)));
  CHECK(m.apply(a1, v("0100")) == VElement::basis(idx("0100"), m.field().inv(s)));
  for (int h = kH3; h <= kHbar2; ++h) CHECK(m.apply(a1, VElement::basis(h)) == VElement::basis(h));
}

TEST_CASE("simple lifts") {
  VModule m(2);
  CHECK(m.apply(SimpleLift{1}, v("0010")) == v("0110"));
  for (int i = 0; i < 4; ++i) {
    GroupWord sq{SimpleLift{i}, SimpleLift{i}};
    CHECK(m.same_operator(sq, GroupWord{}));
  }
  // Braid relations (s_i s_j)^m_ij = 1.
  const int mij[4][4] = {{1, 3, 2, 2}, {3, 1, 4, 2}, {2, 4, 1, 3}, {2, 2, 3, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      GroupWord w = GroupWord{SimpleLift{i}, SimpleLift{j}}.power(mij[i][j]);
      CHECK(m.same_operator(w, GroupWord{}));
    }
}

TEST_CASE("lifts permute root lines like the Weyl group") {
  VModule m(1);
  const auto& rs = RootSystem::get();
  for (int i = 0; i < 4; ++i)
    for (int b = 0; b < 48; ++b) CHECK(m.apply(SimpleLift{i}, VElement::basis(b)) == VElement::basis(rs.reflect(i, b)));
}

TEST_CASE("one-parameter law and word inverse") {
  std::mt19937 rng(3);
  for (int n : {1, 2, 3}) {
    VModule m(n);
    const auto& f = m.field();
    for (int a = 0; a < 48; ++a) {
      for (int k = 0; k < (n == 1 ? 4 : 6); ++k) {
        Elem s = rng() % f.order(), t = rng() % f.order();
        if (n == 1) s = k & 1, t = k >> 1;
        GroupWord lhs{RootElem{a, s}, RootElem{a, t}};
        GroupWord rhs{RootElem{a, static_cast<Elem>(s ^ t)}};
        CHECK(m.same_operator(lhs, rhs));
      }
    }
    GroupWord w{RootElem{3, 1}, TorusElem{{f.generator(), 1, 1, f.generator()}}, SimpleLift{2}, RootElem{30, f.generator()}};
    CHECK(m.same_operator(w * w.inverse(f), GroupWord{}));
  }
}

TEST_CASE("torus conjugation") {
  VModule m(3);
  const auto& f = m.field();
  const auto& rs = RootSystem::get();
  TorusElem h{{2, 3, 5, 7}};
  for (int a = 0; a < 48; ++a) {
    Elem scale = 1;
    for (int i = 0; i < 4; ++i) scale = f.mul(scale, f.pow(h.t[i], rs.pairing(rs.root(a).coeffs, i)));
    GroupWord lhs = GroupWord{h, RootElem{a, 6}} * GroupWord{h}.inverse(f);
    GroupWord rhs{RootElem{a, f.mul(scale, 6)}};
    CHECK(m.same_operator(lhs, rhs));
  }
}

TEST_CASE("summands are preserved by every generator") {
  VModule m(1);
  std::vector<Generator> gens;
  for (int a = 0; a < 48; ++a) gens.push_back(RootElem{a, 1});
  for (int i = 0; i < 4; ++i) gens.push_back(SimpleLift{i});
  for (const auto& g : gens)
    for (int c = 0; c < kDimV; ++c) {
      VElement out = m.apply(g, VElement::basis(c));
      for (int d : out.support()) CHECK(in_gs_summand(d) == in_gs_summand(c));
    }
}

TEST_CASE("alpha functionals") {
  VModule m(1);
  CHECK(m.alpha_functional(idx("0001"), VElement::basis(kH3)) == 1);
  VElement hs = VElement::basis(kH3) + VElement::basis(kH4);
  for (int a = 0; a < 48; ++a) {
    if (RootSystem::get().root(a).is_long()) CHECK(m.alpha_functional(a, hs) == 0);
    bool nonzero = false;
    for (int h = kH3; h <= kHbar2; ++h) nonzero = nonzero || alpha_on_zero_coord(a, h);
    CHECK(nonzero);
  }
}

TEST_CASE("adjoint oracle") {
  GF2k f(2);
  const auto& rs = RootSystem::get();
  for (int a = 0; a < 48; ++a) {
    AdjointElement x;
    x.c[RootSystem::negation(a)] = 1;
    AdjointElement y = adjoint_apply(f, a, 2, x);
    CHECK(y.c[a] == 3);
    const Coeffs& cv = rs.coroot(a);
    for (int j = 0; j < 4; ++j) CHECK(y.c[48 + j] == ((cv[j] & 1) ? 2 : 0));
  }
  AdjointElement h;
  h.c[48 + 2] = 1;  // H_3; long roots vanish on it
  CHECK(adjoint_apply(f, idx("2342"), 3, h) == h);

  auto rep = adjoint_consistency_check(2);
  CHECK(rep.ok());
  CHECK(rep.comparisons == 48u * 52u * 4u);
  CHECK(rep.linear_terms > 0);
  CHECK(rep.quadratic_terms > 0);
  CHECK(rep.v0_terms > 0);
  for (const auto& mm : rep.mismatches) MESSAGE(mm.alpha << " " << mm.coord << " " << mm.reason);
}

TEST_CASE("psi") {
  GF2k f(2);
  VElement xi5 = v("0121") + v("1111");
  VElement xi6 = v("1220") + v("1122");
  CHECK(psi(f, xi5) == xi6);
  CHECK(psi(f, VElement::basis(idx("0010"), 2)) == VElement::basis(psi_target(idx("0010")), 3));
  for (int c = 0; c < kDimV; ++c) {
    for (Elem l : {Elem{1}, Elem{2}, Elem{3}}) {
      CHECK(psi(f, psi(f, VElement::basis(c, l))) == VElement::basis(c, f.mul(l, l)));
    }
  }
}

TEST_CASE("psi is equivariant for the isogeny on generators") {
  VModule m(2);
  const auto& f = m.field();
  std::vector<Generator> gens;
  for (int a = 0; a < 48; ++a)
    for (Elem t : {Elem{1}, Elem{2}, Elem{3}}) gens.push_back(RootElem{a, t});
  for (int i = 0; i < 4; ++i) gens.push_back(SimpleLift{i});
  gens.push_back(TorusElem{{2, 3, 1, 2}});
  gens.push_back(TorusElem{{1, 2, 3, 3}});
  for (const auto& g : gens) {
    const Generator pg = isogeny_image(f, g);
    for (int c = 0; c < kDimV; ++c) {
      for (Elem l : {Elem{1}, Elem{2}}) {
        VElement e = VElement::basis(c, l);
        CHECK(psi(f, m.apply(g, e)) == m.apply(pg, psi(f, e)));
      }
    }
  }
}
