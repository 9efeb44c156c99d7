#include "f4x/chevalley.hpp"

#include <sstream>
#include <stdexcept>

namespace f4x {

namespace {

struct Term {
  int target;
  int power;  // 1 or 2
};

// For every root alpha and source coordinate c: the terms that x_alpha(t)
// adds to e_c besides e_c itself.
struct ActionTable {
  std::array<std::array<std::vector<Term>, kDimV>, RootSystem::kNumRoots> terms;
  std::array<std::array<int, 4>, RootSystem::kNumRoots> torus_exp{};

  ActionTable() {
    const auto& rs = RootSystem::get();
    for (int a = 0; a < RootSystem::kNumRoots; ++a) {
      const Root& ra = rs.root(a);
      for (int b = 0; b < RootSystem::kNumRoots; ++b) {
        const Root& rb = rs.root(b);
        if (b == RootSystem::negation(a)) {
          const Coeffs& cv = rs.coroot(a);
          if (ra.is_long()) {
            if (cv[0] & 1) terms[a][b].push_back({kHbar1, 1});
            if (cv[1] & 1) terms[a][b].push_back({kHbar2, 1});
          } else {
            if (cv[2] & 1) terms[a][b].push_back({kH3, 1});
            if (cv[3] & 1) terms[a][b].push_back({kH4, 1});
          }
          terms[a][b].push_back({a, 2});
          continue;
        }
        Coeffs s1 = rb.coeffs, s2 = rb.coeffs;
        for (int i = 0; i < 4; ++i) {
          s1[i] += ra.coeffs[i];
          s2[i] += 2 * ra.coeffs[i];
        }
        if (auto r = rs.index_of(s1); r && rs.root(*r).length == rb.length) {
          terms[a][b].push_back({*r, 1});
        } else if (auto r2 = rs.index_of(s2); r2 && rs.root(*r2).length == rb.length) {
          terms[a][b].push_back({*r2, 2});
        }
      }
      for (int h = kH3; h <= kHbar2; ++h) {
        if (alpha_on_zero_coord(a, h)) terms[a][h].push_back({a, 1});
      }
      for (int i = 0; i < 4; ++i) torus_exp[a][i] = rs.pairing(ra.coeffs, i);
    }
  }
};

const ActionTable& table() {
  static const ActionTable t;
  return t;
}

int simple_root(int i) {
  Coeffs c{0, 0, 0, 0};
  c[i] = 1;
  return RootSystem::get().index(c);
}

}  // namespace

bool in_gs_summand(int coord) {
  if (coord >= RootSystem::kNumRoots) return coord == kH3 || coord == kH4;
  return !RootSystem::get().root(coord).is_long();
}

int alpha_on_zero_coord(int alpha, int coord) {
  const auto& rs = RootSystem::get();
  const Root& r = rs.root(alpha);
  int j;
  switch (coord) {
    case kH3: j = r.is_long() ? -1 : 2; break;
    case kH4: j = r.is_long() ? -1 : 3; break;
    case kHbar1: j = r.is_long() ? 0 : -1; break;
    case kHbar2: j = r.is_long() ? 1 : -1; break;
    default: throw std::invalid_argument("not a zero-weight coordinate");
  }
  if (j < 0) return 0;
  return rs.pairing(r.coeffs, j) & 1;
}

std::uint64_t action_reach(int alpha, int coord) {
  std::uint64_t m = 0;
  for (const Term& t : table().terms[alpha][coord]) m |= std::uint64_t{1} << t.target;
  return m;
}

VElement VElement::from_support(const std::vector<int>& roots) {
  VElement v;
  for (int r : roots) v.c[r] ^= 1;
  return v;
}

bool VElement::is_zero() const {
  for (Elem x : c)
    if (x) return false;
  return true;
}

std::vector<int> VElement::support() const {
  std::vector<int> out;
  for (int i = 0; i < kDimV; ++i)
    if (c[i]) out.push_back(i);
  return out;
}

std::string to_string(const VElement& v) {
  static const char* kZero[] = {"h3", "h4", "hbar1", "hbar2"};
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < kDimV; ++i) {
    if (!v.c[i]) continue;
    if (!first) os << " + ";
    first = false;
    if (v.c[i] != 1) os << v.c[i] << "*";
    if (i < RootSystem::kNumRoots)
      os << "v" << root_label(RootSystem::get().root(i).coeffs);
    else
      os << kZero[i - RootSystem::kNumRoots];
  }
  if (first) os << "0";
  return os.str();
}

// --- words ------------------------------------------------------------------

GroupWord GroupWord::inverse(const GF2k& field) const {
  GroupWord out;
  for (auto it = gens.rbegin(); it != gens.rend(); ++it) {
    if (auto* t = std::get_if<TorusElem>(&*it)) {
      TorusElem inv;
      for (int i = 0; i < 4; ++i) inv.t[i] = field.inv(t->t[i]);
      out.gens.emplace_back(inv);
    } else {
      out.gens.push_back(*it);  // x_a(t)^-1 = x_a(-t) = x_a(t); s_i^2 = 1 in char 2
    }
  }
  return out;
}

GroupWord GroupWord::power(int k) const {
  GroupWord out;
  for (int i = 0; i < k; ++i) out *= *this;
  return out;
}

GroupWord GroupWord::weyl_lift(const std::vector<int>& word) {
  GroupWord out;
  for (int i : word) out.gens.emplace_back(SimpleLift{i});
  return out;
}

std::string to_string(const Generator& g) {
  std::ostringstream os;
  if (auto* r = std::get_if<RootElem>(&g)) {
    os << "x" << root_label(RootSystem::get().root(r->root).coeffs) << "(" << r->t << ")";
  } else if (auto* t = std::get_if<TorusElem>(&g)) {
    os << "h(" << t->t[0] << "," << t->t[1] << "," << t->t[2] << "," << t->t[3] << ")";
  } else {
    os << "s" << std::get<SimpleLift>(g).i + 1;
  }
  return os.str();
}

std::string to_string(const GroupWord& w) {
  if (w.gens.empty()) return "e";
  std::string out;
  for (const auto& g : w.gens) {
    if (!out.empty()) out += " ";
    out += to_string(g);
  }
  return out;
}

// --- action -------------------------------------------------------------------

VModule::VModule(int n) : field_(n) {}

VElement VModule::apply(const RootElem& g, const VElement& v) const {
  const auto& terms = table().terms[g.root];
  const Elem t1 = g.t;
  const Elem t2 = field_.mul(g.t, g.t);
  VElement out = v;
  for (int c = 0; c < kDimV; ++c) {
    if (!v.c[c]) continue;
    for (const Term& term : terms[c]) {
      out.c[term.target] ^= field_.mul(v.c[c], term.power == 1 ? t1 : t2);
    }
  }
  return out;
}

VElement VModule::apply(const TorusElem& g, const VElement& v) const {
  const auto& exps = table().torus_exp;
  VElement out = v;
  for (int b = 0; b < RootSystem::kNumRoots; ++b) {
    if (!v.c[b]) continue;
    Elem s = 1;
    for (int i = 0; i < 4; ++i) s = field_.mul(s, field_.pow(g.t[i], exps[b][i]));
    out.c[b] = field_.mul(v.c[b], s);
  }
  return out;
}

VElement VModule::apply(const SimpleLift& g, const VElement& v) const {
  const int a = simple_root(g.i);
  const RootElem xa{a, 1}, xma{RootSystem::negation(a), 1};
  return apply(xa, apply(xma, apply(xa, v)));
}

VElement VModule::apply(const Generator& g, const VElement& v) const {
  return std::visit([&](const auto& x) { return apply(x, v); }, g);
}

VElement VModule::apply(const GroupWord& w, const VElement& v) const {
  VElement out = v;
  for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) out = apply(*it, out);
  return out;
}

Elem VModule::alpha_functional(int alpha, const VElement& v) const {
  Elem s = 0;
  for (int h = kH3; h <= kHbar2; ++h)
    if (alpha_on_zero_coord(alpha, h)) s ^= v.c[h];
  return s;
}

std::optional<int> VModule::first_disagreement(const GroupWord& a, const GroupWord& b) const {
  for (int c = 0; c < kDimV; ++c) {
    for (Elem s : {Elem{1}, field_.generator()}) {
      const VElement e = VElement::basis(c, s);
      if (apply(a, e) != apply(b, e)) return c;
    }
  }
  return std::nullopt;
}

bool VModule::same_operator(const GroupWord& a, const GroupWord& b) const {
  return !first_disagreement(a, b).has_value();
}

// --- adjoint oracle -------------------------------------------------------------

namespace {

int binom_mod2(int n, int k) { return (k & ~n) == 0 ? 1 : 0; }

// Index of H_j in the adjoint basis.
constexpr int kAdjH = RootSystem::kNumRoots;

}  // namespace

AdjointElement adjoint_apply(const GF2k& field, int alpha, Elem t, const AdjointElement& x) {
  const auto& rs = RootSystem::get();
  const Coeffs& a = rs.root(alpha).coeffs;
  const int neg = RootSystem::negation(alpha);
  AdjointElement out = x;
  auto add = [&](int idx, Elem coef, int power) {
    out.c[idx] ^= field.mul(coef, field.pow(t, power));
  };
  for (int b = 0; b < RootSystem::kNumRoots; ++b) {
    const Elem xb = x.c[b];
    if (!xb) continue;
    if (b == neg) {
      const Coeffs& cv = rs.coroot(alpha);
      for (int j = 0; j < 4; ++j)
        if (cv[j] & 1) add(kAdjH + j, xb, 1);
      add(alpha, xb, 2);
      continue;
    }
    const RootString st = root_string(alpha, b);
    for (int k = 1; k <= st.q; ++k) {
      if (!binom_mod2(st.p + k, k)) continue;
      Coeffs c = rs.root(b).coeffs;
      for (int i = 0; i < 4; ++i) c[i] += k * a[i];
      add(rs.index(c), xb, k);
    }
  }
  for (int j = 0; j < 4; ++j) {
    const Elem h = x.c[kAdjH + j];
    if (h && (rs.pairing(a, j) & 1)) add(alpha, h, 1);
  }
  return out;
}

ConsistencyReport adjoint_consistency_check(int n) {
  VModule mod(n);
  const GF2k& f = mod.field();
  ConsistencyReport rep;
  rep.field_degree = n;

  // V coordinate <-> adjoint coordinate, and which summand each V coordinate lies in.
  auto adj_of = [](int c) {
    switch (c) {
      case kH3: return kAdjH + 2;
      case kH4: return kAdjH + 3;
      case kHbar1: return kAdjH + 0;
      case kHbar2: return kAdjH + 1;
      default: return c;
    }
  };

  for (int a = 0; a < RootSystem::kNumRoots; ++a) {
    for (int c = 0; c < kDimV; ++c) {
      const bool gs = in_gs_summand(c);
      for (Elem t : f.elements()) {
        AdjointElement x;
        x.c[adj_of(c)] = 1;
        const AdjointElement y = adjoint_apply(f, a, t, x);

        VElement expect;
        bool leaked = false;
        for (int d = 0; d < kDimV; ++d) {
          const Elem val = y.c[adj_of(d)];
          if (in_gs_summand(d) == gs) expect.c[d] = val;
          else if (gs && val) leaked = true;
        }
        const VElement got = mod.apply(RootElem{a, t}, VElement::basis(c));
        ++rep.comparisons;
        if (leaked) rep.mismatches.push_back({a, c, t, "g_s not stable"});
        if (got != expect) {
          std::string why = "projection differs: expected " + to_string(expect) + ", got " + to_string(got);
          rep.mismatches.push_back({a, c, t, why});
        }
        if (t > 1 && t != f.mul(t, t)) {
          for (const Term& term : table().terms[a][c]) {
            if (term.target >= RootSystem::kNumRoots) ++rep.v0_terms;
            else if (term.power == 1) ++rep.linear_terms;
            else ++rep.quadratic_terms;
          }
        }
      }
    }
  }
  return rep;
}

// --- isogeny -------------------------------------------------------------------

int psi_target(int coord) {
  switch (coord) {
    case kH3: return kHbar2;
    case kH4: return kHbar1;
    case kHbar1: return kH4;
    case kHbar2: return kH3;
    default: break;
  }
  const auto& rs = RootSystem::get();
  const Root& r = rs.root(coord);
  Coeffs img = phi_sharp(r.coeffs);
  if (!r.is_long()) return rs.index(img);
  // long beta: alpha with phi#(alpha) = beta is phi#(beta)/2.
  for (int& x : img) x /= 2;
  return rs.index(img);
}

VElement psi(const GF2k& field, const VElement& v) {
  VElement out;
  for (int c = 0; c < kDimV; ++c) {
    if (!v.c[c]) continue;
    out.c[psi_target(c)] = in_gs_summand(c) ? field.frobenius(v.c[c]) : v.c[c];
  }
  return out;
}

Generator isogeny_image(const GF2k& field, const Generator& g) {
  if (auto* r = std::get_if<RootElem>(&g)) {
    const auto& rs = RootSystem::get();
    const Root& root = rs.root(r->root);
    Coeffs img = phi_sharp(root.coeffs);
    if (!root.is_long()) return RootElem{rs.index(img), field.frobenius(r->t)};
    for (int& x : img) x /= 2;
    return RootElem{rs.index(img), r->t};
  }
  if (auto* t = std::get_if<TorusElem>(&g)) {
    return TorusElem{{field.frobenius(t->t[3]), field.frobenius(t->t[2]), t->t[1], t->t[0]}};
  }
  return SimpleLift{3 - std::get<SimpleLift>(g).i};
}

GroupWord isogeny_image(const GF2k& field, const GroupWord& w) {
  GroupWord out;
  for (const auto& g : w.gens) out.gens.push_back(isogeny_image(field, g));
  return out;
}

}  // namespace f4x
