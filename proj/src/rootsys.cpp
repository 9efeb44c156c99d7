#include "f4x/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace f4x {

namespace {

// Column order of the standard diagrams, bottom to top.
constexpr std::array<const char*, 12> kLongColumn = {
    "1000", "0100", "1100", "0120", "1120", "0122", "1220", "1122", "1222", "1242", "1342", "2342"};
constexpr std::array<const char*, 12> kShortColumn = {
    "0010", "0001", "0110", "0011", "1110", "0111", "1111", "0121", "1121", "1221", "1231", "1232"};

struct LabelledEdge {
  const char* from;
  const char* to;
  int label;
  bool dashed;
};

// Arrows of the standard diagrams.  0122 -> 1122 differs by alpha_1 and is
// solid.
constexpr std::array<LabelledEdge, 28> kDiagram = {{
    {"1000", "1100", 2, false}, {"0100", "1100", 1, false}, {"0100", "0120", 3, true},
    {"1100", "1120", 3, true},  {"0120", "1120", 1, false}, {"0120", "0122", 4, true},
    {"1120", "1220", 2, false}, {"1120", "1122", 4, true},  {"0122", "1122", 1, false},
    {"1220", "1222", 4, true},  {"1122", "1222", 2, false}, {"1222", "1242", 3, true},
    {"1242", "1342", 2, false}, {"1342", "2342", 1, false},

    {"0010", "0110", 2, false}, {"0010", "0011", 4, false}, {"0001", "0011", 3, false},
    {"0110", "1110", 1, false}, {"0110", "0111", 4, false}, {"0011", "0111", 2, false},
    {"1110", "1111", 4, false}, {"0111", "1111", 1, false}, {"0111", "0121", 3, false},
    {"1111", "1121", 3, false}, {"0121", "1121", 1, false}, {"1121", "1221", 2, false},
    {"1221", "1231", 3, false}, {"1231", "1232", 4, false},
}};

constexpr std::array<std::array<int, 4>, 4> kCartan = {{
    {2, -1, 0, 0},
    {-1, 2, -1, 0},
    {0, -2, 2, -1},
    {0, 0, -1, 2},
}};

Coeffs neg(const Coeffs& c) { return {-c[0], -c[1], -c[2], -c[3]}; }

Coeffs must_parse(const char* label) {
  auto c = parse_root_label(label);
  if (!c) throw std::logic_error(std::string("bad root label ") + label);
  return *c;
}

}  // namespace

std::string root_label(const Coeffs& c) {
  const bool positive = c[0] + c[1] + c[2] + c[3] < 0;
  std::string s = positive ? "-" : "";
  for (int x : c) s += std::to_string(positive ? -x : x);
  return s;
}

std::optional<Coeffs> parse_root_label(const std::string& label) {
  std::string body = label;
  int sign = 1;
  if (!body.empty() && body[0] == '-') {
    sign = -1;
    body = body.substr(1);
  }
  if (body.size() != 4) return std::nullopt;
  Coeffs c{};
  for (int i = 0; i < 4; ++i) {
    if (body[i] < '0' || body[i] > '9') return std::nullopt;
    c[i] = sign * (body[i] - '0');
  }
  return c;
}

const RootSystem& RootSystem::get() {
  static const RootSystem rs;
  return rs;
}

int RootSystem::pairing(const Coeffs& beta, int i) const {
  int s = 0;
  for (int j = 0; j < 4; ++j) s += beta[j] * cartan_[i][j];
  return s;
}

int RootSystem::pairing_with_coroot(const Coeffs& beta, int gamma) const {
  const Coeffs& cv = coroot(gamma);
  int s = 0;
  for (int i = 0; i < 4; ++i) s += cv[i] * pairing(beta, i);
  return s;
}

Coeffs RootSystem::reflect(int i, const Coeffs& beta) const {
  Coeffs out = beta;
  out[i] -= pairing(beta, i);
  return out;
}

RootSystem::RootSystem() : cartan_(kCartan) {
  // Closure of the simple roots under simple reflections.
  std::set<Coeffs> found;
  std::deque<Coeffs> queue;
  for (int i = 0; i < 4; ++i) {
    Coeffs e{};
    e[i] = 1;
    found.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Coeffs b = queue.front();
    queue.pop_front();
    for (int i = 0; i < 4; ++i) {
      Coeffs r = reflect(i, b);
      if (found.insert(r).second) queue.push_back(r);
    }
  }
  if (found.size() != kNumRoots) throw std::logic_error("Cartan closure does not give 48 roots");

  // Lengths: alpha_1, alpha_2 long; W preserves length.
  std::map<Coeffs, RootLength> length;
  for (int i = 0; i < 4; ++i) {
    Coeffs e{};
    e[i] = 1;
    length[e] = i < 2 ? RootLength::kLong : RootLength::kShort;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    Coeffs b = queue.front();
    queue.pop_front();
    for (int i = 0; i < 4; ++i) {
      Coeffs r = reflect(i, b);
      if (length.emplace(r, length.at(b)).second) queue.push_back(r);
    }
  }

  // Layout: diagram order for negative roots, negations after.
  roots_.resize(kNumRoots);
  for (int k = 0; k < 12; ++k) {
    Coeffs l = must_parse(kLongColumn[k]);
    Coeffs s = must_parse(kShortColumn[k]);
    if (!found.count(l) || !found.count(s)) throw std::logic_error("transcribed root missing from closure");
    if (length.at(l) != RootLength::kLong || length.at(s) != RootLength::kShort) {
      throw std::logic_error("transcribed root has the wrong length");
    }
    roots_[k] = {l, RootLength::kLong};
    roots_[12 + k] = {s, RootLength::kShort};
  }
  for (int k = 0; k < kNumNegative; ++k) {
    roots_[k + kNumNegative] = {neg(roots_[k].coeffs), roots_[k].length};
  }

  for (int i = 0; i < 4; ++i) {
    for (int r = 0; r < kNumRoots; ++r) {
      reflect_[i][r] = index(reflect(i, roots_[r].coeffs));
    }
  }

  // Coroots by W-orbit closure: s_j(gamma)^vee = s_j(gamma^vee), with s_j
  // acting on coweights through the transposed Cartan matrix.
  coroots_.assign(kNumRoots, Coeffs{});
  std::vector<bool> have(kNumRoots, false);
  std::deque<int> rq;
  for (int i = 0; i < 4; ++i) {
    Coeffs e{};
    e[i] = 1;
    int idx = index(e);
    coroots_[idx] = e;
    have[idx] = true;
    rq.push_back(idx);
  }
  while (!rq.empty()) {
    int g = rq.front();
    rq.pop_front();
    for (int j = 0; j < 4; ++j) {
      int r = reflect_[j][g];
      const Coeffs& cv = coroots_[g];
      // <alpha_j, gamma^vee> = sum_k cv_k <alpha_j, alpha_k^vee>
      int p = 0;
      for (int k = 0; k < 4; ++k) p += cv[k] * cartan_[k][j];
      Coeffs img = cv;
      img[j] -= p;
      if (have[r]) {
        if (coroots_[r] != img) throw std::logic_error("coroot closure is inconsistent");
        continue;
      }
      coroots_[r] = img;
      have[r] = true;
      rq.push_back(r);
    }
  }

  // Diagrams from the Cartan data alone.
  for (int b = 0; b < kNumNegative; ++b) {
    for (int i = 0; i < 4; ++i) {
      for (int mult = 1; mult <= 2; ++mult) {
        Coeffs c = roots_[b].coeffs;
        c[i] += mult;
        auto t = index_of(c);
        if (t && root(*t).length == root(b).length) derived_.push_back({b, *t, i + 1, mult == 2});
      }
    }
  }
  std::sort(derived_.begin(), derived_.end());
  if (derived_ != transcribed_edges()) {
    throw std::logic_error("root diagrams regenerated from the Cartan matrix disagree with the transcription");
  }
}

std::vector<HasseEdge> RootSystem::transcribed_edges() {
  // Uses only the diagram order, so it can run during construction.
  auto position = [](const char* label) {
    for (int k = 0; k < 12; ++k) {
      if (std::string(kLongColumn[k]) == label) return k;
      if (std::string(kShortColumn[k]) == label) return 12 + k;
    }
    throw std::logic_error(std::string("unknown diagram node ") + label);
  };
  std::vector<HasseEdge> out;
  for (const auto& e : kDiagram) out.push_back({position(e.from), position(e.to), e.label, e.dashed});
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> RootSystem::index_of(const Coeffs& c) const {
  for (int r = 0; r < static_cast<int>(roots_.size()); ++r) {
    if (roots_[r].coeffs == c) return r;
  }
  return std::nullopt;
}

int RootSystem::index(const Coeffs& c) const {
  auto r = index_of(c);
  if (!r) throw std::invalid_argument("not a root: " + root_label(c));
  return *r;
}

int RootSystem::index(const std::string& label) const {
  auto c = parse_root_label(label);
  if (!c) throw std::invalid_argument("malformed root label: " + label);
  return index(*c);
}

std::optional<int> RootSystem::sum(int a, int b) const {
  Coeffs c = root(a).coeffs;
  for (int i = 0; i < 4; ++i) c[i] += root(b).coeffs[i];
  return index_of(c);
}

Coeffs phi_sharp(const Coeffs& c) { return {c[3], c[2], 2 * c[1], 2 * c[0]}; }

std::vector<int> phi_geq(const std::vector<int>& support) {
  const auto& rs = RootSystem::get();
  std::vector<int> out;
  for (int g = 0; g < RootSystem::kNumNegative; ++g) {
    for (int b : support) {
      if (rs.root(b).length != rs.root(g).length) continue;
      const Coeffs& cg = rs.root(g).coeffs;
      const Coeffs& cb = rs.root(b).coeffs;
      bool above = true;
      for (int i = 0; i < 4; ++i) above = above && cg[i] >= cb[i];
      if (above) {
        out.push_back(g);
        break;
      }
    }
  }
  return out;
}

RootString root_string(int alpha, int beta) {
  const auto& rs = RootSystem::get();
  const Coeffs& a = rs.root(alpha).coeffs;
  auto shifted = [&](int k) {
    Coeffs c = rs.root(beta).coeffs;
    for (int i = 0; i < 4; ++i) c[i] += k * a[i];
    return rs.index_of(c).has_value();
  };
  RootString s;
  while (shifted(-(s.p + 1))) ++s.p;
  while (shifted(s.q + 1)) ++s.q;
  return s;
}

// ---------------------------------------------------------------------------

const WeylGroup& WeylGroup::get() {
  static const WeylGroup w;
  return w;
}

WeylGroup::WeylGroup() {
  const auto& rs = RootSystem::get();
  std::map<std::array<std::uint8_t, RootSystem::kNumRoots>, std::size_t> seen;
  WeylElement id;
  for (int r = 0; r < RootSystem::kNumRoots; ++r) id.perm[r] = static_cast<std::uint8_t>(r);
  elems_.push_back(id);
  seen.emplace(id.perm, 0);
  for (std::size_t head = 0; head < elems_.size(); ++head) {
    for (int i = 0; i < 4; ++i) {
      WeylElement next;
      for (int r = 0; r < RootSystem::kNumRoots; ++r) {
        next.perm[r] = static_cast<std::uint8_t>(rs.reflect(i, elems_[head].perm[r]));
      }
      if (seen.count(next.perm)) continue;
      next.word.push_back(i);
      next.word.insert(next.word.end(), elems_[head].word.begin(), elems_[head].word.end());
      for (int r = RootSystem::kNumNegative; r < RootSystem::kNumRoots; ++r) {
        if (next.perm[r] < RootSystem::kNumNegative) ++next.length;
      }
      seen.emplace(next.perm, elems_.size());
      elems_.push_back(std::move(next));
    }
  }
}

const WeylElement& WeylGroup::longest() const {
  return *std::max_element(elems_.begin(), elems_.end(),
                           [](const WeylElement& a, const WeylElement& b) { return a.length < b.length; });
}

std::optional<std::size_t> WeylGroup::find(const std::array<std::uint8_t, RootSystem::kNumRoots>& perm) const {
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    if (elems_[k].perm == perm) return k;
  }
  return std::nullopt;
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  WeylElement inv;
  for (int r = 0; r < RootSystem::kNumRoots; ++r) inv.perm[w.perm[r]] = static_cast<std::uint8_t>(r);
  inv.length = w.length;
  inv.word.assign(w.word.rbegin(), w.word.rend());
  return inv;
}

std::vector<int> WeylGroup::inversion_set(const WeylElement& w) const {
  std::array<std::uint8_t, RootSystem::kNumRoots> inv{};
  for (int r = 0; r < RootSystem::kNumRoots; ++r) inv[w.perm[r]] = static_cast<std::uint8_t>(r);
  std::vector<int> out;
  for (int b = 0; b < RootSystem::kNumNegative; ++b) {
    if (inv[b] >= RootSystem::kNumNegative) out.push_back(b);
  }
  return out;
}

std::vector<std::uint64_t> WeylGroup::length_distribution() const {
  std::vector<std::uint64_t> dist(RootSystem::kNumNegative + 1, 0);
  for (const auto& w : elems_) ++dist[w.length];
  return dist;
}

std::size_t WeylGroup::conjugacy_class_count() const {
  const auto& rs = RootSystem::get();
  std::map<std::array<std::uint8_t, RootSystem::kNumRoots>, std::size_t> pos;
  for (std::size_t k = 0; k < elems_.size(); ++k) pos.emplace(elems_[k].perm, k);
  std::vector<std::size_t> parent(elems_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto root_of = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < elems_.size(); ++k) {
    for (int i = 0; i < 4; ++i) {
      // s_i w s_i
      std::array<std::uint8_t, RootSystem::kNumRoots> c{};
      for (int r = 0; r < RootSystem::kNumRoots; ++r) {
        c[r] = static_cast<std::uint8_t>(
            rs.reflect(i, elems_[k].perm[rs.reflect(i, r)]));
      }
      parent[root_of(pos.at(c))] = root_of(k);
    }
  }
  std::size_t classes = 0;
  for (std::size_t k = 0; k < elems_.size(); ++k) classes += root_of(k) == k;
  return classes;
}

}  // namespace f4x
