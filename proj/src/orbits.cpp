#include "f4x/orbits.hpp"

#include <algorithm>
#include <thread>

namespace f4x {

template <int N>
PackedSet<N>::PackedSet(std::size_t expected) {
  std::size_t cap = 16;
  while (cap < 2 * expected) cap <<= 1;
  Packed<N> empty;
  empty.w[0] = kEmpty;
  slots_.assign(cap, empty);
  mask_ = cap - 1;
}

template <int N>
bool PackedSet<N>::insert(const Packed<N>& v) {
  if (2 * (size_ + 1) > slots_.size()) grow();
  std::size_t i = PackedHash<N>{}(v) & mask_;
  while (slots_[i].w[0] != kEmpty) {
    if (slots_[i] == v) return false;
    i = (i + 1) & mask_;
  }
  slots_[i] = v;
  ++size_;
  return true;
}

template <int N>
bool PackedSet<N>::contains(const Packed<N>& v) const {
  std::size_t i = PackedHash<N>{}(v) & mask_;
  while (slots_[i].w[0] != kEmpty) {
    if (slots_[i] == v) return true;
    i = (i + 1) & mask_;
  }
  return false;
}

template <int N>
void PackedSet<N>::grow() {
  std::vector<Packed<N>> old;
  old.swap(slots_);
  Packed<N> empty;
  empty.w[0] = kEmpty;
  slots_.assign(old.size() * 2, empty);
  mask_ = slots_.size() - 1;
  size_ = 0;
  for (const auto& s : old)
    if (s.w[0] != kEmpty) insert(s);
}

template class PackedSet<1>;
template class PackedSet<2>;

namespace {

int simple_root_index(int i) {
  Coeffs c{0, 0, 0, 0};
  c[i] = 1;
  return RootSystem::get().index(c);
}

template <int N>
std::vector<PackedMap<N>> group_generators() {
  VModule m(N);
  std::vector<PackedMap<N>> gens;
  for (int i = 0; i < 4; ++i) {
    const int a = simple_root_index(i);
    for (Elem t : m.field().additive_basis()) {
      gens.push_back(compile<N>(m, GroupWord{RootElem{a, t}}));
      gens.push_back(compile<N>(m, GroupWord{RootElem{RootSystem::negation(a), t}}));
    }
    gens.push_back(compile<N>(m, GroupWord{SimpleLift{i}}));
  }
  return gens;
}

template <int N>
std::vector<PackedMap<N>> borel_generators() {
  VModule m(N);
  std::vector<PackedMap<N>> gens;
  for (int b = 0; b < RootSystem::kNumNegative; ++b)
    for (Elem t : m.field().additive_basis()) gens.push_back(compile<N>(m, GroupWord{RootElem{b, t}}));
  if (N > 1) {
    for (int i = 0; i < 4; ++i) {
      TorusElem h;
      h.t[i] = m.field().generator();
      gens.push_back(compile<N>(m, GroupWord{h}));
    }
  }
  return gens;
}

template <int N>
void search(PackedSet<N>& seen, const Packed<N>& start, const std::vector<PackedMap<N>>& gens,
            const OrbitOptions& opt) {
  seen.insert(start);
  std::vector<Packed<N>> frontier{start}, next;
  const int threads = std::max(1, opt.threads);
  while (!frontier.empty()) {
    next.clear();
    if (threads == 1 || frontier.size() < 4096) {
      for (const auto& v : frontier)
        for (const auto& g : gens) {
          const Packed<N> w = g(v);
          if (seen.insert(w)) {
            next.push_back(w);
            if (seen.size() > opt.budget) throw BudgetExceeded(seen.size(), opt.budget);
          }
        }
    } else {
      // Neighbours are produced in parallel against the frozen set, then merged.
      std::vector<std::vector<Packed<N>>> local(threads);
      std::vector<std::thread> pool;
      const std::size_t chunk = (frontier.size() + threads - 1) / threads;
      for (int k = 0; k < threads; ++k) {
        pool.emplace_back([&, k] {
          const std::size_t lo = k * chunk, hi = std::min(frontier.size(), lo + chunk);
          for (std::size_t i = lo; i < hi; ++i)
            for (const auto& g : gens) {
              const Packed<N> w = g(frontier[i]);
              if (!seen.contains(w)) local[k].push_back(w);
            }
        });
      }
      for (auto& t : pool) t.join();
      for (const auto& part : local)
        for (const auto& w : part)
          if (seen.insert(w)) {
            next.push_back(w);
            if (seen.size() > opt.budget) throw BudgetExceeded(seen.size(), opt.budget);
          }
    }
    frontier.swap(next);
  }
}

}  // namespace

std::uint64_t bfs_orbit(const VElement& rep, int n, const OrbitOptions& opt) {
  if (n == 1) {
    PackedSet<1> seen;
    search<1>(seen, pack<1>(rep), group_generators<1>(), opt);
    return seen.size();
  }
  if (n == 2) {
    PackedSet<2> seen;
    search<2>(seen, pack<2>(rep), group_generators<2>(), opt);
    return seen.size();
  }
  throw std::invalid_argument("orbit search supports fields F_2 and F_4");
}

std::shared_ptr<const PackedSet<1>> bfs_orbit_set(const VElement& rep, const OrbitOptions& opt) {
  auto seen = std::make_shared<PackedSet<1>>();
  search<1>(*seen, pack<1>(rep), group_generators<1>(), opt);
  return seen;
}

std::uint64_t b_orbit(const VElement& rep, int n) {
  OrbitOptions opt;
  opt.budget = ~std::uint64_t{0};
  if (n == 1) {
    PackedSet<1> seen;
    search<1>(seen, pack<1>(rep), borel_generators<1>(), opt);
    return seen.size();
  }
  if (n == 2) {
    PackedSet<2> seen;
    search<2>(seen, pack<2>(rep), borel_generators<2>(), opt);
    return seen.size();
  }
  throw std::invalid_argument("B-orbit search supports fields F_2 and F_4");
}

std::vector<int> long_component(const std::vector<int>& support) {
  std::vector<int> out;
  for (int r : support)
    if (RootSystem::get().root(r).is_long()) out.push_back(r);
  return out;
}

const ReferenceOrbits& ReferenceOrbits::get() {
  static const ReferenceOrbits r;
  return r;
}

ReferenceOrbits::ReferenceOrbits() {
  const auto& t = OrbitTable::get();
  xi2_ = bfs_orbit_set(t.find("xi2").rep());
  xi6_ = bfs_orbit_set(t.find("xi6").rep());
}

std::string ReferenceOrbits::classify(const VElement& v) const {
  const auto p = pack<1>(v);
  if (xi2_->contains(p)) return "xi2";
  if (xi6_->contains(p)) return "xi6";
  return "";
}

std::vector<std::size_t> weyl_obstruction_search(const std::vector<int>& sources, const std::vector<int>& targets) {
  const auto& rs = RootSystem::get();
  const auto& W = WeylGroup::get();
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < W.size(); ++k) {
    const auto& w = W.elements()[k];
    bool all = true;
    for (int b : sources) {
      const Coeffs& img = rs.root(w(b)).coeffs;
      bool hit = false;
      for (int s : targets) {
        const Coeffs& c = rs.root(s).coeffs;
        bool ge = true;
        for (int i = 0; i < 4; ++i) ge = ge && img[i] >= c[i];
        hit = hit || ge;
      }
      if (!hit) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(k);
  }
  return out;
}

std::vector<TransportResult> isogeny_transport_check(const OrbitOptions& opt) {
  const auto& t = OrbitTable::get();
  const auto& W = WeylGroup::get();
  VModule m(1);
  std::vector<TransportResult> out;
  for (auto [a, b] : {std::pair{5, 6}, {8, 9}, {11, 12}, {14, 15}, {18, 19}}) {
    TransportResult r;
    r.from = a;
    r.to = b;
    r.image = psi(m.field(), t.at(a).rep());
    const VElement target = t.at(b).rep();
    for (const auto& w : W.elements()) {
      GroupWord lift = GroupWord::weyl_lift(w.word);
      if (m.apply(lift, r.image) == target) {
        r.ok = true;
        r.method = "weyl-lift";
        r.witness = lift;
        break;
      }
    }
    if (!r.ok) {
      try {
        auto orbit = bfs_orbit_set(target, opt);
        r.ok = orbit->contains(pack<1>(r.image));
        r.method = r.ok ? "bfs" : "none";
      } catch (const BudgetExceeded&) {
        r.method = "none";
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace f4x
