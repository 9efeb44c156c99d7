#include "f4x/unipotent.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "f4x/packed.hpp"

namespace f4x {

std::string to_string(Count c) {
  if (c == 0) return "0";
  std::string s;
  while (c) {
    s.push_back(static_cast<char>('0' + static_cast<int>(c % 10)));
    c /= 10;
  }
  return {s.rbegin(), s.rend()};
}

int exact_log2(Count c) {
  if (c == 0 || (c & (c - 1))) return -1;
  int k = 0;
  while (c > 1) c >>= 1, ++k;
  return k;
}

const std::vector<int>& negative_roots_by_height() {
  static const std::vector<int> order = [] {
    std::vector<int> v(RootSystem::kNumNegative);
    for (int i = 0; i < RootSystem::kNumNegative; ++i) v[i] = i;
    const auto& rs = RootSystem::get();
    std::stable_sort(v.begin(), v.end(), [&](int a, int b) { return rs.root(a).height() < rs.root(b).height(); });
    return v;
  }();
  return order;
}

std::uint64_t coords_changed(int root, std::uint64_t support) {
  std::uint64_t out = 0;
  for (int c = 0; c < kDimV; ++c)
    if (support >> c & 1) out |= action_reach(root, c);
  return out;
}

std::uint64_t coords_read(int root) {
  std::uint64_t out = 0;
  for (int c = 0; c < kDimV; ++c)
    if (action_reach(root, c)) out |= std::uint64_t{1} << c;
  return out;
}

namespace {

// x_root(t) for every root and nonzero t, tabulated on first use.
template <int N>
class RootMaps {
 public:
  static const RootMaps& get() {
    static const RootMaps m;
    return m;
  }

  const PackedMap<N>& map(int root, Elem t) const {
    std::call_once(once_[root], [&] {
      auto& v = maps_[root];
      v.reserve(kQ - 1);
      for (int s = 1; s < kQ; ++s) v.push_back(compile<N>(module_, GroupWord{RootElem{root, static_cast<Elem>(s)}}));
    });
    return maps_[root][t - 1];
  }

 private:
  static constexpr int kQ = 1 << N;
  RootMaps() : module_(N) {}

  VModule module_;
  mutable std::array<std::once_flag, RootSystem::kNumRoots> once_;
  mutable std::array<std::vector<PackedMap<N>>, RootSystem::kNumRoots> maps_;
};

std::vector<Elem> allowed_values(const Factor& f, int q) {
  if (f.fixed) {
    if (*f.fixed >= q) throw std::invalid_argument("pinned parameter outside the field");
    return {*f.fixed};
  }
  std::vector<Elem> out(q);
  for (int t = 0; t < q; ++t) out[t] = static_cast<Elem>(t);
  return out;
}

template <int N>
Count run_dp(const CountProblem& p, CountStats* stats) {
  constexpr int q = 1 << N;
  const auto& maps = RootMaps<N>::get();
  const int m = static_cast<int>(p.factors.size());

  const Packed<N> start = pack<N>(p.start);
  const Packed<N> target = pack<N>(p.target);

  std::uint64_t reach = start.support();
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& f : p.factors) {
      const std::uint64_t next = reach | coords_changed(f.root, reach);
      if (next != reach) reach = next, grew = true;
    }
  }

  // later_changed[k] / later_read[k]: union over factors k..m-1.
  std::vector<std::uint64_t> later_changed(m + 1, 0), later_read(m + 1, 0);
  for (int k = m - 1; k >= 0; --k) {
    later_changed[k] = later_changed[k + 1] | coords_changed(p.factors[k].root, reach);
    later_read[k] = later_read[k + 1] | (coords_read(p.factors[k].root) & reach);
  }

  std::uint64_t checked = p.mask & ~later_changed[0];
  if (!start.agrees_on(target, checked)) return 0;

  using State = std::pair<Packed<N>, Count>;
  std::vector<State> cur{{start, 1}}, next;
  cur[0].first.clear(~later_read[0] & ~(p.mask & ~checked));

  for (int k = 0; k < m; ++k) {
    const std::uint64_t now_checked = p.mask & ~later_changed[k + 1];
    const std::uint64_t test = now_checked & ~checked;
    const std::uint64_t drop = ~later_read[k + 1] & ~(p.mask & ~now_checked);
    checked = now_checked;

    const auto values = allowed_values(p.factors[k], q);
    next.clear();
    for (const auto& [v, c] : cur) {
      for (Elem t : values) {
        Packed<N> w = t == 0 ? v : maps.map(p.factors[k].root, t)(v);
        if (!w.agrees_on(target, test)) continue;
        w.clear(drop);
        next.emplace_back(w, c);
      }
    }
    if (stats) stats->transitions += next.size();
    std::sort(next.begin(), next.end(), [](const State& a, const State& b) { return a.first < b.first; });
    cur.clear();
    for (const auto& s : next) {
      if (!cur.empty() && cur.back().first == s.first) cur.back().second += s.second;
      else cur.push_back(s);
    }
    if (stats) stats->peak_states = std::max(stats->peak_states, cur.size());
    if (cur.empty()) return 0;
  }

  // Every masked coordinate has been tested by now.
  Count total = 0;
  for (const auto& s : cur) total += s.second;
  return total;
}

template <int N>
Count dfs(const CountProblem& p, const Packed<N>& v, std::size_t k, const Packed<N>& target) {
  if (k == p.factors.size()) return v.agrees_on(target, p.mask) ? 1 : 0;
  const auto& maps = RootMaps<N>::get();
  Count total = 0;
  for (Elem t : allowed_values(p.factors[k], 1 << N)) {
    total += dfs<N>(p, t == 0 ? v : maps.map(p.factors[k].root, t)(v), k + 1, target);
  }
  return total;
}

void check_problem(int n, const CountProblem& p) {
  if (n < 1 || n > 4) throw std::invalid_argument("counting kernel supports field degree 1..4");
  for (const auto& f : p.factors)
    if (f.root < 0 || f.root >= RootSystem::kNumRoots) throw std::invalid_argument("factor root out of range");
}

}  // namespace

Count count_solutions(int n, const CountProblem& p, CountStats* stats) {
  check_problem(n, p);
  switch (n) {
    case 1: return run_dp<1>(p, stats);
    case 2: return run_dp<2>(p, stats);
    case 3: return run_dp<3>(p, stats);
    default: return run_dp<4>(p, stats);
  }
}

Count count_solutions_plain(int n, const CountProblem& p) {
  check_problem(n, p);
  switch (n) {
    case 1: return dfs<1>(p, pack<1>(p.start), 0, pack<1>(p.target));
    case 2: return dfs<2>(p, pack<2>(p.start), 0, pack<2>(p.target));
    case 3: return dfs<3>(p, pack<3>(p.start), 0, pack<3>(p.target));
    default: return dfs<4>(p, pack<4>(p.start), 0, pack<4>(p.target));
  }
}

}  // namespace f4x
