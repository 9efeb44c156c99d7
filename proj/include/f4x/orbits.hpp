#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "f4x/chevalley.hpp"
#include "f4x/packed.hpp"
#include "f4x/tables.hpp"

namespace f4x {

/// The orbit outgrew the budget; `partial` points had been found.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t partial, std::uint64_t budget)
      : std::runtime_error("orbit exceeds budget of " + std::to_string(budget) + " points"), partial(partial) {}
  std::uint64_t partial;
};

/// Open-addressing set of packed vectors.  The all-ones first word marks an
/// empty slot (it is never a valid vector).
template <int N>
class PackedSet {
 public:
  explicit PackedSet(std::size_t expected = 1024);

  /// True if newly inserted.
  bool insert(const Packed<N>& v);
  bool contains(const Packed<N>& v) const;
  std::size_t size() const { return size_; }

  template <typename F>
  void for_each(F&& f) const {
    for (const auto& s : slots_)
      if (s.w[0] != kEmpty) f(s);
  }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};
  void grow();
  std::vector<Packed<N>> slots_;
  std::size_t mask_ = 0;
  std::size_t size_ = 0;
};

extern template class PackedSet<1>;
extern template class PackedSet<2>;

struct OrbitOptions {
  std::uint64_t budget = std::uint64_t{1} << 28;
  int threads = 1;
};

/// G(F_{2^n})-orbit of `rep` (n = 1, 2) by breadth-first search over
/// x_{+-alpha_i}(t) for t in an F_2-basis of the field and the simple lifts.
/// Throws BudgetExceeded once more than `budget` points are found.
std::uint64_t bfs_orbit(const VElement& rep, int n, const OrbitOptions& opt = {});

/// Same as bfs_orbit(n = 1) but keeps the orbit for membership queries.
std::shared_ptr<const PackedSet<1>> bfs_orbit_set(const VElement& rep, const OrbitOptions& opt = {});

/// B(F_{2^n})-orbit of `rep` (n = 1, 2): generators are x_beta(t) for all
/// negative roots beta and t in an F_2-basis, and alpha_i^vee(x) for the
/// field generator x.
std::uint64_t b_orbit(const VElement& rep, int n);

/// Long-root part of the support.
std::vector<int> long_component(const std::vector<int>& support);

/// Reference orbits of xi_2 and xi_6 over F_2, built on first use.
class ReferenceOrbits {
 public:
  static const ReferenceOrbits& get();
  /// "xi2", "xi6", or "" when the vector is in neither.
  std::string classify(const VElement& v) const;

 private:
  ReferenceOrbits();
  std::shared_ptr<const PackedSet<1>> xi2_, xi6_;
};

/// All w in W such that each source root maps into targets + (nonnegative
/// combination of negative simple roots).  Returns indices into WeylGroup.
std::vector<std::size_t> weyl_obstruction_search(const std::vector<int>& sources, const std::vector<int>& targets);

struct TransportResult {
  int from = 0, to = 0;
  bool ok = false;
  std::string method;  // "weyl-lift", "bfs", or "none"
  std::optional<GroupWord> witness;
  VElement image;
};

/// For (5,6), (8,9), (11,12), (14,15), (18,19): psi(xi_a) is carried to xi_b
/// by the lift of some Weyl element over F_2 (falls back to BFS membership).
std::vector<TransportResult> isogeny_transport_check(const OrbitOptions& opt = {});

}  // namespace f4x
