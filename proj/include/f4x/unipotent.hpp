#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "f4x/chevalley.hpp"

namespace f4x {

/// Point counts up to (2^4)^24.
using Count = unsigned __int128;

std::string to_string(Count c);
/// log2 of a power of two, or -1.
int exact_log2(Count c);

/// x_root(t) with t free over the field, or pinned to one value.
struct Factor {
  int root = 0;
  std::optional<Elem> fixed;
};

/// Counts parameter tuples (t_1, ..., t_m) such that
///   x_{root_m}(t_m) ... x_{root_1}(t_1) start
/// agrees with `target` on every coordinate in `mask`.  factors[0] acts first.
struct CountProblem {
  VElement start;
  std::vector<Factor> factors;
  VElement target;
  std::uint64_t mask = 0;  // bit c = coordinate c
};

struct CountStats {
  std::size_t peak_states = 0;
  std::size_t transitions = 0;
};

/// Stage-wise dynamic program over partial vectors.  A coordinate is tested
/// as soon as no remaining factor can change it (computed from the support
/// closure of `start`), and is forgotten once no remaining factor reads it.
/// Field degree n in 1..4.
Count count_solutions(int n, const CountProblem& p, CountStats* stats = nullptr);

/// Unpruned depth-first enumeration of all tuples (reference implementation).
Count count_solutions_plain(int n, const CountProblem& p);

/// The 24 negative roots ordered by height, ties in layout order.
const std::vector<int>& negative_roots_by_height();

/// Coordinates that factor `root` can change when applied to a vector
/// supported on `support`, and the coordinates it reads.
std::uint64_t coords_changed(int root, std::uint64_t support);
std::uint64_t coords_read(int root);

}  // namespace f4x
