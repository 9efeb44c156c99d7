#pragma once

#include <optional>
#include <string>
#include <vector>

#include "f4x/qpoly.hpp"
#include "f4x/tables.hpp"

namespace f4x {

/// #F4(q) = q^24 (q^2-1)(q^6-1)(q^8-1)(q^12-1).
const QPolynomial& f4_order();

struct SumCheck {
  bool ok = false;
  QPolynomial sum;
  QPolynomial difference;  // sum - q^48
};

/// Sum of the 24 orbit counts against q^48.  `skip` drops one row (1-based).
SumCheck orbit_count_sum_check(std::optional<int> skip = std::nullopt);

/// deg(count_i) = 52 - dim G_xi_i; returns the failing indices.
std::vector<int> degree_mismatches();

/// Rows whose count is negative at some q = 2^n, n <= 8.
std::vector<int> negative_evaluations();

struct StabilizerFit {
  int index = 0;
  std::vector<int> torus_ranks;  // every t in 0..4 that fits
  std::optional<int> torus_rank;  // set when exactly one fits
  QPolynomial stabilizer;  // #G_xi(q) for the chosen t
  QPolynomial quotient;  // #F4(q) / #G_xi(q), when exact
  std::string detail;  // names the failing factor
  bool ok = false;
};

/// Finds t with count_i * q^(dim - dimRed - t) * (q-1)^t * #Red(q) = #F4(q).
/// Rows with a disconnected stabilizer use count_i * q^dim = #F4(q).
StabilizerFit orbit_stabilizer_consistency(int index);

}  // namespace f4x
