#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace f4x {

/// Integer coefficients (a, b, c, d) of a*alpha_1 + b*alpha_2 + c*alpha_3 + d*alpha_4.
/// The alpha_i are the negative simple roots, so negative roots have
/// nonnegative coefficients.
using Coeffs = std::array<int, 4>;

enum class RootLength : std::uint8_t { kShort, kLong };

struct Root {
  Coeffs coeffs{};
  RootLength length = RootLength::kShort;

  bool negative() const { return coeffs[0] + coeffs[1] + coeffs[2] + coeffs[3] > 0; }
  bool is_long() const { return length == RootLength::kLong; }
  /// Sum of coefficients; positive exactly on negative roots.
  int height() const { return coeffs[0] + coeffs[1] + coeffs[2] + coeffs[3]; }
};

/// "1220" style label, with a leading '-' for positive roots.
std::string root_label(const Coeffs& c);
std::optional<Coeffs> parse_root_label(const std::string& label);

/// One arrow of the root diagrams: `to` = `from` + alpha_label (solid) or
/// `from` + 2 alpha_label (dashed).  Indices refer to RootSystem::root.
struct HasseEdge {
  int from = 0;
  int to = 0;
  int label = 0;  // 1..4
  bool dashed = false;
  friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
  friend auto operator<=>(const HasseEdge&, const HasseEdge&) = default;
};

/// Cocharacter a*w_1 + b*w_2 + c*w_3 + d*w_4 with <w_i, alpha_j> = delta_ij.
struct Cocharacter {
  Coeffs coeffs{};
  int pair(const Coeffs& root) const {
    return coeffs[0] * root[0] + coeffs[1] * root[1] + coeffs[2] * root[2] + coeffs[3] * root[3];
  }
};

/// The F4 root datum.
///
/// Root indices follow the packed layout used everywhere in the project:
/// 0..11 are the long negative roots and 12..23 the short negative roots, both
/// in the column order of the standard root diagram (bottom to top); index
/// r + 24 is the negation of root r.
class RootSystem {
 public:
  static constexpr int kNumRoots = 48;
  static constexpr int kNumNegative = 24;

  /// Built once on first use; throws std::logic_error if the diagrams
  /// regenerated from the Cartan matrix disagree with the transcription.
  static const RootSystem& get();

  const Root& root(int idx) const { return roots_[idx]; }
  const std::vector<Root>& roots() const { return roots_; }
  std::optional<int> index_of(const Coeffs& c) const;
  /// Like index_of but throws std::invalid_argument for a non-root.
  int index(const Coeffs& c) const;
  int index(const std::string& label) const;
  static int negation(int idx) { return idx < kNumNegative ? idx + kNumNegative : idx - kNumNegative; }

  /// Entry (i, j) is <alpha_j, alpha_i^vee> (0-based).
  const std::array<std::array<int, 4>, 4>& cartan() const { return cartan_; }
  /// <beta, alpha_i^vee> for i in 0..3.
  int pairing(const Coeffs& beta, int i) const;
  /// Coroot of root idx in the simple coroot basis.
  const Coeffs& coroot(int idx) const { return coroots_[idx]; }
  /// <beta, gamma^vee> for an arbitrary weight beta and root index gamma.
  int pairing_with_coroot(const Coeffs& beta, int gamma) const;

  /// s_i applied to a root index (i in 0..3).
  int reflect(int i, int idx) const { return reflect_[i][idx]; }
  Coeffs reflect(int i, const Coeffs& beta) const;

  /// Diagrams regenerated from the Cartan data (negative roots only).
  const std::vector<HasseEdge>& derived_edges() const { return derived_; }
  /// Hard-coded transcription of the standard diagrams.
  static std::vector<HasseEdge> transcribed_edges();

  /// Index of alpha + beta (or std::nullopt).
  std::optional<int> sum(int a, int b) const;

 private:
  RootSystem();

  std::vector<Root> roots_;
  std::vector<Coeffs> coroots_;
  std::array<std::array<int, 4>, 4> cartan_{};
  std::array<std::array<int, kNumRoots>, 4> reflect_{};
  std::vector<HasseEdge> derived_;
};

/// Coefficient map of the special isogeny on characters:
/// alpha_1 -> 2 alpha_4, alpha_2 -> 2 alpha_3, alpha_3 -> alpha_2, alpha_4 -> alpha_1.
Coeffs phi_sharp(const Coeffs& c);

/// All negative roots of the same length lying at or above some support root,
/// i.e. beta_i plus a nonnegative combination of negative roots.  Sorted.
std::vector<int> phi_geq(const std::vector<int>& support);

/// Root-string data of beta through alpha: beta - p alpha, ..., beta + q alpha.
struct RootString {
  int p = 0;
  int q = 0;
};
RootString root_string(int alpha, int beta);

/// The Weyl group as permutations of the 48 root indices.
struct WeylElement {
  std::array<std::uint8_t, RootSystem::kNumRoots> perm{};
  int length = 0;
  /// Reduced word (0-based generators): w = s_{word[0]} s_{word[1]} ... .
  std::vector<int> word;

  int operator()(int root) const { return perm[root]; }
};

class WeylGroup {
 public:
  static const WeylGroup& get();

  const std::vector<WeylElement>& elements() const { return elems_; }
  std::size_t size() const { return elems_.size(); }
  const WeylElement& identity() const { return elems_.front(); }
  const WeylElement& longest() const;
  std::optional<std::size_t> find(const std::array<std::uint8_t, RootSystem::kNumRoots>& perm) const;
  WeylElement inverse(const WeylElement& w) const;

  /// Negative roots beta with w^{-1}(beta) positive; |inversion_set(w)| = l(w).
  std::vector<int> inversion_set(const WeylElement& w) const;

  /// Sum over w of 2^{l(w)} as well as the full length distribution.
  std::vector<std::uint64_t> length_distribution() const;

  std::size_t conjugacy_class_count() const;

 private:
  WeylGroup();
  std::vector<WeylElement> elems_;
};

}  // namespace f4x
