#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fockspace {

inline constexpr std::size_t kMaxRank = 8;

/*
  Integral weight in fundamental-weight coordinates: coordinate i is the
  pairing <lambda, alpha_i^vee>. Fixed-capacity storage keeps weights cheap
  to copy and hash, which matters for the straightening memo.
*/
class Weight {
public:
  Weight() = default;
  explicit Weight(std::span<const std::int64_t> coords);
  Weight(std::initializer_list<std::int64_t> coords);
  static Weight zero(std::size_t rank);
  static Weight fundamental(std::size_t rank, int index); // omega_index, 1-based

  std::size_t rank() const { return rank_; }
  std::int64_t operator[](std::size_t i) const { return c_[i]; }
  std::int64_t& operator[](std::size_t i) { return c_[i]; }
  std::span<const std::int64_t> coords() const { return {c_.data(), rank_}; }
  std::vector<std::int64_t> to_vector() const { return {c_.begin(), c_.begin() + rank_}; }
  bool is_zero() const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(std::int64_t k, Weight a);
  Weight operator-() const;

  // Lexicographic on coordinates.
  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;

  /// "4,2"
  std::string to_string() const;

private:
  std::array<std::int64_t, kMaxRank> c_{};
  std::size_t rank_ = 0;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

/// Parses "4,-2,0" into a weight of the given rank.
Weight parse_weight(std::string_view text, std::size_t rank);

struct CartanType {
  char series = 'A';
  int rank = 1;

  /// Throws InvalidCartanType for inadmissible series/rank pairs.
  static CartanType parse(std::string_view text);
  void validate() const;
  std::string to_string() const;
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;
/// Integer combination of simple roots (or simple coroots).
using RootVector = std::vector<std::int64_t>;

/// Element t_mu w of the affine Weyl group; w is a word in 1-based letters.
struct AffineWeylElement {
  Weight translation;
  std::vector<int> finite_part;
};

/*
  Finite crystallographic root system of the simply connected group of the
  given type (Bourbaki numbering). Immutable after construction.

  Generator indices in the public interface are 1-based.
*/
class RootSystem {
public:
  explicit RootSystem(CartanType type);

  const CartanType& type() const { return type_; }
  std::size_t rank() const { return rank_; }

  /// a_ij = <alpha_j, alpha_i^vee>
  const IntMatrix& cartan_matrix() const { return cartan_; }
  /// d_i with d_i a_ij symmetric; the shortest simple root has d = 1.
  const std::vector<std::int64_t>& symmetrizers() const { return sym_; }
  /// Simple-root coordinates, sorted by height then lexicographically.
  const std::vector<RootVector>& positive_roots() const { return pos_roots_; }
  /// Simple-coroot coordinates.
  const std::vector<RootVector>& positive_coroots() const { return pos_coroots_; }
  /// Positive roots as weights (fundamental coordinates), same order as positive_roots().
  const std::vector<Weight>& positive_root_weights() const { return pos_root_wts_; }
  std::size_t num_positive_roots() const { return pos_roots_.size(); }

  const Weight& rho() const { return rho_; }
  const std::vector<int>& w0_word() const { return w0_word_; }
  const RootVector& highest_short_coroot() const { return phi_vee_; }
  int dual_coxeter() const { return dual_coxeter_; }

  /// alpha_i as a weight (column i of the Cartan matrix).
  const Weight& simple_root(int i) const;
  /// Simple-root combination converted to fundamental coordinates.
  Weight root_to_weight(const RootVector& c) const;

  std::int64_t cartan_det() const { return det_; }
  /// det(A) * A^{-1} lambda: simple-root coordinates of lambda scaled by det(A).
  RootVector scaled_root_coords(const Weight& lambda) const;
  /// det(A) * height(lambda).
  std::int64_t scaled_height(const Weight& lambda) const;
  /// det(A) * (lambda, mu) for the invariant form with (alpha_i, alpha_i) = 2 d_i.
  std::int64_t scaled_form(const Weight& lambda, const Weight& mu) const;

  // --- operations ---------------------------------------------------------

  /// <lambda, sum_i c_i alpha_i^vee>
  std::int64_t pairing(const Weight& lambda, const RootVector& coroot) const;
  /// s_i lambda (ordinary action).
  Weight simple_reflect(int i, const Weight& lambda) const;
  /// s_i o lambda = s_i(lambda + rho) - rho.
  Weight simple_dot(int i, const Weight& lambda) const;
  /// Dot action of the word s_{w[0]} s_{w[1]} ... (rightmost letter acts first).
  Weight weyl_dot(std::span<const int> word, const Weight& lambda) const;
  /// Ordinary action of the same word.
  Weight weyl_act(std::span<const int> word, const Weight& lambda) const;
  /// (t_mu w) o lambda = w(lambda + rho) - rho - ell mu, level (-ell-h).
  Weight affine_dot(const AffineWeylElement& g, const Weight& lambda, std::int64_t ell) const;
  /// mu* = -w0 mu.
  Weight star(const Weight& mu) const;

  /// <lambda + rho, alpha_i^vee> >= 1 for every i.
  bool is_dominant(const Weight& lambda) const;
  /// lambda - mu is a nonnegative integer combination of simple roots.
  bool dominance_leq(const Weight& mu, const Weight& lambda) const;
  /// #{alpha in R+ : <lambda + rho, alpha^vee> in ell Z}
  int n_lambda(const Weight& lambda, std::int64_t ell) const;
  /// lambda - j alpha_i where <lambda+rho, alpha_i^vee> = k ell + j, k >= 1, 0 <= j < ell.
  Weight lambda_one(const Weight& lambda, int i, std::int64_t ell) const;
  /// lambda = ell * lambda1 + lambda0 with lambda0 ell-restricted. Returns {lambda0, lambda1}.
  std::pair<Weight, Weight> decompose_restricted(const Weight& lambda, std::int64_t ell) const;
  /// Dominant mu <= lambda, ordered by height of lambda - mu, then coordinates descending.
  std::vector<Weight> dominant_below(const Weight& lambda) const;
  /// <nu, phi^vee> >= -ell-1 and <nu, alpha_i^vee> <= -1 for all i.
  bool in_alcove(const Weight& nu, std::int64_t ell) const;

  /// Dominant element of the ordinary W0-orbit of mu.
  Weight dominant_representative(const Weight& mu) const;
  /// Ordinary W0-orbit of mu, sorted.
  std::vector<Weight> orbit(const Weight& mu) const;

private:
  void check_index(int i) const;

  CartanType type_;
  std::size_t rank_;
  IntMatrix cartan_;
  std::vector<std::int64_t> sym_;
  std::vector<RootVector> pos_roots_;
  std::vector<RootVector> pos_coroots_;
  std::vector<Weight> pos_root_wts_;
  std::vector<Weight> simple_roots_;
  Weight rho_;
  std::vector<int> w0_word_;
  RootVector phi_vee_;
  int dual_coxeter_ = 0;
  std::int64_t det_ = 1;
  IntMatrix adj_; // det * A^{-1}
};

IntMatrix cartan_matrix_for(const CartanType& type);

} // namespace fockspace
