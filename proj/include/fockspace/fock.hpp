#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fockspace/characters.hpp"
#include "fockspace/laurent.hpp"
#include "fockspace/rootdata.hpp"

namespace fockspace {

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

struct FockConfig {
  std::shared_ptr<const RootSystem> root_system;
  std::int64_t ell = 1;
  /// Rewrite steps allowed per top-level straightening call.
  std::uint64_t fuel = kDefaultFuel;
};

/// Canonical-form element: dominant kets with nonzero coefficients.
class FockElement {
public:
  using Terms = std::map<Weight, LaurentPoly>;

  FockElement() = default;
  explicit FockElement(Terms terms);
  static FockElement ket(const Weight& mu, LaurentPoly coeff = LaurentPoly(1));

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of |mu> (zero when absent).
  LaurentPoly coeff(const Weight& mu) const;

  /// this += c * x
  void add_scaled(const FockElement& x, const LaurentPoly& c);
  void add_term(const Weight& mu, const LaurentPoly& c);

  FockElement& operator+=(const FockElement& x);
  FockElement& operator-=(const FockElement& x);
  friend FockElement operator+(FockElement a, const FockElement& b) { return a += b; }
  friend FockElement operator-(FockElement a, const FockElement& b) { return a -= b; }
  friend FockElement operator*(const LaurentPoly& c, const FockElement& x);
  friend bool operator==(const FockElement&, const FockElement&) = default;

  /// "|10> - v|8> + v^2|0>", kets in decreasing coordinate order.
  std::string to_string() const;

private:
  Terms terms_;
};

/// Pre-straightening combination of arbitrary kets.
struct RawFockExpression {
  std::vector<std::pair<Weight, LaurentPoly>> terms;

  static RawFockExpression ket(const Weight& mu, LaurentPoly coeff = LaurentPoly(1)) {
    return {{{mu, std::move(coeff)}}};
  }
  static RawFockExpression from(const FockElement& x);
};

/*
  The abstract Fock space at a fixed ell.

  Owns the memo caches for straightening, the bar involution on basis kets,
  canonical basis elements and Weyl characters. None of them is
  synchronized; concurrent users need one FockSpace each (see clone()).
*/
class FockSpace {
public:
  explicit FockSpace(FockConfig config);

  const FockConfig& config() const { return config_; }
  const RootSystem& roots() const { return *config_.root_system; }
  std::int64_t ell() const { return config_.ell; }
  CharacterTable& characters() { return characters_; }

  /// Fresh space with the same configuration and empty caches.
  FockSpace clone() const { return FockSpace(config_); }

  FockElement straighten(const RawFockExpression& raw);
  FockElement straighten(const Weight& mu);

  /// Semilinear bar involution.
  FockElement bar(const FockElement& x);
  /// bar|lambda> for dominant lambda.
  const FockElement& bar_ket(const Weight& lambda);

  /// C_lambda: bar-invariant, |lambda> + sum p_{mu,lambda}|mu> with p in vZ[v].
  const FockElement& canonical_basis(const Weight& lambda);
  /// p_{mu,lambda}
  LaurentPoly kl_coefficient(const Weight& mu, const Weight& lambda);

  /// Level (-ell-h) action of X^mu on V: |gamma> -> |gamma + ell mu*>. Not
  /// well defined on the quotient unless m is W0-invariant.
  RawFockExpression act_raw(const MonomialMap& m, const RawFockExpression& x) const;
  /// s_lambda . x, straightened.
  FockElement act_character(const Character& c, const FockElement& x);

  /// Number of memoized straightened kets.
  std::size_t memo_size() const { return straight_memo_.size(); }

private:
  const FockElement::Terms& straighten_ket(const Weight& mu);
  FockElement::Terms rewrite(const Weight& mu);

  FockConfig config_;
  CharacterTable characters_;
  std::unordered_map<Weight, FockElement::Terms, WeightHash> straight_memo_;
  std::unordered_map<Weight, FockElement, WeightHash> bar_memo_;
  std::unordered_map<Weight, FockElement, WeightHash> cb_memo_;
  std::uint64_t fuel_left_ = 0;
};

} // namespace fockspace
