#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fockspace {

using Integer = boost::multiprecision::cpp_int;

/*
  Exact element of Z[v, v^-1], where v stands for t^{1/2}.

  Storage is dense between the lowest and highest nonzero exponent. The
  representation is normalized after every operation: the first and last
  stored coefficients are nonzero, and the zero polynomial stores nothing.
  Interior zeros are allowed in storage but are never reported by terms().
*/
class LaurentPoly {
public:
  LaurentPoly() = default;
  LaurentPoly(Integer c); // NOLINT: constants convert implicitly
  LaurentPoly(int c) : LaurentPoly(Integer(c)) {}

  static LaurentPoly monomial(Integer coeff, std::int64_t exponent);
  /// v^e
  static LaurentPoly v(std::int64_t exponent = 1) { return monomial(1, exponent); }
  static LaurentPoly from_terms(const std::vector<std::pair<std::int64_t, Integer>>& terms);

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t min_exponent() const { return low_; }
  std::int64_t max_exponent() const { return low_ + static_cast<std::int64_t>(coeffs_.size()) - 1; }

  /// Coefficient of v^e (zero when absent).
  Integer coeff(std::int64_t e) const;

  /// Nonzero terms sorted by exponent.
  std::vector<std::pair<std::int64_t, Integer>> terms() const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  /// this += a * b without a temporary.
  void add_product(const LaurentPoly& a, const LaurentPoly& b);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Multiply by v^k.
  LaurentPoly shifted(std::int64_t k) const;

  /// v -> v^-1.
  LaurentPoly bar() const;
  /// Terms of strictly positive exponent.
  LaurentPoly positive_part() const;
  /// Value at v = 1.
  Integer eval_one() const;
  /// Every coefficient sits at a strictly positive exponent (element of vZ[v]).
  bool in_vZv() const { return is_zero() || low_ >= 1; }

  /// Human-readable form in v, highest power first: "v^2 - 1", "-v^-1".
  std::string to_string() const;

private:
  void normalize();

  std::int64_t low_ = 0;
  std::vector<Integer> coeffs_;
};

// Free-function spellings of the module operations.
enum class LpOp { add, sub, mul };

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, LpOp op);
inline LaurentPoly lp_bar(const LaurentPoly& a) { return a.bar(); }
inline LaurentPoly lp_pos_part(const LaurentPoly& a) { return a.positive_part(); }
inline Integer lp_eval_one(const LaurentPoly& a) { return a.eval_one(); }

} // namespace fockspace
