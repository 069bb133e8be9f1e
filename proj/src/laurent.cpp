#include "fockspace/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace fockspace {

LaurentPoly::LaurentPoly(Integer c) {
  if (c != 0)
    coeffs_.push_back(std::move(c));
}

LaurentPoly LaurentPoly::monomial(Integer coeff, std::int64_t exponent) {
  LaurentPoly p(std::move(coeff));
  if (!p.is_zero())
    p.low_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<std::int64_t, Integer>>& terms) {
  LaurentPoly p;
  for (const auto& [e, c] : terms)
    p += monomial(c, e);
  return p;
}

Integer LaurentPoly::coeff(std::int64_t e) const {
  if (is_zero() || e < low_ || e > max_exponent())
    return 0;
  return coeffs_[static_cast<std::size_t>(e - low_)];
}

std::vector<std::pair<std::int64_t, Integer>> LaurentPoly::terms() const {
  std::vector<std::pair<std::int64_t, Integer>> out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0)
      out.emplace_back(low_ + static_cast<std::int64_t>(k), coeffs_[k]);
  return out;
}

void LaurentPoly::normalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  while (coeffs_.back() == 0)
    coeffs_.pop_back();
  const auto lead = first - coeffs_.begin();
  if (lead > 0) {
    coeffs_.erase(coeffs_.begin(), first);
    low_ += lead;
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero())
    return *this;
  if (is_zero())
    return *this = rhs;
  const std::int64_t lo = std::min(low_, rhs.low_);
  const std::int64_t hi = std::max(max_exponent(), rhs.max_exponent());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
    coeffs_[static_cast<std::size_t>(rhs.low_ - low_) + k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_)
    c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero())
    return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  r.normalize();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) { return *this = *this * rhs; }

void LaurentPoly::add_product(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero())
    return;
  if (is_zero() || &a == this || &b == this) {
    *this += a * b;
    return;
  }
  const std::int64_t plo = a.low_ + b.low_;
  const std::int64_t phi = a.max_exponent() + b.max_exponent();
  const std::int64_t lo = std::min(low_, plo);
  const std::int64_t hi = std::max(max_exponent(), phi);
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), Integer(0));
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  const auto off = static_cast<std::size_t>(plo - low_);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      coeffs_[off + i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  normalize();
}

LaurentPoly LaurentPoly::shifted(std::int64_t k) const {
  LaurentPoly r = *this;
  if (!r.is_zero())
    r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  if (is_zero())
    return r;
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  r.low_ = -max_exponent();
  return r;
}

LaurentPoly LaurentPoly::positive_part() const {
  LaurentPoly r;
  if (is_zero() || max_exponent() <= 0)
    return r;
  if (low_ >= 1)
    return *this;
  r.low_ = 1;
  r.coeffs_.assign(coeffs_.begin() + (1 - low_), coeffs_.end());
  r.normalize();
  return r;
}

Integer LaurentPoly::eval_one() const {
  Integer s = 0;
  for (const auto& c : coeffs_)
    s += c;
  return s;
}

std::string LaurentPoly::to_string() const {
  if (is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c == 0)
      continue;
    const std::int64_t e = low_ + static_cast<std::int64_t>(k);
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1)
      os << mag;
    os << 'v';
    if (e != 1)
      os << '^' << e;
  }
  return os.str();
}

LaurentPoly lp_arith(const LaurentPoly& a, const LaurentPoly& b, LpOp op) {
  switch (op) {
  case LpOp::add:
    return a + b;
  case LpOp::sub:
    return a - b;
  case LpOp::mul:
    return a * b;
  }
  return {};
}

} // namespace fockspace
