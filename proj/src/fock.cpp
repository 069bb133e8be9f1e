#include "fockspace/fock.hpp"

#include <algorithm>
#include <sstream>

#include "fockspace/errors.hpp"

namespace fockspace {

namespace {

constexpr std::size_t kMaxRewriteDepth = 10'000;

void add_into(FockElement::Terms& terms, const Weight& mu, const LaurentPoly& c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms.try_emplace(mu, c);
  if (inserted)
    return;
  it->second += c;
  if (it->second.is_zero())
    terms.erase(it);
}

void add_scaled_into(FockElement::Terms& terms, const FockElement::Terms& x, const LaurentPoly& c) {
  for (const auto& [mu, a] : x)
    add_into(terms, mu, a * c);
}

} // namespace

// ---------------------------------------------------------------------------
// FockElement

FockElement::FockElement(Terms terms) : terms_(std::move(terms)) {
  std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

FockElement FockElement::ket(const Weight& mu, LaurentPoly coeff) {
  FockElement x;
  x.add_term(mu, coeff);
  return x;
}

LaurentPoly FockElement::coeff(const Weight& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void FockElement::add_term(const Weight& mu, const LaurentPoly& c) { add_into(terms_, mu, c); }

void FockElement::add_scaled(const FockElement& x, const LaurentPoly& c) { add_scaled_into(terms_, x.terms_, c); }

FockElement& FockElement::operator+=(const FockElement& x) {
  for (const auto& [mu, c] : x.terms_)
    add_into(terms_, mu, c);
  return *this;
}

FockElement& FockElement::operator-=(const FockElement& x) {
  for (const auto& [mu, c] : x.terms_)
    add_into(terms_, mu, -c);
  return *this;
}

FockElement operator*(const LaurentPoly& c, const FockElement& x) {
  FockElement r;
  r.add_scaled(x, c);
  return r;
}

std::string FockElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mu, c] = *it;
    const auto lead = c.coeff(c.max_exponent());
    const bool negative = lead < 0;
    const LaurentPoly mag = negative ? -c : c;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    const auto nterms = mag.terms().size();
    if (mag == LaurentPoly(1)) {
      // bare ket
    } else if (nterms == 1) {
      os << mag.to_string();
    } else {
      os << '(' << mag.to_string() << ')';
    }
    os << '|' << mu.to_string() << '>';
  }
  return os.str();
}

RawFockExpression RawFockExpression::from(const FockElement& x) {
  RawFockExpression raw;
  raw.terms.assign(x.terms().begin(), x.terms().end());
  return raw;
}

// ---------------------------------------------------------------------------
// FockSpace

FockSpace::FockSpace(FockConfig config) : config_(std::move(config)), characters_(config_.root_system) {
  if (!config_.root_system)
    throw PreconditionError("FockConfig needs a root system");
  if (config_.ell < 1)
    throw PreconditionError("ell must be >= 1, got " + std::to_string(config_.ell));
  if (config_.fuel == 0)
    throw PreconditionError("fuel must be positive");
}

/*
  One rewrite of a non-dominant ket |mu>. The straightening relation is read
  as a rule for |s_i o lambda> with lambda = s_i o mu, where i is the least
  index with <mu + rho, alpha_i^vee> < 0. Writing P = <lambda + rho, alpha_i^vee> > 0:

    P in ell Z           |mu> = -|lambda>
    0 < P < ell          |mu> = -v |lambda>
    P > ell, P = k ell + j (0 < j < ell)
                         |mu> = -v |s_i o lambda1> - |lambda1> - v |lambda>,
                                lambda1 = lambda - j alpha_i

  Kets on a wall (<mu + rho, alpha_i^vee> = 0 for some i) are zero: the
  first case with s_i o mu = mu gives 2|mu> = 0 and the space is free on
  dominant kets.
*/
FockElement::Terms FockSpace::rewrite(const Weight& mu) {
  const RootSystem& rs = roots();
  const std::int64_t ell = config_.ell;
  const std::size_t n = rs.rank();

  for (std::size_t i = 0; i < n; ++i)
    if (mu[i] + 1 == 0)
      return {};
  std::size_t i = 0;
  while (i < n && mu[i] + 1 > 0)
    ++i;
  if (i == n)
    return {{mu, LaurentPoly(1)}};

  const int idx = static_cast<int>(i + 1);
  const Weight lambda = rs.simple_dot(idx, mu);
  const std::int64_t p = lambda[i] + 1;
  static const LaurentPoly minus_v = -LaurentPoly::v();
  static const LaurentPoly minus_one = LaurentPoly(-1);

  FockElement::Terms out;
  if (p % ell == 0) {
    add_scaled_into(out, straighten_ket(lambda), minus_one);
  } else if (p < ell) {
    add_scaled_into(out, straighten_ket(lambda), minus_v);
  } else {
    const Weight lambda1 = lambda - (p % ell) * rs.simple_root(idx);
    add_scaled_into(out, straighten_ket(rs.simple_dot(idx, lambda1)), minus_v);
    add_scaled_into(out, straighten_ket(lambda1), minus_one);
    add_scaled_into(out, straighten_ket(lambda), minus_v);
  }
  return out;
}

const FockElement::Terms& FockSpace::straighten_ket(const Weight& mu) {
  if (auto it = straight_memo_.find(mu); it != straight_memo_.end())
    return it->second;
  if (fuel_left_ == 0)
    throw FuelExhausted("straightening fuel exhausted at |" + mu.to_string() + ">");
  --fuel_left_;
  thread_local std::size_t depth = 0;
  if (depth >= kMaxRewriteDepth)
    throw FuelExhausted("straightening recursion too deep at |" + mu.to_string() + ">");
  ++depth;
  FockElement::Terms t;
  try {
    t = rewrite(mu);
  } catch (...) {
    --depth;
    throw;
  }
  --depth;
  return straight_memo_.emplace(mu, std::move(t)).first->second;
}

FockElement FockSpace::straighten(const RawFockExpression& raw) {
  fuel_left_ = config_.fuel;
  for (const auto& [mu, c] : raw.terms)
    if (mu.rank() != roots().rank())
      throw PreconditionError("ket |" + mu.to_string() + "> has wrong rank");
  FockElement::Terms out;
  for (const auto& [mu, c] : raw.terms) {
    if (c.is_zero())
      continue;
    add_scaled_into(out, straighten_ket(mu), c);
  }
  return FockElement(std::move(out));
}

FockElement FockSpace::straighten(const Weight& mu) { return straighten(RawFockExpression::ket(mu)); }

const FockElement& FockSpace::bar_ket(const Weight& lambda) {
  if (auto it = bar_memo_.find(lambda); it != bar_memo_.end())
    return it->second;
  const RootSystem& rs = roots();
  if (!rs.is_dominant(lambda))
    throw PreconditionError("bar_ket expects a dominant weight, got " + lambda.to_string());
  const auto n_pos = static_cast<std::int64_t>(rs.num_positive_roots());
  const std::int64_t n_lam = rs.n_lambda(lambda, config_.ell);
  const LaurentPoly factor = LaurentPoly::monomial(n_pos % 2 == 0 ? 1 : -1, -(n_pos - n_lam));
  FockElement image = factor * straighten(rs.weyl_dot(rs.w0_word(), lambda));
  return bar_memo_.emplace(lambda, std::move(image)).first->second;
}

FockElement FockSpace::bar(const FockElement& x) {
  FockElement out;
  for (const auto& [lambda, c] : x.terms())
    out.add_scaled(bar_ket(lambda), c.bar());
  return out;
}

/*
  Descending triangular solve. With S the dominant weights below lambda in
  order of increasing depth and B the bar matrix on S (bar|mu> = sum_nu
  B_{nu,mu}|nu>, unitriangular), bar-invariance of C_lambda reads

    P_nu - bar(P_nu) = sum_{nu < mu <= lambda} B_{nu,mu} bar(P_mu),

  and P_nu is the positive part of the right side. Contributions are
  scattered down from each solved mu, so only the support of bar|mu> is
  touched.
*/
const FockElement& FockSpace::canonical_basis(const Weight& lambda) {
  if (auto it = cb_memo_.find(lambda); it != cb_memo_.end())
    return it->second;
  const RootSystem& rs = roots();
  if (!rs.is_dominant(lambda))
    throw PreconditionError("canonical_basis requires a dominant weight, got " + lambda.to_string());

  const std::vector<Weight> support = rs.dominant_below(lambda);
  std::unordered_map<Weight, std::size_t, WeightHash> position;
  for (std::size_t k = 0; k < support.size(); ++k)
    position.emplace(support[k], k);

  std::vector<LaurentPoly> p(support.size());
  std::vector<LaurentPoly> rhs(support.size());
  p[0] = LaurentPoly(1);
  for (std::size_t k = 0; k < support.size(); ++k) {
    const Weight& nu = support[k];
    if (k > 0) {
      const LaurentPoly& r = rhs[k];
      if (r.bar() != -r)
        throw InconsistencyError("canonical_basis(" + lambda.to_string() + "): right side at |" + nu.to_string() +
                                 "> is not bar-antisymmetric: " + r.to_string());
      p[k] = r.positive_part();
    }
    if (p[k].is_zero())
      continue;
    const FockElement& b = bar_ket(nu);
    if (b.coeff(nu) != LaurentPoly(1))
      throw InconsistencyError("bar|" + nu.to_string() + "> is not unitriangular");
    const LaurentPoly pb = p[k].bar();
    for (const auto& [mu, c] : b.terms()) {
      if (mu == nu)
        continue;
      auto pos = position.find(mu);
      if (pos == position.end() || pos->second <= k)
        throw InconsistencyError("bar|" + nu.to_string() + "> has term |" + mu.to_string() +
                                 "> outside the lower dominance cone");
      rhs[pos->second].add_product(c, pb);
    }
  }

  FockElement::Terms terms;
  for (std::size_t k = 0; k < support.size(); ++k)
    if (!p[k].is_zero())
      terms.emplace(support[k], std::move(p[k]));
  return cb_memo_.emplace(lambda, FockElement(std::move(terms))).first->second;
}

LaurentPoly FockSpace::kl_coefficient(const Weight& mu, const Weight& lambda) {
  if (!roots().is_dominant(mu))
    throw PreconditionError("kl_coefficient requires dominant mu, got " + mu.to_string());
  return canonical_basis(lambda).coeff(mu);
}

RawFockExpression FockSpace::act_raw(const MonomialMap& m, const RawFockExpression& x) const {
  const RootSystem& rs = roots();
  RawFockExpression out;
  out.terms.reserve(m.size() * x.terms.size());
  for (const auto& [mu, k] : m) {
    const Weight shift = config_.ell * rs.star(mu);
    const LaurentPoly kk(k);
    for (const auto& [gamma, c] : x.terms)
      out.terms.emplace_back(gamma + shift, c * kk);
  }
  return out;
}

FockElement FockSpace::act_character(const Character& c, const FockElement& x) {
  return straighten(act_raw(monomial_expand(roots(), c), RawFockExpression::from(x)));
}

} // namespace fockspace
