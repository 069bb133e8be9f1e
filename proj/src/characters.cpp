#include "fockspace/characters.hpp"

#include <algorithm>

#include "fockspace/errors.hpp"

namespace fockspace {

CharacterTable::CharacterTable(std::shared_ptr<const RootSystem> roots) : roots_(std::move(roots)) {}

const Character& CharacterTable::weyl_character(const Weight& lambda) {
  if (auto it = memo_.find(lambda); it != memo_.end())
    return it->second;
  Character c = freudenthal(lambda);
  return memo_.emplace(lambda, std::move(c)).first->second;
}

/*
  Freudenthal:
    ((lambda+rho, lambda+rho) - (mu+rho, mu+rho)) m(mu)
      = 2 sum_{alpha>0} sum_{k>=1} m(mu + k alpha) (mu + k alpha, alpha)
  Both sides are scaled by det(A) through RootSystem::scaled_form. Weights
  are visited by increasing depth below lambda, so every m(mu + k alpha)
  needed is already known (via its dominant representative).
*/
Character CharacterTable::freudenthal(const Weight& lambda) const {
  const RootSystem& rs = *roots_;
  if (!rs.is_dominant(lambda))
    throw PreconditionError("weyl_character requires a dominant weight, got " + lambda.to_string());

  Character ch{lambda, {}};
  const auto below = rs.dominant_below(lambda);
  const Weight lr = lambda + rs.rho();
  const std::int64_t top = rs.scaled_form(lr, lr);

  auto mult = [&](const Weight& nu) -> Integer {
    auto it = ch.dom_mults.find(rs.dominant_representative(nu));
    return it == ch.dom_mults.end() ? Integer(0) : it->second;
  };

  ch.dom_mults.emplace(lambda, 1);
  for (const Weight& mu : below) {
    if (mu == lambda)
      continue;
    Integer sum = 0;
    for (const Weight& alpha : rs.positive_root_weights()) {
      Weight nu = mu + alpha;
      for (;;) {
        Integer m = mult(nu);
        if (m == 0)
          break;
        sum += m * rs.scaled_form(nu, alpha);
        nu += alpha;
      }
    }
    const Weight mr = mu + rs.rho();
    const std::int64_t denom = top - rs.scaled_form(mr, mr);
    Integer value = 2 * sum / denom;
    if (value != 0)
      ch.dom_mults.emplace(mu, std::move(value));
  }
  return ch;
}

SchurVector CharacterTable::schur_expand(const MonomialMap& m) {
  const RootSystem& rs = *roots_;
  if (!is_w0_invariant(rs, m))
    throw NonInvariantError("schur_expand: monomial map is not W0-invariant");
  SchurVector out;
  MonomialMap rest = m;
  while (!rest.empty()) {
    // Leading dominant term: largest height, ties broken by coordinates.
    const Weight* lead = nullptr;
    std::int64_t best = 0;
    for (const auto& [mu, c] : rest) {
      if (!rs.is_dominant(mu))
        continue;
      auto h = rs.scaled_height(mu);
      if (!lead || h > best || (h == best && mu > *lead)) {
        lead = &mu;
        best = h;
      }
    }
    if (!lead)
      throw NonInvariantError("schur_expand: no dominant term left in a nonzero invariant map");
    const Weight mu = *lead;
    const Integer c = rest.at(mu);
    out.emplace(mu, c);
    for (const auto& [nu, k] : monomial_expand(rs, weyl_character(mu)))
      accumulate(rest, nu, -c * k);
  }
  return out;
}

Integer weyl_dimension(const RootSystem& roots, const Weight& lambda) {
  const Weight lr = lambda + roots.rho();
  Integer num = 1;
  Integer den = 1;
  for (const auto& cr : roots.positive_coroots()) {
    num *= roots.pairing(lr, cr);
    den *= roots.pairing(roots.rho(), cr);
  }
  return num / den;
}

MonomialMap monomial_expand(const RootSystem& roots, const Character& c) {
  MonomialMap out;
  for (const auto& [mu, k] : c.dom_mults)
    for (const Weight& w : roots.orbit(mu))
      out.emplace(w, k);
  return out;
}

MonomialMap psi_ell(const MonomialMap& m, std::int64_t ell) {
  if (ell < 1)
    throw PreconditionError("ell must be >= 1");
  MonomialMap out;
  for (const auto& [mu, c] : m)
    out.emplace(ell * mu, c);
  return out;
}

void accumulate(MonomialMap& m, const Weight& mu, const Integer& c) {
  if (c == 0)
    return;
  auto [it, inserted] = m.try_emplace(mu, c);
  if (inserted)
    return;
  it->second += c;
  if (it->second == 0)
    m.erase(it);
}

MonomialMap multiply(const MonomialMap& a, const MonomialMap& b) {
  MonomialMap out;
  for (const auto& [x, c] : a)
    for (const auto& [y, d] : b)
      accumulate(out, x + y, c * d);
  return out;
}

bool is_w0_invariant(const RootSystem& roots, const MonomialMap& m) {
  for (const auto& [mu, c] : m) {
    for (std::size_t i = 1; i <= roots.rank(); ++i) {
      auto it = m.find(roots.simple_reflect(static_cast<int>(i), mu));
      if (it == m.end() || it->second != c)
        return false;
    }
  }
  return true;
}

} // namespace fockspace
