#include "fockspace/serialize.hpp"

#include <limits>

#include "fockspace/errors.hpp"

namespace fockspace {

Json integer_to_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(c));
  return Json(c.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer())
    return Integer(j.get<std::int64_t>());
  if (j.is_string())
    return Integer(j.get<std::string>());
  throw PreconditionError("expected an integer, got " + j.dump());
}

Json laurent_to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back(Json::array({e, integer_to_json(c)}));
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  std::vector<std::pair<std::int64_t, Integer>> terms;
  for (const auto& t : j)
    terms.emplace_back(t.at(0).get<std::int64_t>(), integer_from_json(t.at(1)));
  return LaurentPoly::from_terms(terms);
}

Json weight_to_json(const Weight& w) { return Json(w.to_vector()); }

Json fock_to_json(const FockSpace& space, const FockElement& x) {
  Json terms = Json::array();
  for (const auto& [mu, c] : x.terms())
    terms.push_back({{"wt", weight_to_json(mu)}, {"coeff", laurent_to_json(c)}});
  return {{"type", space.roots().type().to_string()}, {"ell", space.ell()}, {"terms", std::move(terms)}};
}

FockElement fock_from_json(const Json& j) {
  FockElement x;
  for (const auto& t : j.at("terms")) {
    auto coords = t.at("wt").get<std::vector<std::int64_t>>();
    x.add_term(Weight(coords), laurent_from_json(t.at("coeff")));
  }
  return x;
}

Json monomials_to_json(const MonomialMap& m) {
  Json out = Json::array();
  for (const auto& [mu, c] : m)
    out.push_back({{"wt", weight_to_json(mu)}, {"mult", integer_to_json(c)}});
  return out;
}

Json character_to_json(const RootSystem& rs, const Character& c, bool with_monomials) {
  Json j = {{"type", rs.type().to_string()},
            {"highest", weight_to_json(c.highest)},
            {"dim", integer_to_json(weyl_dimension(rs, c.highest))},
            {"dominant", monomials_to_json(c.dom_mults)}};
  if (with_monomials)
    j["monomials"] = monomials_to_json(monomial_expand(rs, c));
  return j;
}

Json report_to_json(const VerificationReport& r) {
  Json j = {{"claim", r.claim}, {"instance", r.instance}, {"passed", r.passed}};
  if (!r.passed) {
    j["lhs"] = r.lhs;
    j["rhs"] = r.rhs;
  }
  return j;
}

Json graded_to_json(const FockSpace& space, const Weight& lambda, const GradedCharacter& g) {
  Json layers = Json::array();
  for (const auto& [d, m] : g.layers)
    layers.push_back({{"degree", d}, {"monomials", monomials_to_json(m)}});
  return {{"type", space.roots().type().to_string()},
          {"ell", space.ell()},
          {"highest", weight_to_json(lambda)},
          {"depth", g.depth_bound},
          {"layers", std::move(layers)}};
}

std::string dump_line(const Json& j) { return j.dump(); }

} // namespace fockspace
