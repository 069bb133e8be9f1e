#pragma once

#include "json.hpp"

#include "fockspace/characters.hpp"
#include "fockspace/fock.hpp"
#include "fockspace/laurent.hpp"
#include "fockspace/theorems.hpp"

namespace fockspace {

using Json = nlohmann::json;

/// JSON number when it fits in 64 bits, decimal string otherwise.
Json integer_to_json(const Integer& c);
Integer integer_from_json(const Json& j);

/// [[exponent, coefficient], ...] sorted by exponent.
Json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const Json& j);

Json weight_to_json(const Weight& w);

/// {"ell": k, "terms": [{"coeff": [...], "wt": [...]}, ...], "type": "A1"}
Json fock_to_json(const FockSpace& space, const FockElement& x);
FockElement fock_from_json(const Json& j);

Json character_to_json(const RootSystem& rs, const Character& c, bool with_monomials);
Json monomials_to_json(const MonomialMap& m);
Json report_to_json(const VerificationReport& r);
Json graded_to_json(const FockSpace& space, const Weight& lambda, const GradedCharacter& g);

/// Compact, key-sorted dump used for every CLI line.
std::string dump_line(const Json& j);

} // namespace fockspace
