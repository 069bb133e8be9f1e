#pragma once

#include <map>
#include <memory>
#include <unordered_map>

#include "fockspace/laurent.hpp"
#include "fockspace/rootdata.hpp"

namespace fockspace {

/// Element of Z[X] (group algebra of the weight lattice); no zero values.
using MonomialMap = std::map<Weight, Integer>;
/// Integer combination of Weyl characters s_lambda, keyed by dominant lambda.
using SchurVector = std::map<Weight, Integer>;

/// Irreducible character stored by its dominant weight multiplicities.
struct Character {
  Weight highest;
  std::map<Weight, Integer> dom_mults;

  friend bool operator==(const Character&, const Character&) = default;
};

/*
  Memoized Weyl characters for one root system.

  The memo is not synchronized: one table per computation context.
*/
class CharacterTable {
public:
  explicit CharacterTable(std::shared_ptr<const RootSystem> roots);

  const RootSystem& roots() const { return *roots_; }
  std::shared_ptr<const RootSystem> roots_ptr() const { return roots_; }

  /// Freudenthal recursion over the dominant weights below lambda.
  const Character& weyl_character(const Weight& lambda);

  /// Inverse of monomial_expand. Throws NonInvariantError on input that is
  /// not constant on W0-orbits.
  SchurVector schur_expand(const MonomialMap& m);

private:
  Character freudenthal(const Weight& lambda) const;

  std::shared_ptr<const RootSystem> roots_;
  std::unordered_map<Weight, Character, WeightHash> memo_;
};

/// prod_{alpha > 0} <lambda + rho, alpha^vee> / <rho, alpha^vee>
Integer weyl_dimension(const RootSystem& roots, const Weight& lambda);

/// Expands each dominant multiplicity over its W0-orbit.
MonomialMap monomial_expand(const RootSystem& roots, const Character& c);

/// X^mu -> X^{ell mu}
MonomialMap psi_ell(const MonomialMap& m, std::int64_t ell);

/// Convolution product in Z[X].
MonomialMap multiply(const MonomialMap& a, const MonomialMap& b);

/// Adds c * X^mu, dropping the key if the value cancels.
void accumulate(MonomialMap& m, const Weight& mu, const Integer& c);

bool is_w0_invariant(const RootSystem& roots, const MonomialMap& m);

} // namespace fockspace
