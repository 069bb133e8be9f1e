#pragma once

#include <map>
#include <string>
#include <vector>

#include "fockspace/characters.hpp"
#include "fockspace/fock.hpp"

namespace fockspace {

/// Outcome of checking one identity on one instance. lhs/rhs are filled
/// only when the check fails.
struct VerificationReport {
  std::string claim;
  std::string instance;
  bool passed = false;
  std::string lhs;
  std::string rhs;
};

/// Truncated graded character: layers[d] is the coefficient of q^{-d}.
struct GradedCharacter {
  int depth_bound = 0;
  std::map<int, MonomialMap> layers;
};

/// s_{lambda1*} . C_{lambda0} for lambda = ell lambda1 + lambda0.
FockElement steinberg_product(FockSpace& space, const Weight& lambda);
/// C_lambda == s_{lambda1*} . C_{lambda0}
VerificationReport verify_steinberg(FockSpace& space, const Weight& lambda);

/// |ell mu* - rho>, the Fock-space image of t^{-l(w0)/2} A_mu. Throws
/// PreconditionError when that ket lies on a wall.
FockElement whittaker_avatar(FockSpace& space, const Weight& mu);

/// s_lambda . |(ell-1)rho> == |ell lambda* + (ell-1)rho>
VerificationReport casselman_shalika_check(FockSpace& space, const Weight& lambda);

/// |s_i o (ell lambda - rho)> == -|ell lambda - rho> and C_{ell lambda - rho} == |ell lambda - rho>
VerificationReport verify_linkage_rho(FockSpace& space, const Weight& lambda, int i);

/// |lambda0 + ell nu> + |lambda0 + ell (s_i o nu)> == 0 mod v
VerificationReport mod_t_cancellation_check(FockSpace& space, const Weight& lambda0, const Weight& nu, int i);

/// psi_ell(s_lambda) == sum_mu p_{ell lambda, mu}(1) s_mu
VerificationReport frobenius_check(FockSpace& space, const Weight& lambda);

/// Coefficient of |mu> in C_{ell lambda}: Schur coefficient of s_lambda in G_mu.
LaurentPoly llt_coefficient(FockSpace& space, const Weight& lambda, const Weight& mu);

/// mu -> Q^lambda_{mu,nu}, the coefficients of s_{lambda*} . |nu>.
std::map<Weight, LaurentPoly> gh_coefficients(FockSpace& space, const Weight& lambda, const Weight& nu);

/// Q^lambda_{mu,0} == p_{ell lambda, mu} for every mu.
VerificationReport gh_identity_check(FockSpace& space, const Weight& lambda);

/// s_{ell lambda} prod_{k>0} (1-q^{-k})^{-n} prod_{alpha>0} (1-q^{-k}X^alpha)^{-1}(1-q^{-k}X^{-alpha})^{-1}
/// truncated at q^{-depth}.
GradedCharacter affine_graded_character(FockSpace& space, const Weight& lambda, int depth);

// --- sweep driver -----------------------------------------------------------

enum class Claim { steinberg, casselman_shalika, linkage, mod_t, frobenius, gh_identity };

Claim parse_claim(const std::string& name);
std::string claim_name(Claim c);

/// Dominant weights with every coordinate in [0, bound], lexicographic.
std::vector<Weight> dominant_box(std::size_t rank, std::int64_t bound);

/*
  Runs every claim over the bounded instance set:
    steinberg, cs, frobenius, gh   dominant lambda with coordinates <= bound
    linkage                         lambda >= rho in the same box, every i
    modt                            restricted lambda0, nu in [-bound, bound]^n, every i
  Instances are split across `jobs` workers, each with its own FockSpace;
  reports come back in instance order.
*/
std::vector<VerificationReport> sweep(const FockConfig& config, const std::vector<Claim>& claims,
                                      std::int64_t bound, unsigned jobs = 1);

} // namespace fockspace
