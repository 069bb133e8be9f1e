#include "fockspace/theorems.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <sstream>

#include "fockspace/errors.hpp"

namespace fockspace {

namespace {

std::string describe(const FockSpace& space, std::initializer_list<std::pair<const char*, std::string>> fields) {
  std::ostringstream os;
  os << space.roots().type().to_string() << " ell=" << space.ell();
  for (const auto& [k, v] : fields)
    os << ' ' << k << '=' << v;
  return os.str();
}

VerificationReport compare(std::string claim, std::string instance, const FockElement& lhs, const FockElement& rhs) {
  VerificationReport r{std::move(claim), std::move(instance), lhs == rhs, {}, {}};
  if (!r.passed) {
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
  }
  return r;
}

void require_dominant(const RootSystem& rs, const Weight& w, const char* what) {
  if (w.rank() != rs.rank())
    throw PreconditionError(std::string(what) + ": weight " + w.to_string() + " has wrong rank");
  if (!rs.is_dominant(w))
    throw PreconditionError(std::string(what) + " requires a dominant weight, got " + w.to_string());
}

std::string schur_string(const SchurVector& s) {
  if (s.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = s.rbegin(); it != s.rend(); ++it) {
    const auto& [mu, c] = *it;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (mag != 1)
      os << mag;
    os << "s(" << mu.to_string() << ')';
  }
  return os.str();
}

} // namespace

FockElement steinberg_product(FockSpace& space, const Weight& lambda) {
  const RootSystem& rs = space.roots();
  require_dominant(rs, lambda, "steinberg_product");
  const auto [lambda0, lambda1] = rs.decompose_restricted(lambda, space.ell());
  const Character& s = space.characters().weyl_character(rs.star(lambda1));
  const FockElement c0 = space.canonical_basis(lambda0);
  return space.act_character(s, c0);
}

VerificationReport verify_steinberg(FockSpace& space, const Weight& lambda) {
  const FockElement product = steinberg_product(space, lambda);
  const FockElement& cb = space.canonical_basis(lambda);
  return compare("steinberg", describe(space, {{"lambda", lambda.to_string()}}), cb, product);
}

FockElement whittaker_avatar(FockSpace& space, const Weight& mu) {
  const RootSystem& rs = space.roots();
  require_dominant(rs, mu, "whittaker_avatar");
  const Weight ket = space.ell() * rs.star(mu) - rs.rho();
  if (!rs.is_dominant(ket))
    throw PreconditionError("whittaker_avatar: |" + ket.to_string() + "> lies on a wall");
  return FockElement::ket(ket);
}

VerificationReport casselman_shalika_check(FockSpace& space, const Weight& lambda) {
  const RootSystem& rs = space.roots();
  require_dominant(rs, lambda, "casselman_shalika_check");
  const Weight base = (space.ell() - 1) * rs.rho();
  const FockElement lhs = space.act_character(space.characters().weyl_character(lambda), FockElement::ket(base));
  const FockElement rhs = FockElement::ket(space.ell() * rs.star(lambda) + base);
  return compare("cs", describe(space, {{"lambda", lambda.to_string()}}), lhs, rhs);
}

VerificationReport verify_linkage_rho(FockSpace& space, const Weight& lambda, int i) {
  const RootSystem& rs = space.roots();
  require_dominant(rs, lambda, "verify_linkage_rho");
  const Weight top = space.ell() * lambda - rs.rho();
  if (!rs.is_dominant(top))
    throw PreconditionError("verify_linkage_rho requires ell*lambda - rho dominant, got " + top.to_string());
  const FockElement ket = FockElement::ket(top);
  const FockElement reflected = space.straighten(rs.simple_dot(i, top));
  const FockElement& cb = space.canonical_basis(top);
  const std::string inst = describe(space, {{"lambda", lambda.to_string()}, {"i", std::to_string(i)}});
  if (reflected != -1 * ket)
    return compare("linkage", inst, reflected, LaurentPoly(-1) * ket);
  return compare("linkage", inst, cb, ket);
}

VerificationReport mod_t_cancellation_check(FockSpace& space, const Weight& lambda0, const Weight& nu, int i) {
  const RootSystem& rs = space.roots();
  require_dominant(rs, lambda0, "mod_t_cancellation_check");
  for (auto x : lambda0.coords())
    if (x >= space.ell())
      throw PreconditionError("mod_t_cancellation_check requires ell-restricted lambda0, got " + lambda0.to_string());
  if (nu.rank() != rs.rank())
    throw PreconditionError("mod_t_cancellation_check: nu has wrong rank");
  const std::int64_t ell = space.ell();
  RawFockExpression raw;
  raw.terms.emplace_back(lambda0 + ell * nu, LaurentPoly(1));
  raw.terms.emplace_back(lambda0 + ell * rs.simple_dot(i, nu), LaurentPoly(1));
  const FockElement sum = space.straighten(raw);
  const bool ok = std::all_of(sum.terms().begin(), sum.terms().end(),
                              [](const auto& kv) { return kv.second.in_vZv(); });
  VerificationReport r{"modt",
                       describe(space, {{"lambda0", lambda0.to_string()},
                                        {"nu", nu.to_string()},
                                        {"i", std::to_string(i)}}),
                       ok,
                       {},
                       {}};
  if (!ok) {
    r.lhs = sum.to_string();
    r.rhs = "0 mod v";
  }
  return r;
}

VerificationReport frobenius_check(FockSpace& space, const Weight& lambda) {
  const RootSystem& rs = space.roots();
  require_dominant(rs, lambda, "frobenius_check");
  CharacterTable& chars = space.characters();
  const SchurVector lhs = chars.schur_expand(psi_ell(monomial_expand(rs, chars.weyl_character(lambda)), space.ell()));
  SchurVector rhs;
  for (const auto& [mu, p] : space.canonical_basis(space.ell() * lambda).terms()) {
    Integer value = p.eval_one();
    if (value != 0)
      rhs.emplace(mu, std::move(value));
  }
  VerificationReport r{"frobenius", describe(space, {{"lambda", lambda.to_string()}}), lhs == rhs, {}, {}};
  if (!r.passed) {
    r.lhs = schur_string(lhs);
    r.rhs = schur_string(rhs);
  }
  return r;
}

LaurentPoly llt_coefficient(FockSpace& space, const Weight& lambda, const Weight& mu) {
  const RootSystem& rs = space.roots();
  require_dominant(rs, lambda, "llt_coefficient");
  require_dominant(rs, mu, "llt_coefficient");
  return space.kl_coefficient(mu, space.ell() * lambda);
}

std::map<Weight, LaurentPoly> gh_coefficients(FockSpace& space, const Weight& lambda, const Weight& nu) {
  const RootSystem& rs = space.roots();
  require_dominant(rs, lambda, "gh_coefficients");
  const Character& s = space.characters().weyl_character(rs.star(lambda));
  const FockElement x = space.act_character(s, space.straighten(nu));
  return x.terms();
}

VerificationReport gh_identity_check(FockSpace& space, const Weight& lambda) {
  const RootSystem& rs = space.roots();
  require_dominant(rs, lambda, "gh_identity_check");
  const FockElement q(gh_coefficients(space, lambda, Weight::zero(rs.rank())));
  const FockElement& p = space.canonical_basis(space.ell() * lambda);
  return compare("gh", describe(space, {{"lambda", lambda.to_string()}}), q, p);
}

GradedCharacter affine_graded_character(FockSpace& space, const Weight& lambda, int depth) {
  const RootSystem& rs = space.roots();
  require_dominant(rs, lambda, "affine_graded_character");
  if (depth < 0)
    throw PreconditionError("affine_graded_character requires depth >= 0");
  const auto d_max = static_cast<std::size_t>(depth);

  // Factors y of prod_{k} 1/(1 - x^k y): n copies of 1, then X^{+-alpha}.
  std::vector<Weight> factors(rs.rank(), Weight::zero(rs.rank()));
  for (const Weight& a : rs.positive_root_weights()) {
    factors.push_back(a);
    factors.push_back(-a);
  }

  std::vector<MonomialMap> series(d_max + 1);
  series[0].emplace(Weight::zero(rs.rank()), 1);
  for (std::size_t k = 1; k <= d_max; ++k) {
    for (const Weight& y : factors) {
      // Multiply by 1/(1 - x^k y): ascending d reuses already-updated lower layers.
      for (std::size_t d = k; d <= d_max; ++d)
        for (const auto& [mu, c] : MonomialMap(series[d - k]))
          accumulate(series[d], mu + y, c);
    }
  }

  const MonomialMap top =
      monomial_expand(rs, space.characters().weyl_character(space.ell() * lambda));
  GradedCharacter g;
  g.depth_bound = depth;
  for (std::size_t d = 0; d <= d_max; ++d)
    g.layers.emplace(static_cast<int>(d), multiply(top, series[d]));
  return g;
}

// ---------------------------------------------------------------------------
// Sweep

Claim parse_claim(const std::string& name) {
  if (name == "steinberg")
    return Claim::steinberg;
  if (name == "cs")
    return Claim::casselman_shalika;
  if (name == "linkage")
    return Claim::linkage;
  if (name == "modt")
    return Claim::mod_t;
  if (name == "frobenius")
    return Claim::frobenius;
  if (name == "gh")
    return Claim::gh_identity;
  throw PreconditionError("unknown claim '" + name + "'");
}

std::string claim_name(Claim c) {
  switch (c) {
  case Claim::steinberg:
    return "steinberg";
  case Claim::casselman_shalika:
    return "cs";
  case Claim::linkage:
    return "linkage";
  case Claim::mod_t:
    return "modt";
  case Claim::frobenius:
    return "frobenius";
  case Claim::gh_identity:
    return "gh";
  }
  return "?";
}

namespace {

std::vector<Weight> box(std::size_t rank, std::int64_t lo, std::int64_t hi) {
  std::vector<Weight> out;
  if (hi < lo)
    return out;
  std::vector<std::int64_t> c(rank, lo);
  for (;;) {
    out.emplace_back(c);
    std::size_t i = rank;
    while (i > 0 && c[i - 1] == hi) {
      c[i - 1] = lo;
      --i;
    }
    if (i == 0)
      break;
    ++c[i - 1];
  }
  return out;
}

using Task = std::function<VerificationReport(FockSpace&)>;

std::vector<Task> make_tasks(const RootSystem& rs, std::int64_t ell, const std::vector<Claim>& claims,
                             std::int64_t bound) {
  std::vector<Task> tasks;
  const auto n = rs.rank();
  for (Claim c : claims) {
    switch (c) {
    case Claim::steinberg:
      for (const Weight& l : dominant_box(n, bound))
        tasks.emplace_back([l](FockSpace& s) { return verify_steinberg(s, l); });
      break;
    case Claim::casselman_shalika:
      for (const Weight& l : dominant_box(n, bound))
        tasks.emplace_back([l](FockSpace& s) { return casselman_shalika_check(s, l); });
      break;
    case Claim::frobenius:
      for (const Weight& l : dominant_box(n, bound))
        tasks.emplace_back([l](FockSpace& s) { return frobenius_check(s, l); });
      break;
    case Claim::gh_identity:
      for (const Weight& l : dominant_box(n, bound))
        tasks.emplace_back([l](FockSpace& s) { return gh_identity_check(s, l); });
      break;
    case Claim::linkage:
      for (const Weight& l : box(n, 1, bound))
        for (int i = 1; i <= static_cast<int>(n); ++i)
          tasks.emplace_back([l, i](FockSpace& s) { return verify_linkage_rho(s, l, i); });
      break;
    case Claim::mod_t:
      for (const Weight& l0 : box(n, 0, ell - 1))
        for (const Weight& nu : box(n, -bound, bound))
          for (int i = 1; i <= static_cast<int>(n); ++i)
            tasks.emplace_back([l0, nu, i](FockSpace& s) { return mod_t_cancellation_check(s, l0, nu, i); });
      break;
    }
  }
  return tasks;
}

} // namespace

std::vector<Weight> dominant_box(std::size_t rank, std::int64_t bound) { return box(rank, 0, bound); }

std::vector<VerificationReport> sweep(const FockConfig& config, const std::vector<Claim>& claims,
                                      std::int64_t bound, unsigned jobs) {
  const auto tasks = make_tasks(*config.root_system, config.ell, claims, bound);
  std::vector<VerificationReport> reports(tasks.size());
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(tasks.size(), 1))));

  auto worker = [&](unsigned w) {
    FockSpace space(config);
    for (std::size_t t = w; t < tasks.size(); t += jobs)
      reports[t] = tasks[t](space);
  };
  if (jobs == 1) {
    worker(0);
    return reports;
  }
  std::vector<std::future<void>> running;
  for (unsigned w = 0; w < jobs; ++w)
    running.push_back(std::async(std::launch::async, worker, w));
  for (auto& f : running)
    f.get();
  return reports;
}

} // namespace fockspace
