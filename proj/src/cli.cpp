#include "fockspace/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"

#include "fockspace/errors.hpp"
#include "fockspace/fock.hpp"
#include "fockspace/serialize.hpp"

namespace fockspace::cli {

namespace {

struct CommandSpec {
  const char* name;
  const char* help;
  std::size_t min_weights;
  std::size_t max_weights;
};

constexpr CommandSpec kCommands[] = {
    {"straighten", "straighten an arbitrary ket |mu>", 1, 1},
    {"bar", "bar involution of the straightened ket |mu>", 1, 1},
    {"cb", "canonical basis element C_lambda", 1, 1},
    {"act", "s_lambda acting on |gamma> (weights: lambda, gamma)", 2, 2},
    {"char", "Weyl character s_lambda", 1, 1},
    {"steinberg", "check C_lambda = s_{lambda1*} . C_{lambda0}", 1, 1},
    {"cs", "check s_lambda . |(ell-1)rho> = |ell lambda* + (ell-1)rho>", 1, 1},
    {"linkage", "check straightening and C on ell*lambda - rho", 1, 1},
    {"modt", "check |lambda0+ell nu> + |lambda0+ell(s_i o nu)> = 0 mod v (weights: lambda0, nu)", 2, 2},
    {"frobenius", "check psi_ell(s_lambda) = sum p_{ell lambda,mu}(1) s_mu", 1, 1},
    {"llt", "coefficient of |mu> in C_{ell lambda} (weights: lambda, mu)", 2, 2},
    {"gh", "coefficients of s_{lambda*} . |nu> (weights: lambda [, nu]); --check compares with C_{ell lambda}", 1, 2},
    {"graded-char", "truncated graded character of level -ell-h", 1, 1},
    {"sweep", "run claims over all weights with coordinates <= bound", 0, 0},
};

const CommandSpec& spec_for(const std::string& name) {
  for (const auto& c : kCommands)
    if (name == c.name)
      return c;
  throw UsageError("unknown command '" + name + "'");
}

bool is_verification(const std::string& cmd) {
  return cmd == "steinberg" || cmd == "cs" || cmd == "linkage" || cmd == "modt" || cmd == "frobenius" ||
         cmd == "sweep";
}

std::vector<Claim> parse_claims(const std::string& list) {
  std::vector<Claim> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty())
      out.push_back(parse_claim(item));
  if (out.empty())
    throw UsageError("--claims must name at least one claim");
  return out;
}

void emit_reports(const std::vector<VerificationReport>& reports, bool json, std::ostream& out) {
  std::size_t passed = 0;
  for (const auto& r : reports) {
    passed += r.passed ? 1 : 0;
    if (json) {
      out << dump_line(report_to_json(r)) << '\n';
    } else {
      out << (r.passed ? "PASS " : "FAIL ") << r.claim << ' ' << r.instance << '\n';
      if (!r.passed)
        out << "  lhs: " << r.lhs << "\n  rhs: " << r.rhs << '\n';
    }
  }
  const std::size_t failed = reports.size() - passed;
  if (json) {
    out << dump_line({{"summary", {{"total", reports.size()}, {"passed", passed}, {"failed", failed}}}}) << '\n';
  } else {
    out << "summary: " << reports.size() << " instances, " << passed << " passed, " << failed << " failed\n";
  }
}

std::string monomial_text(const MonomialMap& m) {
  if (m.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = m.rbegin(); it != m.rend(); ++it) {
    const auto& [mu, c] = *it;
    os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (mag != 1)
      os << mag;
    os << "X^(" << mu.to_string() << ')';
  }
  return os.str();
}

} // namespace

std::uint64_t default_fuel() {
  if (const char* env = std::getenv("FOCK_FUEL")) {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used);
      if (used == std::string(env).size() && value > 0)
        return value;
    } catch (const std::exception&) {
    }
  }
  return kDefaultFuel;
}

CliInvocation parse_args(const std::vector<std::string>& argv) {
  CLI::App app{"Abstract Fock space: straightening, bar involution, canonical bases and checks", "fockspace"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string type_str;
  std::int64_t ell = 0;
  std::vector<std::string> weight_strs;
  int index = 0;
  std::int64_t bound = 4;
  int depth = 2;
  std::uint64_t fuel = 0;
  bool json = false;
  bool monomials = false;
  bool check = false;
  std::string claims = "steinberg";
  unsigned jobs = 1;

  app.add_option("--type", type_str, "Cartan type, e.g. A1, B2, G2")->required();
  auto* ell_opt = app.add_option("--ell", ell, "level parameter ell >= 1 (not used by char)");
  app.add_option("--weight", weight_strs, "comma-separated fundamental coordinates; repeatable")
      ->allow_extra_args(false);
  app.add_option("--index", index, "simple reflection index (1-based)");
  app.add_option("--bound", bound, "coordinate bound for sweeps");
  app.add_option("--depth", depth, "truncation depth for graded-char");
  app.add_option("--fuel", fuel, "rewrite-step budget (default: FOCK_FUEL or 1000000)");
  app.add_flag("--json", json, "emit JSON");
  app.add_flag("--monomials", monomials, "char: include the full monomial expansion");
  app.add_flag("--check", check, "gh: run the identity check instead of printing coefficients");
  app.add_option("--claims", claims, "sweep: comma list of steinberg,cs,linkage,modt,frobenius,gh");
  app.add_option("--jobs", jobs, "sweep: worker threads");
  for (const auto& c : kCommands)
    app.add_subcommand(c.name, c.help);

  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(std::string(e.what()) + "\n" + app.help());
  }

  CliInvocation inv;
  inv.command = app.get_subcommands().front()->get_name();
  try {
    inv.type = CartanType::parse(type_str);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  if (ell_opt->count() == 0) {
    if (inv.command != "char")
      throw UsageError("--ell is required for '" + inv.command + "'");
    ell = 1;
  }
  if (ell < 1)
    throw UsageError("--ell must be >= 1, got " + std::to_string(ell));
  inv.ell = ell;

  const CommandSpec& spec = spec_for(inv.command);
  if (weight_strs.size() < spec.min_weights || weight_strs.size() > spec.max_weights)
    throw UsageError("command '" + inv.command + "' takes " + std::to_string(spec.min_weights) +
                     (spec.min_weights == spec.max_weights ? "" : "-" + std::to_string(spec.max_weights)) +
                     " --weight arguments, got " + std::to_string(weight_strs.size()));
  for (const auto& w : weight_strs) {
    try {
      inv.weights.push_back(parse_weight(w, static_cast<std::size_t>(inv.type.rank)));
    } catch (const PreconditionError& e) {
      throw UsageError(e.what());
    }
  }
  if (index != 0) {
    if (index < 1 || index > inv.type.rank)
      throw UsageError("--index must be in 1.." + std::to_string(inv.type.rank));
    inv.index = index;
  }
  if (bound < 0)
    throw UsageError("--bound must be >= 0");
  if (depth < 0)
    throw UsageError("--depth must be >= 0");
  if (jobs < 1)
    throw UsageError("--jobs must be >= 1");
  inv.bound = bound;
  inv.depth = depth;
  inv.fuel = fuel > 0 ? fuel : default_fuel();
  inv.json = json;
  inv.monomials = monomials;
  inv.check = check;
  inv.jobs = jobs;
  try {
    inv.claims = parse_claims(claims);
  } catch (const PreconditionError& e) {
    throw UsageError(e.what());
  }
  return inv;
}

int run(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
  try {
    FockConfig cfg{std::make_shared<const RootSystem>(inv.type), inv.ell, inv.fuel};
    FockSpace space(cfg);
    const RootSystem& rs = space.roots();
    const std::string& cmd = inv.command;

    auto print_element = [&](const FockElement& x) {
      if (inv.json)
        out << dump_line(fock_to_json(space, x)) << '\n';
      else
        out << x.to_string() << '\n';
    };
    auto all_indices = [&]() {
      std::vector<int> idx;
      if (inv.index)
        idx.push_back(*inv.index);
      else
        for (int i = 1; i <= static_cast<int>(rs.rank()); ++i)
          idx.push_back(i);
      return idx;
    };

    std::vector<VerificationReport> reports;
    if (cmd == "straighten") {
      print_element(space.straighten(inv.weights[0]));
    } else if (cmd == "bar") {
      print_element(space.bar(space.straighten(inv.weights[0])));
    } else if (cmd == "cb") {
      print_element(space.canonical_basis(inv.weights[0]));
    } else if (cmd == "act") {
      const Character& s = space.characters().weyl_character(inv.weights[0]);
      print_element(space.act_character(s, space.straighten(inv.weights[1])));
    } else if (cmd == "char") {
      const Character& s = space.characters().weyl_character(inv.weights[0]);
      if (inv.json) {
        out << dump_line(character_to_json(rs, s, inv.monomials)) << '\n';
      } else {
        out << "dim " << weyl_dimension(rs, s.highest) << '\n';
        for (const auto& [mu, m] : s.dom_mults)
          out << mu.to_string() << ": " << m << '\n';
        if (inv.monomials)
          out << monomial_text(monomial_expand(rs, s)) << '\n';
      }
    } else if (cmd == "steinberg") {
      reports.push_back(verify_steinberg(space, inv.weights[0]));
    } else if (cmd == "cs") {
      reports.push_back(casselman_shalika_check(space, inv.weights[0]));
    } else if (cmd == "linkage") {
      for (int i : all_indices())
        reports.push_back(verify_linkage_rho(space, inv.weights[0], i));
    } else if (cmd == "modt") {
      for (int i : all_indices())
        reports.push_back(mod_t_cancellation_check(space, inv.weights[0], inv.weights[1], i));
    } else if (cmd == "frobenius") {
      reports.push_back(frobenius_check(space, inv.weights[0]));
    } else if (cmd == "llt") {
      const LaurentPoly p = llt_coefficient(space, inv.weights[0], inv.weights[1]);
      if (inv.json)
        out << dump_line({{"type", rs.type().to_string()},
                          {"ell", inv.ell},
                          {"lambda", weight_to_json(inv.weights[0])},
                          {"mu", weight_to_json(inv.weights[1])},
                          {"coeff", laurent_to_json(p)}})
            << '\n';
      else
        out << p.to_string() << '\n';
    } else if (cmd == "gh") {
      if (inv.check) {
        reports.push_back(gh_identity_check(space, inv.weights[0]));
      } else {
        const Weight nu = inv.weights.size() > 1 ? inv.weights[1] : Weight::zero(rs.rank());
        print_element(FockElement(gh_coefficients(space, inv.weights[0], nu)));
      }
    } else if (cmd == "graded-char") {
      const GradedCharacter g = affine_graded_character(space, inv.weights[0], inv.depth);
      if (inv.json) {
        out << dump_line(graded_to_json(space, inv.weights[0], g)) << '\n';
      } else {
        for (const auto& [d, m] : g.layers)
          out << "q^-" << d << ": " << monomial_text(m) << '\n';
      }
    } else if (cmd == "sweep") {
      reports = sweep(cfg, inv.claims, inv.bound, inv.jobs);
    } else {
      err << "unknown command '" << cmd << "'\n";
      return kUsage;
    }

    if (is_verification(cmd) || (cmd == "gh" && inv.check)) {
      emit_reports(reports, inv.json, out);
      return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; }) ? kOk : kFailed;
    }
    return kOk;
  } catch (const FuelExhausted& e) {
    err << "error: " << e.what() << '\n';
    return kFuel;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const NonInvariantError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InconsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kFailed;
  }
}

int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  CliInvocation inv;
  try {
    inv = parse_args(argv);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return run(inv, out, err);
}

} // namespace fockspace::cli
