#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockspace/rootdata.hpp"
#include "fockspace/theorems.hpp"

namespace fockspace::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2, kFuel = 3 };

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// --help was given; what() is the help text.
class HelpRequested : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CliInvocation {
  std::string command;
  CartanType type;
  std::int64_t ell = 1;
  std::vector<Weight> weights;
  std::optional<int> index;
  std::int64_t bound = 4;
  int depth = 2;
  std::uint64_t fuel = 0;
  bool json = false;
  bool monomials = false;
  bool check = false;
  std::vector<Claim> claims;
  unsigned jobs = 1;
};

/// Fuel from FOCK_FUEL, falling back to the library default.
std::uint64_t default_fuel();

/// Validates argv (without the program name). Throws UsageError or HelpRequested.
CliInvocation parse_args(const std::vector<std::string>& argv);

int run(const CliInvocation& inv, std::ostream& out, std::ostream& err);

/// parse_args + run with exit-code mapping.
int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

} // namespace fockspace::cli
