#include "fockspace/rootdata.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include <boost/rational.hpp>

#include "fockspace/errors.hpp"

namespace fockspace {

// ---------------------------------------------------------------------------
// Weight

Weight::Weight(std::span<const std::int64_t> coords) : rank_(coords.size()) {
  if (coords.size() > kMaxRank)
    throw PreconditionError("weight rank exceeds " + std::to_string(kMaxRank));
  std::copy(coords.begin(), coords.end(), c_.begin());
}

Weight::Weight(std::initializer_list<std::int64_t> coords)
    : Weight(std::span<const std::int64_t>(coords.begin(), coords.size())) {}

Weight Weight::zero(std::size_t rank) {
  std::vector<std::int64_t> z(rank, 0);
  return Weight(z);
}

Weight Weight::fundamental(std::size_t rank, int index) {
  Weight w = zero(rank);
  w[static_cast<std::size_t>(index - 1)] = 1;
  return w;
}

bool Weight::is_zero() const {
  return std::all_of(c_.begin(), c_.begin() + rank_, [](std::int64_t x) { return x == 0; });
}

Weight& Weight::operator+=(const Weight& o) {
  for (std::size_t i = 0; i < rank_; ++i)
    c_[i] += o.c_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  for (std::size_t i = 0; i < rank_; ++i)
    c_[i] -= o.c_[i];
  return *this;
}

Weight operator*(std::int64_t k, Weight a) {
  for (std::size_t i = 0; i < a.rank_; ++i)
    a.c_[i] *= k;
  return a;
}

Weight Weight::operator-() const { return -1 * *this; }

std::string Weight::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (i)
      s += ',';
    s += std::to_string(c_[i]);
  }
  return s;
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto x : w.coords()) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

Weight parse_weight(std::string_view text, std::size_t rank) {
  std::vector<std::int64_t> coords;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos)
      comma = text.size();
    auto field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ')
      field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ')
      field.remove_suffix(1);
    std::int64_t value = 0;
    if (!field.empty() && field.front() == '+')
      field.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
      throw PreconditionError("malformed weight '" + std::string(text) + "'");
    coords.push_back(value);
    pos = comma + 1;
  }
  if (coords.size() != rank)
    throw PreconditionError("weight '" + std::string(text) + "' has " + std::to_string(coords.size()) +
                            " coordinates, expected " + std::to_string(rank));
  return Weight(coords);
}

// ---------------------------------------------------------------------------
// CartanType

void CartanType::validate() const {
  bool ok = false;
  switch (series) {
  case 'A':
    ok = rank >= 1;
    break;
  case 'B':
  case 'C':
    ok = rank >= 2;
    break;
  case 'D':
    ok = rank >= 3;
    break;
  case 'E':
    ok = rank >= 6 && rank <= 8;
    break;
  case 'F':
    ok = rank == 4;
    break;
  case 'G':
    ok = rank == 2;
    break;
  default:
    break;
  }
  if (ok && static_cast<std::size_t>(rank) > kMaxRank)
    ok = false;
  if (!ok)
    throw InvalidCartanType("invalid Cartan type " + to_string());
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2)
    throw InvalidCartanType("invalid Cartan type '" + std::string(text) + "'");
  CartanType ct;
  ct.series = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), ct.rank);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw InvalidCartanType("invalid Cartan type '" + std::string(text) + "'");
  ct.validate();
  return ct;
}

std::string CartanType::to_string() const { return std::string(1, series) + std::to_string(rank); }

IntMatrix cartan_matrix_for(const CartanType& type) {
  type.validate();
  const auto n = static_cast<std::size_t>(type.rank);
  IntMatrix a(n, std::vector<std::int64_t>(n, 0));
  auto link = [&](std::size_t i, std::size_t j) { // 1-based simply-laced edge
    a[i - 1][j - 1] = -1;
    a[j - 1][i - 1] = -1;
  };
  for (std::size_t i = 0; i < n; ++i)
    a[i][i] = 2;
  switch (type.series) {
  case 'A':
    for (std::size_t i = 1; i < n; ++i)
      link(i, i + 1);
    break;
  case 'B':
    for (std::size_t i = 1; i < n; ++i)
      link(i, i + 1);
    a[n - 1][n - 2] = -2; // alpha_n short
    break;
  case 'C':
    for (std::size_t i = 1; i < n; ++i)
      link(i, i + 1);
    a[n - 2][n - 1] = -2; // alpha_n long
    break;
  case 'D':
    for (std::size_t i = 1; i + 1 < n; ++i)
      link(i, i + 1);
    link(n - 2, n);
    break;
  case 'E':
    link(1, 3);
    link(3, 4);
    link(4, 5);
    link(5, 6);
    if (n >= 7)
      link(6, 7);
    if (n >= 8)
      link(7, 8);
    link(2, 4);
    break;
  case 'F':
    link(1, 2);
    link(2, 3);
    link(3, 4);
    a[2][1] = -2; // alpha_3, alpha_4 short
    break;
  case 'G':
    a[0][1] = -3; // alpha_1 short
    a[1][0] = -1;
    break;
  default:
    break;
  }
  return a;
}

// ---------------------------------------------------------------------------
// RootSystem construction

namespace {

using Rational = boost::rational<std::int64_t>;

std::vector<std::int64_t> compute_symmetrizers(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<Rational> d(n, Rational(0));
  d[0] = 1;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    auto i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || a[i][j] == 0 || d[j] != Rational(0))
        continue;
      d[j] = d[i] * Rational(a[i][j], a[j][i]);
      stack.push_back(j);
    }
  }
  Rational smallest = *std::min_element(d.begin(), d.end());
  std::vector<std::int64_t> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Rational r = d[i] / smallest;
    out[i] = boost::rational_cast<std::int64_t>(r);
  }
  return out;
}

// Returns det and adj = det * A^{-1} by Gauss-Jordan over the rationals.
std::pair<std::int64_t, IntMatrix> scaled_inverse(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = a[i][j];
    m[i][n + i] = 1;
  }
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == Rational(0))
      ++piv;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    Rational p = m[col][col];
    det *= p;
    for (auto& x : m[col])
      x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == Rational(0))
        continue;
      Rational f = m[r][col];
      for (std::size_t k = 0; k < 2 * n; ++k)
        m[r][k] -= f * m[col][k];
    }
  }
  const auto d = boost::rational_cast<std::int64_t>(det);
  IntMatrix adj(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      adj[i][j] = boost::rational_cast<std::int64_t>(m[i][n + j] * d);
  return {d, adj};
}

// Positive roots of the system with Cartan matrix a, by closing the simple
// roots under simple reflections and keeping positive results.
std::vector<RootVector> close_positive_roots(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::set<RootVector> seen;
  std::vector<RootVector> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    RootVector beta = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t p = 0;
      for (std::size_t j = 0; j < n; ++j)
        p += beta[j] * a[i][j];
      if (p == 0)
        continue;
      RootVector r = beta;
      r[i] -= p;
      if (std::any_of(r.begin(), r.end(), [](std::int64_t x) { return x < 0; }))
        continue;
      if (seen.insert(r).second)
        frontier.push_back(r);
    }
  }
  std::vector<RootVector> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const RootVector& x, const RootVector& y) {
    auto hx = std::accumulate(x.begin(), x.end(), std::int64_t{0});
    auto hy = std::accumulate(y.begin(), y.end(), std::int64_t{0});
    if (hx != hy)
      return hx < hy;
    return x > y;
  });
  return out;
}

} // namespace

RootSystem::RootSystem(CartanType type)
    : type_(type), rank_(static_cast<std::size_t>(type.rank)), cartan_(cartan_matrix_for(type)) {
  sym_ = compute_symmetrizers(cartan_);
  std::tie(det_, adj_) = scaled_inverse(cartan_);

  IntMatrix transpose(rank_, std::vector<std::int64_t>(rank_));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      transpose[i][j] = cartan_[j][i];
  pos_roots_ = close_positive_roots(cartan_);
  pos_coroots_ = close_positive_roots(transpose);

  for (std::size_t j = 0; j < rank_; ++j) {
    RootVector e(rank_, 0);
    e[j] = 1;
    simple_roots_.push_back(root_to_weight(e));
  }
  for (const auto& r : pos_roots_)
    pos_root_wts_.push_back(root_to_weight(r));

  rho_ = Weight(std::vector<std::int64_t>(rank_, 1));

  // Longest element: walk rho down to -rho through simple reflections.
  Weight mu = rho_;
  for (;;) {
    std::size_t i = 0;
    while (i < rank_ && mu[i] <= 0)
      ++i;
    if (i == rank_)
      break;
    w0_word_.push_back(static_cast<int>(i + 1));
    mu = simple_reflect(static_cast<int>(i + 1), mu);
  }

  // phi^vee is the coroot of the highest root phi = sum c_j alpha_j:
  // phi^vee = sum_j c_j d_j / d_phi alpha_j^vee with d_phi = (phi, phi)/2.
  const RootVector& phi = pos_roots_.back();
  std::int64_t two_d_phi = 0;
  for (std::size_t j = 0; j < rank_; ++j)
    for (std::size_t k = 0; k < rank_; ++k)
      two_d_phi += phi[j] * phi[k] * sym_[j] * cartan_[j][k];
  const std::int64_t d_phi = two_d_phi / 2;
  phi_vee_.resize(rank_);
  for (std::size_t j = 0; j < rank_; ++j)
    phi_vee_[j] = phi[j] * sym_[j] / d_phi;
  dual_coxeter_ = static_cast<int>(pairing(rho_, phi_vee_) + 1);
}

const Weight& RootSystem::simple_root(int i) const {
  check_index(i);
  return simple_roots_[static_cast<std::size_t>(i - 1)];
}

Weight RootSystem::root_to_weight(const RootVector& c) const {
  Weight w = Weight::zero(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < rank_; ++j)
      s += cartan_[i][j] * c[j];
    w[i] = s;
  }
  return w;
}

RootVector RootSystem::scaled_root_coords(const Weight& lambda) const {
  RootVector c(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      c[i] += adj_[i][j] * lambda[j];
  return c;
}

std::int64_t RootSystem::scaled_height(const Weight& lambda) const {
  auto c = scaled_root_coords(lambda);
  return std::accumulate(c.begin(), c.end(), std::int64_t{0});
}

std::int64_t RootSystem::scaled_form(const Weight& lambda, const Weight& mu) const {
  auto c = scaled_root_coords(mu);
  std::int64_t s = 0;
  for (std::size_t j = 0; j < rank_; ++j)
    s += c[j] * sym_[j] * lambda[j];
  return s;
}

void RootSystem::check_index(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > rank_)
    throw PreconditionError("generator index " + std::to_string(i) + " out of range 1.." + std::to_string(rank_));
}

// ---------------------------------------------------------------------------
// Operations

std::int64_t RootSystem::pairing(const Weight& lambda, const RootVector& coroot) const {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank_; ++i)
    s += coroot[i] * lambda[i];
  return s;
}

Weight RootSystem::simple_reflect(int i, const Weight& lambda) const {
  const Weight& alpha = simple_root(i);
  return lambda - lambda[static_cast<std::size_t>(i - 1)] * alpha;
}

Weight RootSystem::simple_dot(int i, const Weight& lambda) const {
  const Weight& alpha = simple_root(i);
  return lambda - (lambda[static_cast<std::size_t>(i - 1)] + 1) * alpha;
}

Weight RootSystem::weyl_dot(std::span<const int> word, const Weight& lambda) const {
  Weight mu = lambda;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    mu = simple_dot(*it, mu);
  return mu;
}

Weight RootSystem::weyl_act(std::span<const int> word, const Weight& lambda) const {
  Weight mu = lambda;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    mu = simple_reflect(*it, mu);
  return mu;
}

Weight RootSystem::affine_dot(const AffineWeylElement& g, const Weight& lambda, std::int64_t ell) const {
  if (ell < 1)
    throw PreconditionError("ell must be >= 1");
  return weyl_dot(g.finite_part, lambda) - ell * g.translation;
}

Weight RootSystem::star(const Weight& mu) const { return -weyl_act(w0_word_, mu); }

bool RootSystem::is_dominant(const Weight& lambda) const {
  for (std::size_t i = 0; i < rank_; ++i)
    if (lambda[i] + 1 < 1)
      return false;
  return true;
}

bool RootSystem::dominance_leq(const Weight& mu, const Weight& lambda) const {
  auto c = scaled_root_coords(lambda - mu);
  return std::all_of(c.begin(), c.end(), [&](std::int64_t x) { return x >= 0 && x % det_ == 0; });
}

int RootSystem::n_lambda(const Weight& lambda, std::int64_t ell) const {
  if (ell < 1)
    throw PreconditionError("ell must be >= 1");
  const Weight shifted = lambda + rho_;
  int count = 0;
  for (const auto& cr : pos_coroots_)
    if (pairing(shifted, cr) % ell == 0)
      ++count;
  return count;
}

Weight RootSystem::lambda_one(const Weight& lambda, int i, std::int64_t ell) const {
  check_index(i);
  if (ell < 1)
    throw PreconditionError("ell must be >= 1");
  const std::int64_t p = lambda[static_cast<std::size_t>(i - 1)] + 1;
  if (p < ell)
    throw PreconditionError("lambda_one requires <lambda+rho, alpha_i^vee> >= ell");
  return lambda - (p % ell) * simple_root(i);
}

std::pair<Weight, Weight> RootSystem::decompose_restricted(const Weight& lambda, std::int64_t ell) const {
  if (ell < 1)
    throw PreconditionError("ell must be >= 1");
  if (!is_dominant(lambda))
    throw PreconditionError("decompose_restricted requires a dominant weight, got " + lambda.to_string());
  Weight l0 = Weight::zero(rank_);
  Weight l1 = Weight::zero(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    l0[i] = lambda[i] % ell;
    l1[i] = lambda[i] / ell;
  }
  return {l0, l1};
}

std::vector<Weight> RootSystem::dominant_below(const Weight& lambda) const {
  if (!is_dominant(lambda))
    throw PreconditionError("dominant_below requires a dominant weight, got " + lambda.to_string());
  // For dominant mu <= lambda, A^{-1} >= 0 entrywise gives
  // A^{-1}(lambda - mu) <= A^{-1} lambda, so the search box is finite.
  auto cap = scaled_root_coords(lambda);
  for (auto& x : cap)
    x /= det_;

  std::vector<Weight> out;
  std::unordered_set<Weight, WeightHash> visited;
  std::vector<std::pair<Weight, RootVector>> stack;
  stack.emplace_back(lambda, RootVector(rank_, 0));
  visited.insert(lambda);
  while (!stack.empty()) {
    auto [mu, depth] = std::move(stack.back());
    stack.pop_back();
    if (is_dominant(mu))
      out.push_back(mu);
    for (std::size_t i = 0; i < rank_; ++i) {
      if (depth[i] >= cap[i])
        continue;
      Weight next = mu - simple_roots_[i];
      if (!visited.insert(next).second)
        continue;
      RootVector d = depth;
      ++d[i];
      stack.emplace_back(next, std::move(d));
    }
  }
  std::sort(out.begin(), out.end(), [&](const Weight& x, const Weight& y) {
    auto hx = scaled_height(x);
    auto hy = scaled_height(y);
    if (hx != hy)
      return hx > hy;
    return x > y;
  });
  return out;
}

bool RootSystem::in_alcove(const Weight& nu, std::int64_t ell) const {
  if (pairing(nu, phi_vee_) < -ell - 1)
    return false;
  for (std::size_t i = 0; i < rank_; ++i)
    if (nu[i] > -1)
      return false;
  return true;
}

Weight RootSystem::dominant_representative(const Weight& mu) const {
  Weight w = mu;
  for (;;) {
    std::size_t i = 0;
    while (i < rank_ && w[i] >= 0)
      ++i;
    if (i == rank_)
      return w;
    w = simple_reflect(static_cast<int>(i + 1), w);
  }
}

std::vector<Weight> RootSystem::orbit(const Weight& mu) const {
  std::set<Weight> seen{mu};
  std::vector<Weight> frontier{mu};
  while (!frontier.empty()) {
    Weight w = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < rank_; ++i) {
      if (w[i] == 0)
        continue;
      Weight r = simple_reflect(static_cast<int>(i + 1), w);
      if (seen.insert(r).second)
        frontier.push_back(r);
    }
  }
  return {seen.begin(), seen.end()};
}

} // namespace fockspace
