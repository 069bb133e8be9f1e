#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "fockspace/errors.hpp"
#include "fockspace/rootdata.hpp"
#include "oracles.hpp"

using namespace fockspace;

namespace {

RootSystem rs(const char* t) { return RootSystem(CartanType::parse(t)); }

const char* const kAllTypes[] = {"A1", "A2", "A3", "A4", "A8", "B2", "B3", "B4", "B8", "C2", "C3", "C4", "C8",
                                 "D3", "D4", "D5", "D8", "E6", "E7", "E8", "F4", "G2"};

// Number of positive roots, dual Coxeter number and det of the Cartan matrix.
struct TableRow {
  const char* type;
  std::size_t positive_roots;
  int dual_coxeter;
  std::int64_t det;
};

const TableRow kTable[] = {
    {"A1", 1, 2, 2},   {"A2", 3, 3, 3},    {"A3", 6, 4, 4},    {"A4", 10, 5, 5},  {"A8", 36, 9, 9},
    {"B2", 4, 3, 2},   {"B3", 9, 5, 2},    {"B4", 16, 7, 2},   {"B8", 64, 15, 2}, {"C2", 4, 3, 2},
    {"C3", 9, 4, 2},   {"C4", 16, 5, 2},   {"C8", 64, 9, 2},   {"D3", 6, 4, 4},   {"D4", 12, 6, 4},
    {"D5", 20, 8, 4},  {"D8", 56, 14, 4},  {"E6", 36, 12, 3},  {"E7", 63, 18, 2}, {"E8", 120, 30, 1},
    {"F4", 24, 9, 1},  {"G2", 6, 4, 1},
};

std::size_t weyl_order(const RootSystem& r) {
  std::vector<std::int64_t> c(r.rank(), 1);
  return r.orbit(Weight(c)).size();
}

} // namespace

TEST_CASE("Cartan types parse and validate") {
  CHECK(CartanType::parse("A1").to_string() == "A1");
  CHECK(CartanType::parse("g2") == CartanType{'G', 2});
  for (const char* bad : {"", "A", "A0", "B1", "C1", "D2", "E5", "E9", "F3", "G3", "X2", "A-1", "A2x", "A9", "B9"})
    CHECK_THROWS_AS(CartanType::parse(bad), InvalidCartanType);
  CHECK_THROWS_AS(CartanType::parse("Q4"), PreconditionError);
}

TEST_CASE("Cartan matrices in Bourbaki numbering") {
  CHECK(rs("A1").cartan_matrix() == IntMatrix{{2}});
  CHECK(rs("A2").cartan_matrix() == IntMatrix{{2, -1}, {-1, 2}});
  // alpha_2 short in B2, long in C2, alpha_1 short in G2
  CHECK(rs("B2").cartan_matrix() == IntMatrix{{2, -1}, {-2, 2}});
  CHECK(rs("C2").cartan_matrix() == IntMatrix{{2, -2}, {-1, 2}});
  CHECK(rs("G2").cartan_matrix() == IntMatrix{{2, -3}, {-1, 2}});
  CHECK(rs("F4").cartan_matrix() == IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}});
  CHECK(rs("D4").cartan_matrix() == IntMatrix{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
  const IntMatrix e6 = rs("E6").cartan_matrix();
  CHECK(e6[0][2] == -1);
  CHECK(e6[1][3] == -1);
  CHECK(e6[1][2] == 0);
  CHECK(e6[4][5] == -1);
}

TEST_CASE("textbook table of root counts, dual Coxeter numbers, determinants") {
  for (const auto& row : kTable) {
    CAPTURE(row.type);
    RootSystem r = rs(row.type);
    CHECK(r.num_positive_roots() == row.positive_roots);
    CHECK(r.dual_coxeter() == row.dual_coxeter);
    CHECK(r.cartan_det() == row.det);
    CHECK(r.w0_word().size() == row.positive_roots);
  }
}

TEST_CASE("rank one and two examples") {
  RootSystem a1 = rs("A1");
  CHECK(a1.num_positive_roots() == 1);
  CHECK(a1.dual_coxeter() == 2);
  CHECK(a1.w0_word() == std::vector<int>{1});
  CHECK(rs("A2").num_positive_roots() == 3);
  CHECK(rs("A2").dual_coxeter() == 3);
  CHECK(rs("G2").num_positive_roots() == 6);
  CHECK(rs("G2").dual_coxeter() == 4);
}

TEST_CASE("Weyl group orders through the orbit of rho") {
  CHECK(weyl_order(rs("A1")) == 2);
  CHECK(weyl_order(rs("A2")) == 6);
  CHECK(weyl_order(rs("A3")) == 24);
  CHECK(weyl_order(rs("B2")) == 8);
  CHECK(weyl_order(rs("B3")) == 48);
  CHECK(weyl_order(rs("C3")) == 48);
  CHECK(weyl_order(rs("D4")) == 192);
  CHECK(weyl_order(rs("G2")) == 12);
  CHECK(weyl_order(rs("F4")) == 1152);
}

TEST_CASE("positive roots and coroots agree with an independent closure") {
  for (const char* t : kAllTypes) {
    CAPTURE(t);
    RootSystem r = rs(t);
    oracle::Roots o = oracle::make_roots(r.cartan_matrix());
    std::set<RootVector> roots(r.positive_roots().begin(), r.positive_roots().end());
    std::set<RootVector> coroots(r.positive_coroots().begin(), r.positive_coroots().end());
    CHECK(roots == std::set<RootVector>(o.pos_roots.begin(), o.pos_roots.end()));
    CHECK(coroots == std::set<RootVector>(o.pos_coroots.begin(), o.pos_coroots.end()));
    for (std::size_t k = 0; k < r.num_positive_roots(); ++k)
      CHECK(r.positive_root_weights()[k] == r.root_to_weight(r.positive_roots()[k]));
    // sorted by height
    for (std::size_t k = 1; k < r.num_positive_roots(); ++k) {
      const auto& a = r.positive_roots()[k - 1];
      const auto& b = r.positive_roots()[k];
      CHECK(std::accumulate(a.begin(), a.end(), 0) <= std::accumulate(b.begin(), b.end(), 0));
    }
  }
}

TEST_CASE("symmetrizers, rho, w0 and the highest coroot") {
  for (const char* t : kAllTypes) {
    CAPTURE(t);
    RootSystem r = rs(t);
    const auto& a = r.cartan_matrix();
    const auto& d = r.symmetrizers();
    for (std::size_t i = 0; i < r.rank(); ++i)
      for (std::size_t j = 0; j < r.rank(); ++j)
        CHECK(d[i] * a[i][j] == d[j] * a[j][i]);
    CHECK(*std::min_element(d.begin(), d.end()) == 1);

    for (std::size_t i = 0; i < r.rank(); ++i)
      CHECK(r.rho()[i] == 1);
    CHECK(r.weyl_act(r.w0_word(), r.rho()) == -r.rho());
    CHECK(r.dual_coxeter() == r.pairing(r.rho(), r.highest_short_coroot()) + 1);
    // phi^vee is the coroot of the highest root theta.
    const auto& coroots = r.positive_coroots();
    CHECK(std::find(coroots.begin(), coroots.end(), r.highest_short_coroot()) != coroots.end());
    CHECK(r.pairing(r.positive_root_weights().back(), r.highest_short_coroot()) == 2);
  }
  CHECK(rs("A2").highest_short_coroot() == RootVector{1, 1});
  CHECK(rs("B2").highest_short_coroot() == RootVector{1, 1});
  CHECK(rs("C2").highest_short_coroot() == RootVector{1, 1});
  CHECK(rs("G2").highest_short_coroot() == RootVector{1, 2});
}

TEST_CASE("pairing") {
  RootSystem a2 = rs("A2");
  CHECK(a2.pairing(a2.rho(), a2.highest_short_coroot()) == 2);
  CHECK(a2.pairing(Weight{0, 0}, RootVector{3, 7}) == 0);
  CHECK(rs("A1").pairing(Weight{10}, RootVector{1}) == 10);
  CHECK(rs("G2").pairing(Weight{0, 0}, RootVector{1, 1}) == 0);
}

TEST_CASE("dot actions") {
  RootSystem a1 = rs("A1");
  CHECK(a1.simple_dot(1, Weight{2}) == Weight{-4});
  CHECK(a1.simple_dot(1, Weight{10}) == Weight{-12});
  CHECK(a1.weyl_dot(a1.w0_word(), Weight{10}) == Weight{-12});
  CHECK(a1.weyl_dot(std::vector<int>{}, Weight{7}) == Weight{7});
  RootSystem a2 = rs("A2");
  CHECK(a2.weyl_dot(a2.w0_word(), Weight{0, 0}) == Weight{-2, -2});
  for (const char* t : {"A1", "A2", "B2", "G2", "D4"}) {
    RootSystem r = rs(t);
    const Weight m = -r.rho();
    for (int i = 1; i <= static_cast<int>(r.rank()); ++i)
      CHECK(r.simple_dot(i, m) == m);
  }
  // the word acts right to left
  CHECK(a2.weyl_dot(std::vector<int>{1, 2}, Weight{0, 0}) ==
        a2.simple_dot(1, a2.simple_dot(2, Weight{0, 0})));
  CHECK_THROWS_AS(a2.simple_dot(3, Weight{0, 0}), PreconditionError);
  CHECK_THROWS_AS(a2.simple_dot(0, Weight{0, 0}), PreconditionError);
}

TEST_CASE("affine dot action") {
  RootSystem a1 = rs("A1");
  CHECK(a1.affine_dot({Weight{0}, {}}, Weight{3}, 5) == Weight{3});
  CHECK(a1.affine_dot({Weight{1}, {}}, -a1.rho(), 5) == Weight{-6});
  CHECK(a1.affine_dot({Weight{1}, {1}}, Weight{0}, 5) == Weight{-7});
  RootSystem b2 = rs("B2");
  CHECK(b2.affine_dot({Weight{0, 0}, {}}, Weight{4, -3}, 7) == Weight{4, -3});
  CHECK(b2.affine_dot({Weight{1, 2}, {2}}, Weight{1, 1}, 3) == b2.simple_dot(2, Weight{1, 1}) - 3 * Weight{1, 2});
}

TEST_CASE("star") {
  CHECK(rs("A1").star(Weight{5}) == Weight{5});
  CHECK(rs("A2").star(Weight{1, 0}) == Weight{0, 1});
  CHECK(rs("A3").star(Weight{1, 2, 3}) == Weight{3, 2, 1});
  CHECK(rs("D5").star(Weight{1, 2, 3, 4, 5}) == Weight{1, 2, 3, 5, 4});
  CHECK(rs("D4").star(Weight{1, 2, 3, 4}) == Weight{1, 2, 3, 4});
  CHECK(rs("E6").star(Weight{1, 2, 3, 4, 5, 6}) == Weight{6, 2, 5, 4, 3, 1});
  CHECK(rs("B3").star(Weight{1, 2, 3}) == Weight{1, 2, 3});
  for (const char* t : kAllTypes)
    CHECK(rs(t).star(Weight::zero(rs(t).rank())).is_zero());
}

TEST_CASE("dominance and walls") {
  RootSystem a1 = rs("A1");
  RootSystem a2 = rs("A2");
  CHECK(a2.is_dominant(a2.rho()));
  CHECK_FALSE(a2.is_dominant(-a2.rho()));
  CHECK(a1.is_dominant(Weight{9}));
  CHECK(a1.is_dominant(Weight{0}));
  CHECK_FALSE(a1.is_dominant(Weight{-1}));

  CHECK(a1.dominance_leq(Weight{8}, Weight{10}));
  CHECK_FALSE(a1.dominance_leq(Weight{9}, Weight{10}));
  CHECK_FALSE(a1.dominance_leq(Weight{10}, Weight{8}));
  CHECK(a2.dominance_leq(Weight{1, 1}, Weight{1, 1}));
  CHECK_FALSE(a2.dominance_leq(Weight{1, 0}, Weight{0, 1}));
  CHECK_FALSE(a2.dominance_leq(Weight{0, 1}, Weight{1, 0}));
  CHECK(a2.dominance_leq(Weight{0, 0}, Weight{1, 1}));

  CHECK(a1.n_lambda(Weight{9}, 5) == 1);
  CHECK(a1.n_lambda(Weight{10}, 5) == 0);
  for (const char* t : kAllTypes) {
    RootSystem r = rs(t);
    CHECK(r.n_lambda(-r.rho(), 5) == static_cast<int>(r.num_positive_roots()));
  }
}

TEST_CASE("dominance agrees with exact rational solve") {
  std::mt19937_64 rng(3);
  for (const char* t : {"A2", "A3", "B2", "C3", "G2", "D4", "F4"}) {
    CAPTURE(t);
    RootSystem r = rs(t);
    oracle::Roots o = oracle::make_roots(r.cartan_matrix());
    for (int k = 0; k < 200; ++k) {
      Weight a = oracle::random_weight(rng, r.rank(), -4, 4);
      Weight b = oracle::random_weight(rng, r.rank(), -4, 4);
      CHECK(r.dominance_leq(a, b) == oracle::leq(o, a.to_vector(), b.to_vector()));
      CHECK(r.dominance_leq(a, a));
    }
  }
}

TEST_CASE("lambda_one and restricted decomposition") {
  RootSystem a1 = rs("A1");
  CHECK(a1.lambda_one(Weight{10}, 1, 5) == Weight{8});
  CHECK(a1.lambda_one(Weight{8}, 1, 5) == Weight{0});
  CHECK(a1.lambda_one(Weight{9}, 1, 5) == Weight{9});
  CHECK(a1.lambda_one(Weight{14}, 1, 5) == Weight{14});
  CHECK_THROWS_AS(a1.lambda_one(Weight{2}, 1, 5), PreconditionError);

  auto [l0, l1] = a1.decompose_restricted(Weight{8}, 5);
  CHECK(l0 == Weight{3});
  CHECK(l1 == Weight{1});
  std::tie(l0, l1) = a1.decompose_restricted(Weight{10}, 5);
  CHECK(l0 == Weight{0});
  CHECK(l1 == Weight{2});
  RootSystem b2 = rs("B2");
  std::tie(l0, l1) = b2.decompose_restricted(Weight{2, 1}, 3);
  CHECK(l0 == Weight{2, 1});
  CHECK(l1 == Weight{0, 0});
  std::tie(l0, l1) = b2.decompose_restricted(Weight{7, 3}, 3);
  CHECK(l0 == Weight{1, 0});
  CHECK(l1 == Weight{2, 1});
  CHECK_THROWS_AS(b2.decompose_restricted(Weight{-1, 3}, 3), PreconditionError);
}

TEST_CASE("dominant weights below") {
  RootSystem a1 = rs("A1");
  CHECK(a1.dominant_below(Weight{4}) == std::vector<Weight>{Weight{4}, Weight{2}, Weight{0}});
  CHECK(a1.dominant_below(Weight{0}) == std::vector<Weight>{Weight{0}});
  CHECK(rs("A2").dominant_below(Weight{1, 1}) == std::vector<Weight>{Weight{1, 1}, Weight{0, 0}});
  CHECK(rs("A2").dominant_below(Weight{0, 0}) == std::vector<Weight>{Weight{0, 0}});
  CHECK(rs("E8").dominant_below(Weight{0, 0, 0, 0, 0, 0, 0, 1}).size() == 2);

  // Exhaustive comparison against filtering a box of dominant weights.
  for (const char* t : {"A2", "B2", "G2", "A3", "C3"}) {
    CAPTURE(t);
    RootSystem r = rs(t);
    oracle::Roots o = oracle::make_roots(r.cartan_matrix());
    std::mt19937_64 rng(5);
    for (int k = 0; k < 15; ++k) {
      Weight lambda = oracle::random_weight(rng, r.rank(), 0, 4);
      auto below = r.dominant_below(lambda);
      std::set<Weight> got(below.begin(), below.end());
      CHECK(got.size() == below.size());
      CHECK(below.front() == lambda);
      std::set<Weight> want;
      // The box is generous: dominant mu <= lambda is far smaller.
      std::int64_t cap = 0;
      for (std::size_t i = 0; i < r.rank(); ++i)
        cap += lambda[i];
      std::vector<std::int64_t> c(r.rank(), 0);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == r.rank()) {
          if (oracle::leq(o, c, lambda.to_vector()))
            want.insert(Weight(c));
          return;
        }
        for (std::int64_t x = 0; x <= 3 * cap; ++x) {
          c[i] = x;
          rec(i + 1);
        }
      };
      rec(0);
      CHECK(got == want);
      for (std::size_t q = 1; q < below.size(); ++q)
        CHECK(r.scaled_height(lambda - below[q - 1]) <= r.scaled_height(lambda - below[q]));
    }
  }
}

TEST_CASE("alcove membership") {
  RootSystem a1 = rs("A1");
  CHECK(a1.in_alcove(-a1.rho(), 5));
  CHECK_FALSE(a1.in_alcove(Weight{0}, 5));
  CHECK(a1.in_alcove(Weight{-6}, 5));
  CHECK_FALSE(a1.in_alcove(Weight{-7}, 5));
  RootSystem a2 = rs("A2");
  CHECK(a2.in_alcove(-a2.rho(), 1));
  CHECK(a2.in_alcove(Weight{-2, -1}, 2));
  CHECK_FALSE(a2.in_alcove(Weight{-2, -1}, 1));
  CHECK_FALSE(a2.in_alcove(Weight{-1, 0}, 3));
}

TEST_CASE("random invariants") {
  std::mt19937_64 rng(17);
  for (const char* t : {"A1", "A2", "A3", "B2", "C3", "G2", "D4", "F4"}) {
    CAPTURE(t);
    RootSystem r = rs(t);
    for (int k = 0; k < 100; ++k) {
      Weight lambda = oracle::random_weight(rng, r.rank(), -9, 9);
      for (int i = 1; i <= static_cast<int>(r.rank()); ++i)
        CHECK(r.simple_dot(i, r.simple_dot(i, lambda)) == lambda);
      CHECK(r.weyl_dot(r.w0_word(), r.weyl_dot(r.w0_word(), lambda)) == lambda);
      CHECK(r.star(r.star(lambda)) == lambda);
      for (std::int64_t ell : {2, 3, 5}) {
        const int nl = r.n_lambda(lambda, ell);
        for (int i = 1; i <= static_cast<int>(r.rank()); ++i)
          CHECK(r.n_lambda(r.simple_dot(i, lambda), ell) == nl);
      }
      Weight dom = r.dominant_representative(lambda);
      CHECK(r.is_dominant(dom));
      for (std::size_t i = 0; i < r.rank(); ++i)
        CHECK(dom[i] >= 0);
      CHECK(r.star(dom)[0] >= 0);
      auto orb = r.orbit(lambda);
      CHECK(std::find(orb.begin(), orb.end(), lambda) != orb.end());
      CHECK(std::find(orb.begin(), orb.end(), dom) != orb.end());
      CHECK(r.scaled_form(lambda, dom) == r.scaled_form(dom, lambda));
      for (int i = 1; i <= static_cast<int>(r.rank()); ++i)
        CHECK(r.scaled_form(r.simple_reflect(i, lambda), r.simple_reflect(i, dom)) == r.scaled_form(lambda, dom));
    }
  }
}

TEST_CASE("weights parse and print") {
  CHECK(parse_weight("4,-2,0", 3) == Weight{4, -2, 0});
  CHECK(parse_weight(" 3 , +1", 2) == Weight{3, 1});
  CHECK(parse_weight("-12", 1) == Weight{-12});
  CHECK(Weight{4, 2}.to_string() == "4,2");
  CHECK(Weight{-3}.to_string() == "-3");
  for (const char* bad : {"", "1,", ",1", "1,,2", "a,1", "1.5,2", "1 2"})
    CHECK_THROWS_AS(parse_weight(bad, 2), PreconditionError);
  CHECK_THROWS_AS(parse_weight("1,2,3", 2), PreconditionError);
  CHECK(Weight::fundamental(3, 2) == Weight{0, 1, 0});
  CHECK(3 * Weight{1, -2} == Weight{3, -6});
  CHECK(WeightHash{}(Weight{1, 2}) == WeightHash{}(Weight{1, 2}));
  CHECK(Weight{1, 2} < Weight{2, 0});
}
