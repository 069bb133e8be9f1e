#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "fockspace/laurent.hpp"
#include "oracles.hpp"

using fockspace::Integer;
using fockspace::LaurentPoly;
using fockspace::LpOp;

namespace {

const LaurentPoly v = LaurentPoly::v();
const LaurentPoly vinv = LaurentPoly::v(-1);

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 6), exp(-5, 5), coef(-4, 4);
  std::vector<std::pair<std::int64_t, Integer>> t;
  for (int k = len(rng); k > 0; --k)
    t.emplace_back(exp(rng), coef(rng));
  return LaurentPoly::from_terms(t);
}

} // namespace

TEST_CASE("arithmetic examples") {
  CHECK(lp_arith(v, vinv, LpOp::mul) == LaurentPoly(1));
  CHECK(lp_arith(v - 1, LaurentPoly(1), LpOp::add) == v);
  CHECK(lp_arith(v - vinv, v + vinv, LpOp::mul) == LaurentPoly::v(2) - LaurentPoly::v(-2));
  CHECK(lp_arith(v, v, LpOp::sub).is_zero());
}

TEST_CASE("bar examples") {
  CHECK(lp_bar(v) == vinv);
  CHECK(lp_bar(LaurentPoly(3)) == LaurentPoly(3));
  CHECK(lp_bar(v - vinv) == vinv - v);
}

TEST_CASE("positive part examples") {
  CHECK(lp_pos_part(LaurentPoly::v(3) - LaurentPoly::v(-3)) == LaurentPoly::v(3));
  CHECK(lp_pos_part(LaurentPoly(5)).is_zero());
  CHECK(lp_pos_part(-v + vinv) == -v);
}

TEST_CASE("evaluation at one") {
  CHECK(lp_eval_one(LaurentPoly::v(2) - v) == 0);
  CHECK(lp_eval_one(1 - v + LaurentPoly::v(2)) == 1);
  CHECK(lp_eval_one(LaurentPoly()) == 0);
}

TEST_CASE("normal form") {
  LaurentPoly p = LaurentPoly::from_terms({{3, 1}, {-2, 0}, {3, -1}, {0, 4}, {1, 0}});
  CHECK(p == LaurentPoly(4));
  CHECK(p.min_exponent() == 0);
  CHECK(p.max_exponent() == 0);
  CHECK(LaurentPoly::from_terms({{2, 1}, {2, -1}}).is_zero());
  CHECK(LaurentPoly::monomial(0, 7).is_zero());
  CHECK(LaurentPoly::monomial(0, 7) == LaurentPoly());

  LaurentPoly gap = LaurentPoly::v(4) + LaurentPoly::v(-4);
  auto terms = gap.terms();
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].first == -4);
  CHECK(terms[1].first == 4);
  CHECK(gap.coeff(0) == 0);
  CHECK(gap.coeff(9) == 0);
  CHECK((gap - LaurentPoly::v(4)).max_exponent() == -4);
}

TEST_CASE("text form") {
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly(1).to_string() == "1");
  CHECK(LaurentPoly(-3).to_string() == "-3");
  CHECK(v.to_string() == "v");
  CHECK((-vinv).to_string() == "-v^-1");
  CHECK((LaurentPoly::v(2) - 1).to_string() == "v^2 - 1");
  CHECK((LaurentPoly::v(3) - v).to_string() == "v^3 - v");
  CHECK((2 * LaurentPoly::v(4) + 2 * LaurentPoly::v(2)).to_string() == "2v^4 + 2v^2");
  CHECK((v - vinv).to_string() == "v - v^-1");
}

TEST_CASE("shift and vZ[v] membership") {
  CHECK((v - 1).shifted(2) == LaurentPoly::v(3) - LaurentPoly::v(2));
  CHECK(v.in_vZv());
  CHECK(LaurentPoly().in_vZv());
  CHECK_FALSE(LaurentPoly(1).in_vZv());
  CHECK_FALSE((v + vinv).in_vZv());
}

TEST_CASE("arbitrary precision coefficients") {
  const Integer big = Integer(1) << 200;
  LaurentPoly p = LaurentPoly::monomial(big, 1) + 1;
  LaurentPoly sq = p * p;
  CHECK(sq.coeff(2) == big * big);
  CHECK(sq.coeff(1) == 2 * big);
  CHECK(sq.eval_one() == (big + 1) * (big + 1));
  LaurentPoly x = 1 + v;
  for (int k = 0; k < 7; ++k)
    x *= x; // (1 + v)^128
  CHECK(x.coeff(64) == Integer("23951146041928082866135587776380551750"));
  CHECK(x.eval_one() == Integer(1) << 128);
}

TEST_CASE("multiplication agrees with naive convolution") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 300; ++k) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    CHECK(oracle::from_lib(a * b) == oracle::mul(oracle::from_lib(a), oracle::from_lib(b)));
    CHECK(oracle::from_lib(a + b) == oracle::add(oracle::from_lib(a), oracle::from_lib(b)));
    CHECK(oracle::from_lib(a - b) == oracle::add(oracle::from_lib(a), oracle::from_lib(b), -1));
  }
}

TEST_CASE("ring and involution laws") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 300; ++k) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(lp_bar(lp_bar(a)) == a);
    CHECK(lp_bar(a * b) == lp_bar(a) * lp_bar(b));
    CHECK(lp_bar(a + b) == lp_bar(a) + lp_bar(b));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b).eval_one() == a.eval_one() * b.eval_one());

    LaurentPoly acc = a;
    acc.add_product(b, c);
    CHECK(acc == a + b * c);
    LaurentPoly self = a;
    self.add_product(self, self);
    CHECK(self == a + a * a);
    LaurentPoly sq = a;
    sq *= sq;
    CHECK(sq == a * a);

    // Bar-antisymmetric elements split as P - bar(P) with P their positive part.
    LaurentPoly anti = a - lp_bar(a);
    CHECK(anti.coeff(0) == 0);
    CHECK(anti == lp_pos_part(anti) - lp_bar(lp_pos_part(anti)));
  }
}
