#include <doctest.h>

#include <random>

#include "jfun/errors.hpp"
#include "jfun/factored.hpp"
#include "jfun/polynomial.hpp"
#include "support.hpp"

using namespace jfun;
using testing::poly;

TEST_CASE("poly_mul small products") {
  auto one_plus_q = poly(2, {{1, {0, 0}}, {1, {1, 0}}});
  auto one_minus_q = poly(2, {{1, {0, 0}}, {-1, {1, 0}}});
  CHECK(poly_mul(one_plus_q, one_minus_q) == poly(2, {{1, {0, 0}}, {-1, {2, 0}}}));

  auto p = poly(2, {{3, {2, 1}}, {Rational(1, 2), {0, 4}}});
  CHECK(poly_mul(p, MultiPolynomial::constant(2, 1)) == p);

  auto a = poly(2, {{1, {0, 0}}, {-1, {1, 1}}});
  auto b = poly(2, {{1, {0, 0}}, {1, {1, 1}}});
  CHECK(poly_mul(a, b) == poly(2, {{1, {0, 0}}, {-1, {2, 2}}}));
}

TEST_CASE("poly_mul rejects rank mismatch") {
  CHECK_THROWS_AS(poly_mul(MultiPolynomial::constant(2, 1), MultiPolynomial::constant(3, 1)),
                  MismatchError);
}

TEST_CASE("binomial division") {
  auto p = poly(2, {{1, {0, 0}}, {-1, {2, 0}}});
  auto q = poly_divide_binomial(p, BinomialFactor({1, 0}));
  REQUIRE(q);
  CHECK(*q == poly(2, {{1, {0, 0}}, {1, {1, 0}}}));

  auto p2 = poly(2, {{1, {0, 0}}, {-1, {4, 2}}});
  auto q2 = poly_divide_binomial(p2, BinomialFactor({2, 1}));
  REQUIRE(q2);
  CHECK(*q2 == poly(2, {{1, {0, 0}}, {1, {2, 1}}}));

  CHECK_FALSE(poly_divide_binomial(poly(2, {{1, {0, 0}}, {1, {1, 0}}}), BinomialFactor({1, 0})));
  CHECK(poly_divide_binomial(MultiPolynomial(2), BinomialFactor({1, 0}))->is_zero());
}

TEST_CASE("constant binomial is rejected") {
  CHECK_THROWS_AS(BinomialFactor({0, 0}), InvariantError);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    auto a = testing::random_poly(rng, 3, 1 + trial % 6, 3);
    auto b = testing::random_poly(rng, 3, 1 + trial % 5, 3);
    auto c = testing::random_poly(rng, 3, 1 + trial % 4, 2);
    REQUIRE(a * b == b * a);
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a + b == b + a);
    REQUIRE((a - a).is_zero());
  }
}

TEST_CASE("division then multiply back") {
  std::mt19937_64 rng(11);
  int divisible = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto p = testing::random_poly(rng, 3, 4, 3);
    std::vector<Exponent> mono{static_cast<Exponent>(rng() % 3), static_cast<Exponent>(rng() % 2),
                               static_cast<Exponent>(rng() % 2)};
    if (grade(mono) == 0) mono[0] = 1;
    BinomialFactor f(mono);
    auto prod = p.times_one_minus(mono);
    auto back = poly_divide_binomial(prod, f);
    REQUIRE(back);
    REQUIRE(*back == p);
    if (auto q = poly_divide_binomial(p, f)) {
      ++divisible;
      REQUIRE(q->times_one_minus(mono) == p);
    }
  }
  CHECK(divisible < 200);
}

TEST_CASE("terms are stored in graded lex order") {
  auto p = poly(2, {{1, {3, 0}}, {1, {0, 1}}, {1, {1, 1}}, {1, {0, 0}}, {1, {2, 0}}});
  std::vector<std::vector<Exponent>> order;
  for (std::size_t t = 0; t < p.size(); ++t) {
    order.emplace_back(p.exponents(t).begin(), p.exponents(t).end());
  }
  std::vector<std::vector<Exponent>> expect{{0, 0}, {0, 1}, {1, 1}, {2, 0}, {3, 0}};
  CHECK(order == expect);
}

TEST_CASE("zero coefficients are dropped") {
  auto p = poly(2, {{1, {1, 0}}, {-1, {1, 0}}, {2, {0, 0}}});
  CHECK(p == MultiPolynomial::constant(2, 2));
  CHECK(p.size() == 1);
}

TEST_CASE("exponent overflow is an error") {
  CHECK_THROWS_AS(checked_add(std::numeric_limits<Exponent>::max(), 1), OverflowError);
  CHECK_THROWS_AS(checked_mul(1 << 20, 1 << 12), OverflowError);
  auto big = MultiPolynomial::monomial(std::vector<Exponent>{std::numeric_limits<Exponent>::max(), 0});
  CHECK_THROWS_AS(big * big, OverflowError);
}

TEST_CASE("negative exponents need a Laurent ring") {
  CHECK_THROWS(MultiPolynomial::monomial(std::vector<Exponent>{-1, 0}));
  auto m = MultiPolynomial::monomial(std::vector<Exponent>{-1, 2}, 1, true);
  std::vector<Rational> pt{Rational(1, 2), 3};
  CHECK(m.evaluate(pt) == 18);
}

TEST_CASE("evaluation") {
  auto p = poly(2, {{1, {0, 0}}, {Rational(2, 3), {1, 2}}});
  std::vector<Rational> pt{Rational(3), Rational(1, 2)};
  CHECK(p.evaluate(pt) == Rational(3, 2));
}

TEST_CASE("truncation by weights") {
  auto p = poly(3, {{1, {0, 0, 0}}, {1, {1, 0, 0}}, {1, {0, 5, 5}}, {1, {2, 1, 0}}});
  std::vector<Exponent> w{1, 0, 0};
  CHECK(p.truncated(w, 1) == poly(3, {{1, {0, 0, 0}}, {1, {1, 0, 0}}, {1, {0, 5, 5}}}));
}
