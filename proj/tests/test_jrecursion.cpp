#include <doctest.h>

#include <map>
#include <random>

#include "jfun/errors.hpp"
#include "jfun/jrecursion.hpp"
#include "jfun/serialize.hpp"
#include "support.hpp"

using namespace jfun;
using testing::frac;
using testing::poly;

namespace {

// Power series of prod_{s<=d} 1/((1-q^s)(1-q^s z)) in (q, z), truncated in
// q, by repeated geometric multiplication on a dense table.
using Dense = std::map<std::pair<int, int>, long>;

Dense sl2_series(int d, int order) {
  Dense s{{{0, 0}, 1}};
  for (int k = 1; k <= d; ++k) {
    for (int zexp : {0, k}) {
      Dense next;
      for (const auto& [e, c] : s) {
        for (int m = 0; e.first + m * k <= order; ++m) {
          next[{e.first + m * k, e.second + m * (zexp ? 1 : 0)}] += c;
        }
      }
      s = next;
    }
  }
  return s;
}

Dense to_dense(const std::vector<MultiPolynomial>& pieces) {
  Dense out;
  for (std::size_t n = 0; n < pieces.size(); ++n) {
    for (std::size_t t = 0; t < pieces[n].size(); ++t) {
      REQUIRE(pieces[n].coefficient(t).get_den() == 1);
      out[{static_cast<int>(n), pieces[n].exponents(t)[1]}] = pieces[n].coefficient(t).get_num().get_si();
    }
  }
  return out;
}

}  // namespace

TEST_CASE("q-Pochhammer factors") {
  auto a1 = parse_cartan_type("A1");
  auto p = q_pochhammer(a1, ConeVector({2}));
  REQUIRE(p.size() == 2);
  CHECK(p[0] == std::make_pair(BinomialFactor({1, 0}), 1));
  CHECK(p[1] == std::make_pair(BinomialFactor({2, 0}), 1));
  auto g2 = parse_cartan_type("G2");
  auto pg = q_pochhammer(g2, ConeVector({1, 1}));
  REQUIRE(pg.size() == 2);
  CHECK(pg[0].first == BinomialFactor({1, 0, 0}));
  CHECK(pg[1].first == BinomialFactor({3, 0, 0}));
  CHECK(q_pochhammer(g2, ConeVector({0, 0})).empty());
}

TEST_CASE("small values") {
  JTable t(parse_cartan_type("A1"));
  CHECK(compute_j(ConeVector({0}), t) == FactoredRational::one(2));
  auto one = MultiPolynomial::constant(2, 1);
  CHECK(frac_equal(compute_j(ConeVector({1}), t), frac(one, {{{1, 0}, 1}, {{1, 1}, 1}})));
  CHECK(frac_equal(compute_j(ConeVector({2}), t),
                   frac(one, {{{1, 0}, 1}, {{2, 0}, 1}, {{1, 1}, 1}, {{2, 1}, 1}})));
}

TEST_CASE("A1 agrees with the closed form and with an independent series") {
  JTable t(parse_cartan_type("A1"));
  for (int d = 0; d <= 6; ++d) {
    CAPTURE(d);
    const auto& j = compute_j(ConeVector({d}), t);
    CHECK(frac_equal(j, closed_form_sl2(d)));
    CHECK(to_dense(series_expand(j, 12, Grading::Q)) == sl2_series(d, 12));
  }
  CHECK(closed_form_sl2(0) == FactoredRational::one(2));
}

TEST_CASE("values match the scalar recursion at random rational points") {
  std::mt19937_64 rng(99);
  const std::vector<std::pair<std::string, std::vector<int>>> cases{
      {"A1", {2}}, {"A2", {2, 2}}, {"B2", {2, 1}}, {"C2", {1, 2}}, {"G2", {2, 1}},
      {"A3", {1, 1, 1}}, {"A1~", {2, 1}}, {"A2~", {1, 1, 1}}};
  for (const auto& [label, alpha] : cases) {
    CAPTURE(label);
    auto d = parse_cartan_type(label);
    JTable table(d);
    const auto& value = compute_j(ConeVector(alpha), table);
    int points = 0;
    while (points < 5) {
      Rational q0 = testing::random_rational(rng);
      std::vector<Rational> z;
      for (std::size_t i = 0; i < d.rank(); ++i) z.push_back(testing::random_rational(rng));
      testing::NumericJ oracle(d.matrix(), d.symmetrizers(), q0, z);
      Rational expect;
      try {
        expect = oracle(alpha);
      } catch (const std::exception&) {
        continue;  // division by zero in the oracle: pole
      }
      Rational got;
      try {
        got = evaluate_at(value, q0, z);
      } catch (const PoleError&) {
        continue;
      }
      REQUIRE(got == expect);
      ++points;
    }
  }
}

TEST_CASE("simple roots, every catalogued type") {
  for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C3", "D4", "E6", "F4", "G2", "A1~", "A2~", "A3~"}) {
    CAPTURE(label);
    auto d = parse_cartan_type(label);
    JTable t(d);
    CHECK(compute_j(ConeVector::zero(d.rank()), t) == FactoredRational::one(d.nvars()));
    for (std::size_t i = 0; i < d.rank(); ++i) {
      const int di = d.symmetrizers()[i];
      std::vector<Exponent> a(d.nvars(), 0), b(d.nvars(), 0);
      a[0] = di;
      b[0] = di;
      b[i + 1] = 1;
      auto expect = frac(MultiPolynomial::constant(d.nvars(), 1), {{a, 1}, {b, 1}});
      CHECK(frac_equal(compute_j(ConeVector::simple(d.rank(), i), t), expect));
    }
  }
}

TEST_CASE("memoization is deterministic") {
  auto d = parse_cartan_type("B2");
  JTable warm(d);
  populate(warm, ConeVector({3, 3}));
  JTable fresh(d);
  const auto& direct = compute_j(ConeVector({3, 2}), fresh);
  CHECK(serialize(*warm.find(ConeVector({3, 2}))) == serialize(direct));
  JTable threaded(d);
  populate(threaded, ConeVector({3, 3}), 4);
  for (const auto& [a, v] : warm.entries()) CHECK(serialize(*threaded.find(a)) == serialize(v));
}

TEST_CASE("table entries are write once") {
  JTable t(parse_cartan_type("A1"));
  compute_j(ConeVector({1}), t);
  CHECK_NOTHROW(t.insert(ConeVector({1}), closed_form_sl2(1)));
  CHECK_THROWS_AS(t.insert(ConeVector({1}), closed_form_sl2(2)), InvariantError);
  CHECK_THROWS_AS(t.insert(ConeVector({0}), closed_form_sl2(1)), InvariantError);
  CHECK(t.engine_version() == std::string(kEngineVersion));
  JTable other(parse_cartan_type("A2"));
  CHECK_THROWS_AS(compute_j(ConeVector({1}), other), MismatchError);
}

TEST_CASE("generating series") {
  JTable t(parse_cartan_type("A1"));
  auto g0 = generating_series(t, ConeVector({0}));
  REQUIRE(g0.size() == 1);
  CHECK(g0[0].second == FactoredRational::one(2));
  auto g1 = generating_series(t, ConeVector({1}));
  REQUIRE(g1.size() == 2);
  CHECK(g1[1].first == ConeVector({1}));
  CHECK(frac_equal(g1[1].second, closed_form_sl2(1)));
  JTable t2(parse_cartan_type("A2"));
  CHECK(generating_series(t2, ConeVector({1, 1})).size() == 4);
}

TEST_CASE("positivity of low coefficients in simply laced types") {
  JTable t(parse_cartan_type("A2"));
  for (const auto& a : interval_below(ConeVector({2, 2}))) {
    for (const auto& piece : series_expand(compute_j(a, t), 10, Grading::Q)) {
      for (std::size_t k = 0; k < piece.size(); ++k) {
        REQUIRE(piece.coefficient(k) > 0);
        REQUIRE(piece.coefficient(k).get_den() == 1);
      }
    }
  }
}

TEST_CASE("affine chart") {
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    std::vector<Exponent> all_z(n + 1, 1);
    all_z[0] = 0;
    std::vector<Exponent> u(n + 1, 0);
    u[1] = 1;
    CHECK(chart_image(all_z, n) == u);
    std::vector<Exponent> q(n + 1, 0);
    q[0] = 1;
    std::vector<Exponent> v2(n + 1, 0);
    v2[0] = 2;
    CHECK(chart_image(q, n) == v2);
    auto one = affine_chart_substitute(FactoredRational::one(n + 1), n);
    CHECK(one.numerator() == MultiPolynomial::constant(n + 1, 1, true));
    CHECK(chart_variable_names(n).size() == static_cast<std::size_t>(n + 1));
  }
  // N = 2: z0 -> t1 t0^-1 u = t1 t2^-1 u = t1^2 u, z1 -> t2 t1^-1 = t1^-2.
  CHECK(chart_image(std::vector<Exponent>{0, 1, 0}, 2) == std::vector<Exponent>{0, 1, 2});
  CHECK(chart_image(std::vector<Exponent>{0, 0, 1}, 2) == std::vector<Exponent>{0, 0, -2});
}

TEST_CASE("interpretation labels") {
  CHECK(interpretation(parse_cartan_type("A2")) == "character of C[Z^alpha]");
  CHECK(interpretation(parse_cartan_type("G2")).find("folded") != std::string::npos);
  CHECK(interpretation(parse_cartan_type("B3~", ParseOptions{true})).find("conjectural") == 0);
}
