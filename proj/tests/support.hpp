#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jfun/cartan.hpp"
#include "jfun/factored.hpp"
#include "jfun/polynomial.hpp"

namespace testing {

using jfun::Exponent;
using jfun::FactoredRational;
using jfun::MultiPolynomial;
using jfun::Rational;

using Terms = std::vector<std::pair<Rational, std::vector<Exponent>>>;
using Den = std::vector<std::pair<std::vector<Exponent>, int>>;

inline MultiPolynomial poly(std::size_t nvars, const Terms& terms) {
  std::vector<std::vector<Exponent>> exps;
  std::vector<Rational> coeffs;
  for (const auto& [c, e] : terms) {
    coeffs.push_back(c);
    exps.push_back(e);
  }
  return MultiPolynomial::from_terms(nvars, exps, coeffs);
}

inline FactoredRational frac(MultiPolynomial num, const Den& den) {
  FactoredRational::Denominator d;
  for (const auto& [m, k] : den) d.emplace_back(jfun::BinomialFactor(m), k);
  return FactoredRational(std::move(num), std::move(d));
}

inline FactoredRational frac(std::size_t nvars, const Terms& num, const Den& den) {
  return frac(poly(nvars, num), den);
}

inline MultiPolynomial random_poly(std::mt19937_64& rng, std::size_t nvars, int terms,
                                   int max_exp) {
  std::vector<std::vector<Exponent>> exps;
  std::vector<Rational> coeffs;
  for (int t = 0; t < terms; ++t) {
    std::vector<Exponent> e(nvars);
    for (auto& x : e) x = static_cast<Exponent>(rng() % (max_exp + 1));
    exps.push_back(e);
    coeffs.emplace_back(static_cast<long>(rng() % 19) - 9, static_cast<unsigned long>(rng() % 4 + 1));
    coeffs.back().canonicalize();
  }
  return MultiPolynomial::from_terms(nvars, exps, coeffs);
}

inline Rational pow_int(const Rational& x, long e) {
  Rational r = 1;
  Rational b = e >= 0 ? x : Rational(1) / x;
  for (long i = 0; i < (e >= 0 ? e : -e); ++i) r *= b;
  return r;
}

// Value of J_alpha at (q0, z) straight from the recursion, one scalar per
// cone vector. The quadratic form is rebuilt here from the raw matrix and
// symmetrizers, so nothing from the polynomial engine is involved.
class NumericJ {
 public:
  NumericJ(const jfun::IntMatrix& a, const std::vector<int>& d, Rational q0,
           std::vector<Rational> z)
      : a_(a), d_(d), q0_(std::move(q0)), z_(std::move(z)) {}

  long half_norm(const std::vector<int>& b) const {
    long s = 0;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) s += long(b[i]) * d_[i] * a_[i][j] * b[j];
    return s / 2;
  }

  Rational weight(const std::vector<int>& b) const {
    Rational w = pow_int(q0_, half_norm(b));
    for (std::size_t i = 0; i < b.size(); ++i) w *= pow_int(z_[i], b[i]);
    return w;
  }

  Rational pochhammer(const std::vector<int>& g) const {
    Rational p = 1;
    for (std::size_t i = 0; i < g.size(); ++i)
      for (int s = 1; s <= g[i]; ++s) p *= Rational(1) - pow_int(q0_, long(d_[i]) * s);
    return p;
  }

  Rational operator()(const std::vector<int>& alpha) {
    if (auto it = memo_.find(alpha); it != memo_.end()) return it->second;
    bool zero = true;
    for (int c : alpha) zero = zero && c == 0;
    if (zero) return memo_[alpha] = 1;
    // sum over beta < alpha, then solve for J_alpha
    Rational acc = 0;
    std::vector<int> beta(alpha.size(), 0);
    while (true) {
      if (beta != alpha) {
        std::vector<int> diff(alpha.size());
        for (std::size_t i = 0; i < alpha.size(); ++i) diff[i] = alpha[i] - beta[i];
        const Rational poch = pochhammer(diff);
        if (poch == 0) throw std::domain_error("pole");
        acc += weight(beta) / poch * (*this)(beta);
      }
      std::size_t i = 0;
      while (i < beta.size() && beta[i] == alpha[i]) beta[i++] = 0;
      if (i == beta.size()) break;
      ++beta[i];
    }
    const Rational pivot = Rational(1) - weight(alpha);
    if (pivot == 0) throw std::domain_error("pole");
    return memo_[alpha] = acc / pivot;
  }

 private:
  jfun::IntMatrix a_;
  std::vector<int> d_;
  Rational q0_;
  std::vector<Rational> z_;
  std::map<std::vector<int>, Rational> memo_;
};

inline Rational random_rational(std::mt19937_64& rng, int span = 9) {
  long num = 0;
  while (num == 0) num = static_cast<long>(rng() % (2 * span + 1)) - span;
  Rational r(num, static_cast<unsigned long>(rng() % span + 1));
  r.canonicalize();
  return r;
}

}  // namespace testing
