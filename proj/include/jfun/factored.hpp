#ifndef JFUN_FACTORED_HPP
#define JFUN_FACTORED_HPP

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jfun/polynomial.hpp"

namespace jfun {

// The binomial (1 - x^mono). Component 0 of mono is the q-exponent `a`,
// the rest is the z-exponent vector `m`. The monomial is never constant.
class BinomialFactor {
 public:
  explicit BinomialFactor(std::vector<Exponent> mono);
  BinomialFactor(Exponent a, std::span<const Exponent> m);

  std::span<const Exponent> monomial() const { return mono_; }
  Exponent a() const { return mono_.front(); }
  std::span<const Exponent> m() const { return std::span(mono_).subspan(1); }
  std::size_t nvars() const { return mono_.size(); }
  // gcd of all exponents; the factor is (1 - M^k) for a primitive M.
  Exponent power() const;
  // (1 - M^e) where this factor is (1 - M^power()); requires e | power().
  BinomialFactor with_power(Exponent e) const;
  MultiPolynomial as_polynomial(bool laurent = false) const;

  // Ordered by a, then lexicographically by m.
  auto operator<=>(const BinomialFactor&) const = default;
  bool operator==(const BinomialFactor&) const = default;

 private:
  std::vector<Exponent> mono_;
};

// numerator / prod (1 - x^mono)^mult, factors sorted and distinct.
class FactoredRational {
 public:
  using Denominator = std::vector<std::pair<BinomialFactor, int>>;

  explicit FactoredRational(MultiPolynomial numerator);
  FactoredRational(MultiPolynomial numerator, Denominator denominator);

  static FactoredRational one(std::size_t nvars);
  static FactoredRational reciprocal(const BinomialFactor& f);

  const MultiPolynomial& numerator() const { return num_; }
  const Denominator& denominator() const { return den_; }
  std::size_t nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }
  bool laurent() const { return num_.laurent(); }
  int denominator_degree() const;

  // Cancels denominator binomials against the numerator until none divides,
  // and replaces a factor (1 - M^k) by (1 - M^e), e | k, whenever the
  // numerator is divisible by the cyclotomic quotient. Idempotent.
  FactoredRational& normalize();
  FactoredRational normalized() const;

  // Structural equality (not value equality; see frac_equal).
  bool operator==(const FactoredRational&) const = default;

 private:
  MultiPolynomial num_;
  Denominator den_;
};

// Multiset helpers on factored denominators.
FactoredRational::Denominator denominator_union_max(
    const FactoredRational::Denominator& a,
    const FactoredRational::Denominator& b);
FactoredRational::Denominator denominator_sum(
    const FactoredRational::Denominator& a,
    const FactoredRational::Denominator& b);
// Multiplies p by every factor of `common` not accounted for by `own`
// (common must dominate own).
MultiPolynomial lift_to_denominator(MultiPolynomial p,
                                    const FactoredRational::Denominator& own,
                                    const FactoredRational::Denominator& common);

MultiPolynomial poly_mul(const MultiPolynomial& p, const MultiPolynomial& r);
std::optional<MultiPolynomial> poly_divide_binomial(const MultiPolynomial& p,
                                                    const BinomialFactor& f);

FactoredRational frac_add(const FactoredRational& r, const FactoredRational& s);
FactoredRational frac_sub(const FactoredRational& r, const FactoredRational& s);
// Sum of many terms over one common denominator, normalized once (or
// left unnormalized when the caller multiplies further).
FactoredRational frac_sum(std::span<const FactoredRational> terms,
                          std::size_t nvars, bool normalize = true);
FactoredRational frac_mul(const FactoredRational& r, const FactoredRational& s);
FactoredRational frac_mul(const FactoredRational& r, const MultiPolynomial& p);
FactoredRational frac_mul_monomial(const FactoredRational& r,
                                   std::span<const Exponent> mono);
FactoredRational frac_divide_binomial(const FactoredRational& r,
                                      const BinomialFactor& f, int mult = 1);
// Exact value equality by cross-multiplication; no canonical form needed.
bool frac_equal(const FactoredRational& r, const FactoredRational& s);

// Renames variable i to map[i] in a ring of new_nvars variables (used to
// include a sub-diagram's values into a larger datum).
FactoredRational remap_variables(const FactoredRational& r, std::size_t new_nvars,
                                 std::span<const std::size_t> map);

enum class Grading { Q, Joint };
std::string to_string(Grading g);
Grading parse_grading(const std::string& text);

// Truncated expansion graded either by the q-exponent or by the total
// degree. Entry n of the result is the homogeneous piece of grade n; under
// Q grading the q-exponent of that piece is stripped (a polynomial in z).
std::vector<MultiPolynomial> series_expand(const FactoredRational& r,
                                           int order, Grading grading);

Rational evaluate_at(const FactoredRational& r, std::span<const Rational> point);
Rational evaluate_at(const FactoredRational& r, const Rational& q0,
                     std::span<const Rational> zvals);

}  // namespace jfun

#endif  // JFUN_FACTORED_HPP
