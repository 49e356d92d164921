#ifndef JFUN_POLYNOMIAL_HPP
#define JFUN_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace jfun {

using Rational = mpq_class;
using Exponent = std::int32_t;

// Checked exponent arithmetic; throws OverflowError instead of wrapping.
Exponent checked_add(Exponent a, Exponent b);
Exponent checked_mul(Exponent a, Exponent b);

// Total degree of an exponent vector.
std::int64_t grade(std::span<const Exponent> exps);

// Graded lexicographic comparison: total degree first, then the exponent
// vectors lexicographically. This is a monomial order, so multiplying every
// term by the same monomial keeps a sorted term list sorted.
int compare_grlex(std::span<const Exponent> a, std::span<const Exponent> b);

// Sparse multivariate polynomial with exact rational coefficients.
//
// Variable 0 is q, variables 1..r are z_1..z_r for a rank-r root datum.
// Other variable layouts (the affine chart in v, u, t) use the same
// container; only the rendering names differ.
//
// Terms are stored flat and sorted ascending in graded lex order with no
// zero coefficients, so equal polynomials are structurally equal.
// Exponents are nonnegative unless the polynomial is marked Laurent.
class MultiPolynomial {
 public:
  explicit MultiPolynomial(std::size_t nvars = 0, bool laurent = false)
      : nvars_(nvars), laurent_(laurent) {}

  static MultiPolynomial constant(std::size_t nvars, const Rational& c,
                                  bool laurent = false);
  static MultiPolynomial monomial(std::span<const Exponent> exps,
                                  const Rational& c = 1, bool laurent = false);
  // Builds from arbitrary (possibly repeated, unsorted) terms.
  static MultiPolynomial from_terms(
      std::size_t nvars, const std::vector<std::vector<Exponent>>& exps,
      const std::vector<Rational>& coeffs, bool laurent = false);

  std::size_t nvars() const { return nvars_; }
  bool laurent() const { return laurent_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const;

  std::span<const Exponent> exponents(std::size_t term) const {
    return {exps_.data() + term * nvars_, nvars_};
  }
  const Rational& coefficient(std::size_t term) const { return coeffs_[term]; }

  // Largest total degree among the terms; 0 for the zero polynomial.
  std::int64_t max_grade() const;
  // Largest exponent of one variable.
  Exponent max_exponent(std::size_t var) const;
  // True when all coefficients are integers.
  bool integral() const;

  MultiPolynomial operator-() const;
  MultiPolynomial& operator+=(const MultiPolynomial& rhs);
  MultiPolynomial& operator-=(const MultiPolynomial& rhs);
  MultiPolynomial& operator*=(const Rational& c);
  friend MultiPolynomial operator+(MultiPolynomial lhs, const MultiPolynomial& rhs) {
    return lhs += rhs;
  }
  friend MultiPolynomial operator-(MultiPolynomial lhs, const MultiPolynomial& rhs) {
    return lhs -= rhs;
  }
  friend MultiPolynomial operator*(MultiPolynomial lhs, const Rational& c) {
    return lhs *= c;
  }
  friend MultiPolynomial operator*(const MultiPolynomial& lhs,
                                   const MultiPolynomial& rhs);
  bool operator==(const MultiPolynomial& rhs) const;

  // Multiplication by the monomial x^mono.
  MultiPolynomial shifted(std::span<const Exponent> mono) const;
  // Multiplication by (1 - x^mono), done as one merge pass.
  MultiPolynomial times_one_minus(std::span<const Exponent> mono) const;
  // Exact division by (1 - x^mono). Returns nullopt when the binomial does
  // not divide. Requires grade(mono) > 0.
  std::optional<MultiPolynomial> divide_one_minus(
      std::span<const Exponent> mono) const;

  // Keeps only terms whose weighted degree w.e is at most bound.
  MultiPolynomial truncated(std::span<const Exponent> weights,
                            std::int64_t bound) const;
  // Moves variable i to position map[i] in a ring with new_nvars variables.
  MultiPolynomial remapped(std::size_t new_nvars,
                           std::span<const std::size_t> map) const;

  // Exact value at a point; throws PoleError on 0^negative.
  Rational evaluate(std::span<const Rational> point) const;

 private:
  void check_compatible(const MultiPolynomial& rhs) const;
  MultiPolynomial merged(const MultiPolynomial& rhs, bool subtract) const;
  void push_term(std::span<const Exponent> exps, const Rational& c);

  std::size_t nvars_;
  bool laurent_;
  std::vector<Exponent> exps_;
  std::vector<Rational> coeffs_;
};

// x^e for a rational x and signed e.
Rational rational_power(const Rational& x, Exponent e);

}  // namespace jfun

#endif  // JFUN_POLYNOMIAL_HPP
