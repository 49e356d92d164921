#include "jfun/polynomial.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "jfun/errors.hpp"

namespace jfun {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw OverflowError("exponent overflow in addition");
  }
  return out;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw OverflowError("exponent overflow in multiplication");
  }
  return out;
}

std::int64_t grade(std::span<const Exponent> exps) {
  return std::accumulate(exps.begin(), exps.end(), std::int64_t{0});
}

int compare_grlex(std::span<const Exponent> a, std::span<const Exponent> b) {
  const auto ga = grade(a);
  const auto gb = grade(b);
  if (ga != gb) return ga < gb ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

namespace {

void check_nonnegative(std::span<const Exponent> exps, bool laurent) {
  if (laurent) return;
  for (auto e : exps) {
    if (e < 0) {
      throw MismatchError("negative exponent in a non-Laurent polynomial");
    }
  }
}

}  // namespace

void MultiPolynomial::push_term(std::span<const Exponent> exps,
                                const Rational& c) {
  exps_.insert(exps_.end(), exps.begin(), exps.end());
  coeffs_.push_back(c);
}

MultiPolynomial MultiPolynomial::constant(std::size_t nvars, const Rational& c,
                                          bool laurent) {
  MultiPolynomial p(nvars, laurent);
  if (c != 0) {
    std::vector<Exponent> zero(nvars, 0);
    p.push_term(zero, c);
  }
  return p;
}

MultiPolynomial MultiPolynomial::monomial(std::span<const Exponent> exps,
                                          const Rational& c, bool laurent) {
  check_nonnegative(exps, laurent);
  MultiPolynomial p(exps.size(), laurent);
  if (c != 0) p.push_term(exps, c);
  return p;
}

MultiPolynomial MultiPolynomial::from_terms(
    std::size_t nvars, const std::vector<std::vector<Exponent>>& exps,
    const std::vector<Rational>& coeffs, bool laurent) {
  if (exps.size() != coeffs.size()) {
    throw MismatchError("term count mismatch");
  }
  std::vector<std::size_t> order(exps.size());
  std::iota(order.begin(), order.end(), 0);
  for (const auto& e : exps) {
    if (e.size() != nvars) throw MismatchError("exponent vector length mismatch");
    check_nonnegative(e, laurent);
  }
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare_grlex(exps[a], exps[b]) < 0;
  });
  MultiPolynomial p(nvars, laurent);
  for (std::size_t k = 0; k < order.size();) {
    Rational sum = coeffs[order[k]];
    std::size_t j = k + 1;
    while (j < order.size() && exps[order[j]] == exps[order[k]]) {
      sum += coeffs[order[j]];
      ++j;
    }
    if (sum != 0) p.push_term(exps[order[k]], sum);
    k = j;
  }
  return p;
}

bool MultiPolynomial::is_constant() const {
  if (coeffs_.empty()) return true;
  if (coeffs_.size() != 1) return false;
  auto e = exponents(0);
  return std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; });
}

std::int64_t MultiPolynomial::max_grade() const {
  // Sorted by grade first, so the last term has the largest grade.
  return coeffs_.empty() ? 0 : grade(exponents(size() - 1));
}

Exponent MultiPolynomial::max_exponent(std::size_t var) const {
  Exponent best = 0;
  for (std::size_t t = 0; t < size(); ++t) {
    best = std::max(best, exponents(t)[var]);
  }
  return best;
}

bool MultiPolynomial::integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) {
    return c.get_den() == 1;
  });
}

void MultiPolynomial::check_compatible(const MultiPolynomial& rhs) const {
  if (nvars_ != rhs.nvars_) {
    throw MismatchError("polynomials over different variable sets (" +
                        std::to_string(nvars_) + " vs " +
                        std::to_string(rhs.nvars_) + ")");
  }
}

MultiPolynomial MultiPolynomial::operator-() const {
  MultiPolynomial out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

MultiPolynomial MultiPolynomial::merged(const MultiPolynomial& rhs,
                                        bool subtract) const {
  check_compatible(rhs);
  MultiPolynomial out(nvars_, laurent_ || rhs.laurent_);
  out.exps_.reserve(exps_.size() + rhs.exps_.size());
  out.coeffs_.reserve(size() + rhs.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < size() || j < rhs.size()) {
    int cmp;
    if (i == size()) {
      cmp = 1;
    } else if (j == rhs.size()) {
      cmp = -1;
    } else {
      cmp = compare_grlex(exponents(i), rhs.exponents(j));
    }
    if (cmp < 0) {
      out.push_term(exponents(i), coeffs_[i]);
      ++i;
    } else if (cmp > 0) {
      out.push_term(rhs.exponents(j), subtract ? Rational(-rhs.coeffs_[j])
                                               : rhs.coeffs_[j]);
      ++j;
    } else {
      Rational c = subtract ? Rational(coeffs_[i] - rhs.coeffs_[j])
                            : Rational(coeffs_[i] + rhs.coeffs_[j]);
      if (c != 0) out.push_term(exponents(i), c);
      ++i;
      ++j;
    }
  }
  return out;
}

MultiPolynomial& MultiPolynomial::operator+=(const MultiPolynomial& rhs) {
  *this = merged(rhs, false);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator-=(const MultiPolynomial& rhs) {
  *this = merged(rhs, true);
  return *this;
}

MultiPolynomial& MultiPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    exps_.clear();
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

MultiPolynomial operator*(const MultiPolynomial& lhs,
                          const MultiPolynomial& rhs) {
  lhs.check_compatible(rhs);
  const bool laurent = lhs.laurent_ || rhs.laurent_;
  const std::size_t n = lhs.nvars_;
  if (lhs.is_zero() || rhs.is_zero()) return MultiPolynomial(n, laurent);
  // Few terms on one side: accumulate shifted copies with linear merges.
  const MultiPolynomial& small = lhs.size() <= rhs.size() ? lhs : rhs;
  const MultiPolynomial& big = lhs.size() <= rhs.size() ? rhs : lhs;
  if (small.size() <= 4) {
    MultiPolynomial acc(n, laurent);
    for (std::size_t t = 0; t < small.size(); ++t) {
      MultiPolynomial part = big.shifted(small.exponents(t));
      part *= small.coeffs_[t];
      acc += part;
    }
    return acc;
  }
  const std::size_t count = lhs.size() * rhs.size();
  std::vector<Exponent> exps(count * n);
  std::vector<Rational> coeffs(count);
  std::size_t k = 0;
  for (std::size_t a = 0; a < lhs.size(); ++a) {
    auto ea = lhs.exponents(a);
    for (std::size_t b = 0; b < rhs.size(); ++b, ++k) {
      auto eb = rhs.exponents(b);
      for (std::size_t v = 0; v < n; ++v) {
        exps[k * n + v] = checked_add(ea[v], eb[v]);
      }
      coeffs[k] = lhs.coeffs_[a] * rhs.coeffs_[b];
    }
  }
  auto span_of = [&](std::size_t idx) {
    return std::span<const Exponent>(exps.data() + idx * n, n);
  };
  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return compare_grlex(span_of(a), span_of(b)) < 0;
  });
  MultiPolynomial out(n, laurent);
  for (std::size_t i = 0; i < count;) {
    Rational sum = coeffs[order[i]];
    std::size_t j = i + 1;
    while (j < count && compare_grlex(span_of(order[j]), span_of(order[i])) == 0) {
      sum += coeffs[order[j]];
      ++j;
    }
    if (sum != 0) out.push_term(span_of(order[i]), sum);
    i = j;
  }
  return out;
}

bool MultiPolynomial::operator==(const MultiPolynomial& rhs) const {
  return nvars_ == rhs.nvars_ && exps_ == rhs.exps_ && coeffs_ == rhs.coeffs_;
}

MultiPolynomial MultiPolynomial::shifted(std::span<const Exponent> mono) const {
  if (mono.size() != nvars_) throw MismatchError("monomial length mismatch");
  bool laurent = laurent_;
  for (auto e : mono) laurent = laurent || e < 0;
  MultiPolynomial out(nvars_, laurent);
  out.exps_.resize(exps_.size());
  for (std::size_t k = 0; k < exps_.size(); ++k) {
    out.exps_[k] = checked_add(exps_[k], mono[k % nvars_]);
  }
  out.coeffs_ = coeffs_;
  return out;
}

MultiPolynomial MultiPolynomial::times_one_minus(
    std::span<const Exponent> mono) const {
  return merged(shifted(mono), true);
}

std::optional<MultiPolynomial> MultiPolynomial::divide_one_minus(
    std::span<const Exponent> mono) const {
  if (mono.size() != nvars_) throw MismatchError("monomial length mismatch");
  const std::int64_t step = grade(mono);
  if (step <= 0) {
    throw MismatchError("binomial division needs a monomial of positive degree");
  }
  MultiPolynomial quotient(nvars_, laurent_);
  if (is_zero()) return quotient;
  // p = (1 - M) Q  <=>  Q_t = p_t + Q_{t - m}. Walk t upward, merging the
  // terms of p with the (already sorted) shifted terms of Q. Any nonzero
  // Q_t above the degree bound means the division is not exact.
  const std::int64_t cutoff = max_grade() - step;
  struct Pending {
    std::vector<Exponent> exps;
    Rational coeff;
  };
  std::deque<Pending> queue;
  std::vector<Exponent> scratch(nvars_);
  std::size_t i = 0;
  while (i < size() || !queue.empty()) {
    int cmp;
    if (i == size()) {
      cmp = 1;
    } else if (queue.empty()) {
      cmp = -1;
    } else {
      cmp = compare_grlex(exponents(i), queue.front().exps);
    }
    Rational value;
    if (cmp < 0) {
      auto e = exponents(i);
      scratch.assign(e.begin(), e.end());
      value = coeffs_[i];
      ++i;
    } else if (cmp > 0) {
      scratch = std::move(queue.front().exps);
      value = std::move(queue.front().coeff);
      queue.pop_front();
    } else {
      auto e = exponents(i);
      scratch.assign(e.begin(), e.end());
      value = coeffs_[i] + queue.front().coeff;
      queue.pop_front();
      ++i;
    }
    if (value == 0) continue;
    if (grade(scratch) > cutoff) return std::nullopt;
    quotient.push_term(scratch, value);
    Pending next{std::vector<Exponent>(nvars_), value};
    for (std::size_t v = 0; v < nvars_; ++v) {
      next.exps[v] = checked_add(scratch[v], mono[v]);
    }
    queue.push_back(std::move(next));
  }
  return quotient;
}

MultiPolynomial MultiPolynomial::truncated(std::span<const Exponent> weights,
                                           std::int64_t bound) const {
  if (weights.size() != nvars_) throw MismatchError("weight length mismatch");
  MultiPolynomial out(nvars_, laurent_);
  for (std::size_t t = 0; t < size(); ++t) {
    auto e = exponents(t);
    std::int64_t w = 0;
    for (std::size_t v = 0; v < nvars_; ++v) {
      w += static_cast<std::int64_t>(weights[v]) * e[v];
    }
    if (w <= bound) out.push_term(e, coeffs_[t]);
  }
  return out;
}

MultiPolynomial MultiPolynomial::remapped(std::size_t new_nvars,
                                          std::span<const std::size_t> map) const {
  if (map.size() != nvars_) throw MismatchError("variable map length mismatch");
  std::vector<std::vector<Exponent>> exps;
  std::vector<Rational> coeffs;
  for (std::size_t t = 0; t < size(); ++t) {
    std::vector<Exponent> e(new_nvars, 0);
    auto src = exponents(t);
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (map[v] >= new_nvars) throw MismatchError("variable map out of range");
      e[map[v]] = checked_add(e[map[v]], src[v]);
    }
    exps.push_back(std::move(e));
    coeffs.push_back(coeffs_[t]);
  }
  return from_terms(new_nvars, exps, coeffs, laurent_);
}

Rational rational_power(const Rational& x, Exponent e) {
  if (e < 0) {
    if (x == 0) throw PoleError("zero raised to a negative power");
    Rational inv = 1 / x;
    return rational_power(inv, -e);
  }
  Rational result = 1;
  Rational base = x;
  auto n = static_cast<std::uint32_t>(e);
  while (n != 0) {
    if (n & 1u) result *= base;
    n >>= 1;
    if (n != 0) base *= base;
  }
  return result;
}

Rational MultiPolynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_) throw MismatchError("evaluation point length mismatch");
  Rational sum = 0;
  for (std::size_t t = 0; t < size(); ++t) {
    Rational term = coeffs_[t];
    auto e = exponents(t);
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (e[v] != 0) term *= rational_power(point[v], e[v]);
    }
    sum += term;
  }
  return sum;
}

}  // namespace jfun
