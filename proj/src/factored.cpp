#include "jfun/factored.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "jfun/errors.hpp"

namespace jfun {

BinomialFactor::BinomialFactor(std::vector<Exponent> mono)
    : mono_(std::move(mono)) {
  if (mono_.empty()) throw MismatchError("binomial factor over zero variables");
  if (std::all_of(mono_.begin(), mono_.end(), [](Exponent e) { return e == 0; })) {
    throw InvariantError("binomial factor 1 - 1 is not invertible");
  }
}

BinomialFactor::BinomialFactor(Exponent a, std::span<const Exponent> m)
    : BinomialFactor([&] {
        std::vector<Exponent> mono{a};
        mono.insert(mono.end(), m.begin(), m.end());
        return mono;
      }()) {}

Exponent BinomialFactor::power() const {
  Exponent g = 0;
  for (auto e : mono_) g = std::gcd(g, e < 0 ? -e : e);
  return g;
}

BinomialFactor BinomialFactor::with_power(Exponent e) const {
  const Exponent k = power();
  if (e <= 0 || k % e != 0) throw InvariantError("with_power: e must divide the power");
  std::vector<Exponent> mono(mono_.size());
  for (std::size_t i = 0; i < mono_.size(); ++i) mono[i] = mono_[i] / k * e;
  return BinomialFactor(std::move(mono));
}

MultiPolynomial BinomialFactor::as_polynomial(bool laurent) const {
  bool lau = laurent;
  for (auto e : mono_) lau = lau || e < 0;
  return MultiPolynomial::constant(mono_.size(), 1, lau) -
         MultiPolynomial::monomial(mono_, 1, lau);
}

namespace {

std::string describe(const BinomialFactor& f) {
  std::ostringstream out;
  out << "(1 - x^[";
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    out << (i ? "," : "") << f.monomial()[i];
  }
  out << "])";
  return out.str();
}

void add_factor(FactoredRational::Denominator& den, const BinomialFactor& f,
                int mult) {
  auto it = std::lower_bound(
      den.begin(), den.end(), f,
      [](const auto& entry, const BinomialFactor& key) { return entry.first < key; });
  if (it != den.end() && it->first == f) {
    it->second += mult;
  } else {
    den.insert(it, {f, mult});
  }
}

void check_rank(std::size_t a, std::size_t b) {
  if (a != b) {
    throw MismatchError("rational functions over different variable sets (" +
                        std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

FactoredRational::FactoredRational(MultiPolynomial numerator)
    : num_(std::move(numerator)) {}

FactoredRational::FactoredRational(MultiPolynomial numerator,
                                   Denominator denominator)
    : num_(std::move(numerator)) {
  for (auto& [f, mult] : denominator) {
    check_rank(f.nvars(), num_.nvars());
    if (mult < 0) throw InvariantError("negative denominator multiplicity");
    if (mult > 0) add_factor(den_, f, mult);
  }
  if (num_.is_zero()) den_.clear();
}

FactoredRational FactoredRational::one(std::size_t nvars) {
  return FactoredRational(MultiPolynomial::constant(nvars, 1));
}

FactoredRational FactoredRational::reciprocal(const BinomialFactor& f) {
  bool laurent = false;
  for (auto e : f.monomial()) laurent = laurent || e < 0;
  return FactoredRational(MultiPolynomial::constant(f.nvars(), 1, laurent),
                          {{f, 1}});
}

int FactoredRational::denominator_degree() const {
  int total = 0;
  for (const auto& entry : den_) total += entry.second;
  return total;
}

FactoredRational& FactoredRational::normalize() {
  if (num_.is_zero()) {
    den_.clear();
    return *this;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [f, mult] : den_) {
      if (grade(f.monomial()) <= 0) continue;
      while (mult > 0) {
        auto q = num_.divide_one_minus(f.monomial());
        if (!q) break;
        num_ = std::move(*q);
        --mult;
        changed = true;
      }
    }
    std::erase_if(den_, [](const auto& entry) { return entry.second == 0; });
    // Cyclotomic refinement: N / (1 - M^k) = N' / (1 - M^e) whenever
    // N (1 - M^e) is divisible by (1 - M^k).
    for (std::size_t idx = 0; idx < den_.size() && !changed; ++idx) {
      const BinomialFactor f = den_[idx].first;
      const Exponent k = f.power();
      if (k <= 1 || grade(f.monomial()) <= 0) continue;
      for (Exponent e = 1; e < k; ++e) {
        if (k % e != 0) continue;
        BinomialFactor smaller = f.with_power(e);
        auto q = num_.times_one_minus(smaller.monomial())
                     .divide_one_minus(f.monomial());
        if (!q) continue;
        num_ = std::move(*q);
        if (--den_[idx].second == 0) den_.erase(den_.begin() + idx);
        add_factor(den_, smaller, 1);
        changed = true;
        break;
      }
    }
  }
  return *this;
}

FactoredRational FactoredRational::normalized() const {
  FactoredRational copy(*this);
  copy.normalize();
  return copy;
}

FactoredRational::Denominator denominator_union_max(
    const FactoredRational::Denominator& a,
    const FactoredRational::Denominator& b) {
  FactoredRational::Denominator out = a;
  for (const auto& [f, mult] : b) {
    auto it = std::lower_bound(
        out.begin(), out.end(), f,
        [](const auto& entry, const BinomialFactor& key) { return entry.first < key; });
    if (it != out.end() && it->first == f) {
      it->second = std::max(it->second, mult);
    } else {
      out.insert(it, {f, mult});
    }
  }
  return out;
}

FactoredRational::Denominator denominator_sum(
    const FactoredRational::Denominator& a,
    const FactoredRational::Denominator& b) {
  FactoredRational::Denominator out = a;
  for (const auto& [f, mult] : b) add_factor(out, f, mult);
  return out;
}

MultiPolynomial lift_to_denominator(MultiPolynomial p,
                                    const FactoredRational::Denominator& own,
                                    const FactoredRational::Denominator& common) {
  std::size_t j = 0;
  for (const auto& [f, mult] : common) {
    while (j < own.size() && own[j].first < f) {
      throw InvariantError("common denominator does not dominate a term");
    }
    int have = 0;
    if (j < own.size() && own[j].first == f) {
      have = own[j].second;
      ++j;
    }
    if (have > mult) throw InvariantError("common denominator does not dominate a term");
    for (int k = have; k < mult; ++k) p = p.times_one_minus(f.monomial());
  }
  if (j != own.size()) throw InvariantError("common denominator does not dominate a term");
  return p;
}

MultiPolynomial poly_mul(const MultiPolynomial& p, const MultiPolynomial& r) {
  return p * r;
}

std::optional<MultiPolynomial> poly_divide_binomial(const MultiPolynomial& p,
                                                    const BinomialFactor& f) {
  check_rank(p.nvars(), f.nvars());
  return p.divide_one_minus(f.monomial());
}

FactoredRational frac_sum(std::span<const FactoredRational> terms,
                          std::size_t nvars, bool normalize) {
  FactoredRational::Denominator common;
  bool laurent = false;
  for (const auto& t : terms) {
    check_rank(t.nvars(), nvars);
    laurent = laurent || t.laurent();
    if (!t.is_zero()) common = denominator_union_max(common, t.denominator());
  }
  MultiPolynomial num(nvars, laurent);
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    num += lift_to_denominator(t.numerator(), t.denominator(), common);
  }
  FactoredRational out(std::move(num), std::move(common));
  if (normalize) out.normalize();
  return out;
}

FactoredRational frac_add(const FactoredRational& r, const FactoredRational& s) {
  const FactoredRational pair[] = {r, s};
  check_rank(r.nvars(), s.nvars());
  return frac_sum(pair, r.nvars());
}

FactoredRational frac_sub(const FactoredRational& r, const FactoredRational& s) {
  return frac_add(r, FactoredRational(-s.numerator(), s.denominator()));
}

FactoredRational frac_mul(const FactoredRational& r, const FactoredRational& s) {
  check_rank(r.nvars(), s.nvars());
  FactoredRational out(r.numerator() * s.numerator(),
                       denominator_sum(r.denominator(), s.denominator()));
  out.normalize();
  return out;
}

FactoredRational frac_mul(const FactoredRational& r, const MultiPolynomial& p) {
  check_rank(r.nvars(), p.nvars());
  FactoredRational out(r.numerator() * p, r.denominator());
  out.normalize();
  return out;
}

FactoredRational frac_mul_monomial(const FactoredRational& r,
                                   std::span<const Exponent> mono) {
  check_rank(r.nvars(), mono.size());
  // Monomials share no factor with binomials, so normal form is preserved.
  return FactoredRational(r.numerator().shifted(mono), r.denominator());
}

FactoredRational frac_divide_binomial(const FactoredRational& r,
                                      const BinomialFactor& f, int mult) {
  check_rank(r.nvars(), f.nvars());
  FactoredRational out(r.numerator(),
                       denominator_sum(r.denominator(), {{f, mult}}));
  out.normalize();
  return out;
}

bool frac_equal(const FactoredRational& r, const FactoredRational& s) {
  check_rank(r.nvars(), s.nvars());
  if (r.is_zero() || s.is_zero()) return r.is_zero() && s.is_zero();
  auto common = denominator_union_max(r.denominator(), s.denominator());
  return lift_to_denominator(r.numerator(), r.denominator(), common) ==
         lift_to_denominator(s.numerator(), s.denominator(), common);
}

FactoredRational remap_variables(const FactoredRational& r, std::size_t new_nvars,
                                 std::span<const std::size_t> map) {
  check_rank(r.nvars(), map.size());
  FactoredRational::Denominator den;
  for (const auto& [f, mult] : r.denominator()) {
    std::vector<Exponent> mono(new_nvars, 0);
    for (std::size_t v = 0; v < map.size(); ++v) {
      mono.at(map[v]) = checked_add(mono.at(map[v]), f.monomial()[v]);
    }
    add_factor(den, BinomialFactor(std::move(mono)), mult);
  }
  return FactoredRational(r.numerator().remapped(new_nvars, map), std::move(den));
}

std::string to_string(Grading g) { return g == Grading::Q ? "q" : "joint"; }

Grading parse_grading(const std::string& text) {
  if (text == "q") return Grading::Q;
  if (text == "joint") return Grading::Joint;
  throw ConfigError("unknown grading '" + text + "' (expected q or joint)");
}

std::vector<MultiPolynomial> series_expand(const FactoredRational& r,
                                           int order, Grading grading) {
  if (order < 0) throw ConfigError("series order must be nonnegative");
  if (r.laurent()) throw ConfigError("series expansion of a Laurent expression");
  const std::size_t n = r.nvars();
  std::vector<Exponent> weights(n, grading == Grading::Q ? 0 : 1);
  weights[0] = 1;
  auto weight_of = [&](std::span<const Exponent> e) {
    std::int64_t w = 0;
    for (std::size_t v = 0; v < n; ++v) w += static_cast<std::int64_t>(weights[v]) * e[v];
    return w;
  };
  MultiPolynomial acc = r.numerator().truncated(weights, order);
  for (const auto& [f, mult] : r.denominator()) {
    const auto step = weight_of(f.monomial());
    if (step < 1) {
      throw ConfigError(
          "grading '" + to_string(grading) + "' cannot expand factor " +
          describe(f) + " (zero weight); use joint grading");
    }
    for (int k = 0; k < mult; ++k) {
      MultiPolynomial sum = acc;
      MultiPolynomial cur = acc;
      while (true) {
        cur = cur.shifted(f.monomial()).truncated(weights, order);
        if (cur.is_zero()) break;
        sum += cur;
      }
      acc = std::move(sum);
    }
  }
  std::vector<std::vector<std::vector<Exponent>>> exps(order + 1);
  std::vector<std::vector<Rational>> coeffs(order + 1);
  for (std::size_t t = 0; t < acc.size(); ++t) {
    auto e = acc.exponents(t);
    const auto w = weight_of(e);
    std::vector<Exponent> key(e.begin(), e.end());
    if (grading == Grading::Q) key[0] = 0;
    exps[w].push_back(std::move(key));
    coeffs[w].push_back(acc.coefficient(t));
  }
  std::vector<MultiPolynomial> out;
  out.reserve(order + 1);
  for (int g = 0; g <= order; ++g) {
    out.push_back(MultiPolynomial::from_terms(n, exps[g], coeffs[g]));
  }
  return out;
}

Rational evaluate_at(const FactoredRational& r, std::span<const Rational> point) {
  check_rank(r.nvars(), point.size());
  Rational den = 1;
  for (const auto& [f, mult] : r.denominator()) {
    Rational mono = 1;
    for (std::size_t v = 0; v < point.size(); ++v) {
      if (f.monomial()[v] != 0) mono *= rational_power(point[v], f.monomial()[v]);
    }
    Rational value = 1 - mono;
    if (value == 0) throw PoleError("pole at evaluation point: factor " + describe(f) + " vanishes");
    den *= rational_power(value, mult);
  }
  return r.numerator().evaluate(point) / den;
}

Rational evaluate_at(const FactoredRational& r, const Rational& q0,
                     std::span<const Rational> zvals) {
  std::vector<Rational> point{q0};
  point.insert(point.end(), zvals.begin(), zvals.end());
  return evaluate_at(r, point);
}

}  // namespace jfun
