#include "jfun/jrecursion.hpp"

#include <algorithm>
#include <mutex>
#include <thread>

#include "jfun/errors.hpp"

namespace jfun {

JTable::JTable(CartanDatum datum) : datum_(std::move(datum)) {
  entries_.emplace(ConeVector::zero(datum_.rank()),
                   FactoredRational::one(datum_.nvars()));
}

const FactoredRational* JTable::find(const ConeVector& alpha) const {
  std::shared_lock lock(*mutex_);
  auto it = entries_.find(alpha);
  return it == entries_.end() ? nullptr : &it->second;
}

const FactoredRational& JTable::insert(const ConeVector& alpha,
                                       FactoredRational value) {
  datum_.check(alpha);
  if (value.nvars() != datum_.nvars()) {
    throw MismatchError("value has the wrong number of variables for " + datum_.label());
  }
  std::unique_lock lock(*mutex_);
  auto [it, inserted] = entries_.try_emplace(alpha, std::move(value));
  if (!inserted && !(it->second == value) && !frac_equal(it->second, value)) {
    throw InvariantError("conflicting values for J_(" + format_cone_vector(alpha) + ")");
  }
  return it->second;
}

std::size_t JTable::size() const {
  std::shared_lock lock(*mutex_);
  return entries_.size();
}

std::vector<std::pair<ConeVector, FactoredRational>> JTable::entries() const {
  std::shared_lock lock(*mutex_);
  return {entries_.begin(), entries_.end()};
}

FactoredRational::Denominator q_pochhammer(const CartanDatum& d,
                                           const ConeVector& gamma) {
  d.check(gamma);
  FactoredRational::Denominator out;
  const std::vector<Exponent> no_z(d.rank(), 0);
  for (std::size_t i = 0; i < d.rank(); ++i) {
    for (int s = 1; s <= gamma.coeffs[i]; ++s) {
      BinomialFactor f(checked_mul(d.symmetrizers()[i], s), no_z);
      out = denominator_sum(out, {{f, 1}});
    }
  }
  return out;
}

namespace {

// Pivot-extracted solve for one entry; every beta < alpha must be present.
FactoredRational solve_entry(const ConeVector& alpha, const JTable& table) {
  const CartanDatum& d = table.datum();
  std::vector<FactoredRational> terms;
  for (const auto& beta : interval_below(alpha)) {
    if (beta == alpha) continue;
    const FactoredRational* jb = table.find(beta);
    if (jb == nullptr) {
      throw InvariantError("J_(" + format_cone_vector(beta) + ") missing while solving J_(" +
                           format_cone_vector(alpha) + ")");
    }
    terms.emplace_back(jb->numerator().shifted(d.eigencharacter(beta)),
                       denominator_sum(jb->denominator(), q_pochhammer(d, alpha - beta)));
  }
  FactoredRational sum = frac_sum(terms, d.nvars(), /*normalize=*/false);
  // The pivot 1 - q^{(alpha,alpha)/2} z^{alpha*} is never constant for
  // alpha != 0 because z^{alpha*} != 1.
  BinomialFactor pivot(d.eigencharacter(alpha));
  FactoredRational out(sum.numerator(), denominator_sum(sum.denominator(), {{pivot, 1}}));
  out.normalize();
  return out;
}

}  // namespace

const FactoredRational& compute_j(const ConeVector& alpha, JTable& table) {
  table.datum().check(alpha);
  if (const auto* hit = table.find(alpha)) return *hit;
  // Lexicographic order lists every beta before any gamma >= beta.
  for (const auto& beta : interval_below(alpha)) {
    if (table.find(beta) != nullptr) continue;
    table.insert(beta, solve_entry(beta, table));
  }
  return *table.find(alpha);
}

void populate(JTable& table, const ConeVector& bound, unsigned threads) {
  table.datum().check(bound);
  if (threads <= 1) {
    compute_j(bound, table);
    return;
  }
  std::map<int, std::vector<ConeVector>> levels;
  for (auto& beta : interval_below(bound)) levels[height(beta)].push_back(beta);
  for (auto& [h, level] : levels) {
    std::vector<ConeVector> todo;
    for (auto& beta : level) {
      if (table.find(beta) == nullptr) todo.push_back(beta);
    }
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(todo.size()));
    for (unsigned w = 0; w < n; ++w) {
      pool.emplace_back([&, w] {
        try {
          for (std::size_t k = w; k < todo.size(); k += n) {
            table.insert(todo[k], solve_entry(todo[k], table));
          }
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }
}

FactoredRational closed_form_sl2(int d) {
  if (d < 0) throw ConfigError("closed_form_sl2 needs d >= 0");
  FactoredRational::Denominator den;
  for (int s = 1; s <= d; ++s) {
    const std::vector<Exponent> z0{0};
    const std::vector<Exponent> z1{1};
    den = denominator_sum(den, {{BinomialFactor(s, z0), 1}, {BinomialFactor(s, z1), 1}});
  }
  return FactoredRational(MultiPolynomial::constant(2, 1), std::move(den));
}

std::vector<std::pair<ConeVector, FactoredRational>> generating_series(
    JTable& table, const ConeVector& bound) {
  compute_j(bound, table);
  std::vector<std::pair<ConeVector, FactoredRational>> out;
  for (const auto& alpha : interval_below(bound)) {
    out.emplace_back(alpha, *table.find(alpha));
  }
  return out;
}

// ------------------------------------------------------------ affine chart

std::vector<std::string> chart_variable_names(int n_nodes) {
  std::vector<std::string> names{"v", "u"};
  for (int j = 1; j < n_nodes; ++j) names.push_back("t" + std::to_string(j));
  return names;
}

std::vector<Exponent> chart_image(std::span<const Exponent> mono, int n_nodes) {
  if (n_nodes < 2) throw ConfigError("affine chart needs at least 2 nodes");
  const auto n = static_cast<std::size_t>(n_nodes);
  if (mono.size() != n + 1) throw MismatchError("chart substitution: wrong number of variables");
  // Image layout: [v, u, t_1 .. t_{N-1}]. t_N (= t_0) contributes -1 to
  // every t_j after elimination.
  std::vector<Exponent> out(n + 1, 0);
  out[0] = checked_mul(2, mono[0]);
  auto add_t = [&](std::size_t j, Exponent e) {
    const std::size_t jj = j % n;
    if (jj == 0) {
      for (std::size_t k = 1; k < n; ++k) out[k + 1] = checked_add(out[k + 1], -e);
    } else {
      out[jj + 1] = checked_add(out[jj + 1], e);
    }
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Exponent c = mono[i + 1];
    if (c == 0) continue;
    add_t(i + 1, c);
    add_t(i, -c);
    if (i == 0) out[1] = checked_add(out[1], c);
  }
  return out;
}

FactoredRational affine_chart_substitute(const FactoredRational& r, int n_nodes) {
  const auto n = static_cast<std::size_t>(n_nodes);
  if (r.nvars() != n + 1) throw MismatchError("chart substitution: wrong number of variables");
  std::vector<std::vector<Exponent>> exps;
  std::vector<Rational> coeffs;
  for (std::size_t t = 0; t < r.numerator().size(); ++t) {
    exps.push_back(chart_image(r.numerator().exponents(t), n_nodes));
    coeffs.push_back(r.numerator().coefficient(t));
  }
  auto num = MultiPolynomial::from_terms(n + 1, exps, coeffs, /*laurent=*/true);
  FactoredRational::Denominator den;
  for (const auto& [f, mult] : r.denominator()) {
    den = denominator_sum(den, {{BinomialFactor(chart_image(f.monomial(), n_nodes)), mult}});
  }
  return FactoredRational(std::move(num), std::move(den));
}

std::vector<Rational> chart_point_to_qz(std::span<const Rational> point, int n_nodes) {
  const auto n = static_cast<std::size_t>(n_nodes);
  if (point.size() != n + 1) throw MismatchError("chart point has the wrong length");
  // t[0] = t[N] = 1 / (t_1 ... t_{N-1}).
  std::vector<Rational> t(n + 1);
  Rational prod = 1;
  for (std::size_t j = 1; j < n; ++j) {
    t[j] = point[j + 1];
    prod *= t[j];
  }
  if (prod == 0) throw PoleError("chart point has a vanishing t coordinate");
  t[0] = t[n] = 1 / prod;
  std::vector<Rational> out{point[0] * point[0]};
  for (std::size_t i = 0; i < n; ++i) {
    Rational z = t[i + 1] / t[i];
    if (i == 0) z *= point[1];
    out.push_back(z);
  }
  return out;
}

std::string interpretation(const CartanDatum& d) {
  if (d.conjectural()) return "conjectural: recursion output only (unverified affine type)";
  if (d.affine()) return "character of C[Z^alpha] for the affine type A zastava";
  if (d.simply_laced()) return "character of C[Z^alpha]";
  return "character of the folded-model scheme Z^alpha-hat (not the character of C[Z^alpha])";
}

}  // namespace jfun
