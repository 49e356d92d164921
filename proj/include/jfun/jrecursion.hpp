#ifndef JFUN_JRECURSION_HPP
#define JFUN_JRECURSION_HPP

#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "jfun/cartan.hpp"
#include "jfun/factored.hpp"

namespace jfun {

inline constexpr const char* kEngineVersion = "1.0.0";

// Memoized values J_alpha for one root datum. Entries are write-once:
// inserting a key again with an unequal value is an invariant violation.
// Concurrent find/insert is safe.
class JTable {
 public:
  explicit JTable(CartanDatum datum);
  JTable(JTable&&) noexcept = default;
  JTable& operator=(JTable&&) noexcept = default;

  const CartanDatum& datum() const { return datum_; }
  const std::string& engine_version() const { return engine_version_; }

  // Stable pointer to the stored value, or nullptr.
  const FactoredRational* find(const ConeVector& alpha) const;
  // Insert-if-absent. Returns the stored value. Throws InvariantError when
  // a different value is already stored under alpha.
  const FactoredRational& insert(const ConeVector& alpha, FactoredRational value);

  std::size_t size() const;
  // Copy of all entries in lexicographic order of alpha.
  std::vector<std::pair<ConeVector, FactoredRational>> entries() const;

 private:
  CartanDatum datum_;
  std::string engine_version_ = kEngineVersion;
  std::map<ConeVector, FactoredRational> entries_;
  std::unique_ptr<std::shared_mutex> mutex_ = std::make_unique<std::shared_mutex>();
};

// (q)_gamma = prod_i prod_{s=1}^{c_i} (1 - q^{d_i s}), as a factor multiset.
FactoredRational::Denominator q_pochhammer(const CartanDatum& d,
                                           const ConeVector& gamma);

// J_alpha from J_0 = 1 and
//   J_alpha = sum_{0 <= beta <= alpha} q^{(beta,beta)/2} z^{beta*} / (q)_{alpha-beta} J_beta,
// solved for J_alpha by moving the beta = alpha term to the left. All
// lower entries are computed and memoized in `table` first.
const FactoredRational& compute_j(const ConeVector& alpha, JTable& table);

// Fills the table for every beta <= bound. With threads > 1, entries of
// equal height are computed concurrently; the result does not depend on
// scheduling.
void populate(JTable& table, const ConeVector& bound, unsigned threads = 1);

// prod_{s=1}^{d} 1 / ((1 - q^s)(1 - q^s z_1)), in variables (q, z_1).
FactoredRational closed_form_sl2(int d);

// Truncation sum_{alpha <= bound} x^alpha J_alpha as (alpha, J_alpha) pairs.
std::vector<std::pair<ConeVector, FactoredRational>> generating_series(
    JTable& table, const ConeVector& bound);

// Affine type A chart with N nodes: q -> v^2 and
// z_i -> t_{i+1} t_i^{-1} u^{[i == 0]}, indices mod N (t_0 = t_N), with
// t_N eliminated through t_1 ... t_N = 1. Chart variables are ordered
// (v, u, t_1, ..., t_{N-1}); results are Laurent.
std::vector<std::string> chart_variable_names(int n_nodes);
std::vector<Exponent> chart_image(std::span<const Exponent> mono, int n_nodes);
FactoredRational affine_chart_substitute(const FactoredRational& r, int n_nodes);
// Maps a chart point (v, u, t_1..t_{N-1}) to the matching (q, z_0..z_{N-1}).
std::vector<Rational> chart_point_to_qz(std::span<const Rational> point, int n_nodes);

// Character interpretation of the computed values for the datum.
std::string interpretation(const CartanDatum& d);

}  // namespace jfun

#endif  // JFUN_JRECURSION_HPP
