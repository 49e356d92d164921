#ifndef JFUN_CARTAN_HPP
#define JFUN_CARTAN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jfun/polynomial.hpp"

namespace jfun {

using IntMatrix = std::vector<std::vector<int>>;

// A point of the positive cone: nonnegative coefficients over the simple
// roots. Belongs to a root datum by its length only; operations taking a
// datum check the length.
struct ConeVector {
  std::vector<int> coeffs;

  ConeVector() = default;
  explicit ConeVector(std::vector<int> c);
  static ConeVector zero(std::size_t rank) { return ConeVector(std::vector<int>(rank, 0)); }
  static ConeVector simple(std::size_t rank, std::size_t i);

  std::size_t rank() const { return coeffs.size(); }
  bool is_zero() const;
  // Componentwise order.
  bool leq(const ConeVector& other) const;

  ConeVector operator+(const ConeVector& rhs) const;
  // Throws ConfigError when the difference leaves the cone.
  ConeVector operator-(const ConeVector& rhs) const;

  auto operator<=>(const ConeVector&) const = default;
};

// Parses "1,2,0" (whitespace tolerated). Throws ConfigError.
ConeVector parse_cone_vector(const std::string& text);
std::string format_cone_vector(const ConeVector& v);

// Cartan matrix a_ij with symmetrizers d_i such that b_ij = d_i a_ij is
// symmetric and min d_i = 1 on every connected component.
//
// Finite labels use the matrices of the Bourbaki plates; index i of a
// cone vector is the i-th simple root in that numbering. Affine labels
// put the extending node first (index 0), then the finite nodes.
class CartanDatum {
 public:
  CartanDatum(std::string label, IntMatrix matrix, std::vector<int> symmetrizers,
              bool affine, bool conjectural = false);

  const std::string& label() const { return label_; }
  std::size_t rank() const { return matrix_.size(); }
  const IntMatrix& matrix() const { return matrix_; }
  const std::vector<int>& symmetrizers() const { return symmetrizers_; }
  // b_ij = d_i a_ij.
  const IntMatrix& form() const { return form_; }
  bool affine() const { return affine_; }
  // Outputs computed from this datum are not backed by proven results
  // (affine beyond type A, loaded through the escape hatch).
  bool conjectural() const { return conjectural_; }
  bool simply_laced() const;
  // Number of variables in polynomials over this datum: q, z_1..z_r.
  std::size_t nvars() const { return rank() + 1; }
  // Rendering names of those variables ("q", "z1", ... or "z0", ... affine).
  std::vector<std::string> variable_names() const;

  // Sum over i, j of beta_i b_ij gamma_j.
  std::int64_t form_pair(const ConeVector& beta, const ConeVector& gamma) const;
  std::int64_t norm_half(const ConeVector& beta) const;
  // Same bilinear form on the full lattice (negative entries allowed).
  std::int64_t lattice_pair(const std::vector<std::int64_t>& beta,
                            const std::vector<std::int64_t>& gamma) const;

  // Exponent vector [(alpha,alpha)/2, alpha_1, ..., alpha_r] of the
  // eigencharacter q^{(alpha,alpha)/2} z^{alpha*}.
  std::vector<Exponent> eigencharacter(const ConeVector& alpha) const;

  void check(const ConeVector& v) const;

  bool operator==(const CartanDatum& rhs) const {
    return matrix_ == rhs.matrix_ && symmetrizers_ == rhs.symmetrizers_ &&
           affine_ == rhs.affine_;
  }

 private:
  std::string label_;
  IntMatrix matrix_;
  std::vector<int> symmetrizers_;
  IntMatrix form_;
  bool affine_;
  bool conjectural_;
};

struct ParseOptions {
  // Accept untwisted affine labels outside type A (outputs tagged conjectural).
  bool unverified_affine = false;
};

// "A3", "G2", "A2~", and direct sums such as "A1xA1".
CartanDatum parse_cartan_type(const std::string& text, ParseOptions opts = {});

// Validates a, infers symmetrizers when not given, and checks definiteness
// (positive definite, or semidefinite with one-dimensional kernel when
// affine). Throws ConfigError on invalid input.
CartanDatum make_custom_datum(std::string label, const IntMatrix& matrix,
                              std::optional<std::vector<int>> symmetrizers,
                              bool affine, ParseOptions opts = {});

CartanDatum direct_sum(const CartanDatum& a, const CartanDatum& b);

// Principal sub-datum on the given node indices (ascending or not; the
// order defines the new numbering).
CartanDatum restrict_datum(const CartanDatum& d, const std::vector<std::size_t>& nodes);

// Connected components of the Dynkin diagram, each sorted ascending.
std::vector<std::vector<std::size_t>> connected_components(const CartanDatum& d);

// Sum of coefficients.
int height(const ConeVector& gamma);

// All beta with 0 <= beta <= alpha, lexicographically increasing.
std::vector<ConeVector> interval_below(const ConeVector& alpha);

// All cone vectors of the given rank with height at most bound, ordered by
// height and then lexicographically.
std::vector<ConeVector> cone_up_to_height(std::size_t rank, int bound);

// Exponents of z^{beta*}: the coroot/root bases are matched index by index.
std::vector<Exponent> star_monomial(const ConeVector& beta);

// Order of vanishing of the boundary equation along each boundary
// component; equal to d_i. Finite types only unless extrapolation is
// allowed.
std::vector<int> vanishing_orders(const CartanDatum& d, bool allow_affine = false);

// |alpha| + (alpha,alpha)/2 - 2; simply-laced finite types, alpha != 0.
std::int64_t discrepancy(const CartanDatum& d, const ConeVector& alpha);

// (n1+n2+1)(n1+n2) - (n1+1)n1 - (n2+1)n2.
std::int64_t deligne_pair(std::int64_t n1, std::int64_t n2);

// Weight of the determinant bundle fiber, assembled from Deligne pairings of
// the coordinate line bundles.
std::int64_t det_character(const CartanDatum& d, const std::vector<std::int64_t>& gamma);

}  // namespace jfun

#endif  // JFUN_CARTAN_HPP
