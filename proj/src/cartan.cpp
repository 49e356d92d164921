#include "jfun/cartan.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <regex>
#include <set>
#include <sstream>

#include "jfun/errors.hpp"

namespace jfun {

// ---------------------------------------------------------------- ConeVector

ConeVector::ConeVector(std::vector<int> c) : coeffs(std::move(c)) {
  for (int x : coeffs) {
    if (x < 0) throw ConfigError("cone vector has a negative coefficient");
  }
}

ConeVector ConeVector::simple(std::size_t rank, std::size_t i) {
  if (i >= rank) throw ConfigError("simple root index out of range");
  std::vector<int> c(rank, 0);
  c[i] = 1;
  return ConeVector(std::move(c));
}

bool ConeVector::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](int x) { return x == 0; });
}

bool ConeVector::leq(const ConeVector& other) const {
  if (rank() != other.rank()) throw MismatchError("cone vectors of different rank");
  for (std::size_t i = 0; i < rank(); ++i) {
    if (coeffs[i] > other.coeffs[i]) return false;
  }
  return true;
}

ConeVector ConeVector::operator+(const ConeVector& rhs) const {
  if (rank() != rhs.rank()) throw MismatchError("cone vectors of different rank");
  std::vector<int> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = coeffs[i] + rhs.coeffs[i];
  return ConeVector(std::move(c));
}

ConeVector ConeVector::operator-(const ConeVector& rhs) const {
  if (rank() != rhs.rank()) throw MismatchError("cone vectors of different rank");
  std::vector<int> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    c[i] = coeffs[i] - rhs.coeffs[i];
    if (c[i] < 0) throw ConfigError("difference leaves the positive cone");
  }
  return ConeVector(std::move(c));
}

ConeVector parse_cone_vector(const std::string& text) {
  std::vector<int> c;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first == std::string::npos) throw ConfigError("empty coefficient in '" + text + "'");
    item = item.substr(first, last - first + 1);
    if (!std::all_of(item.begin(), item.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
        item.size() > 6) {
      throw ConfigError("bad coefficient '" + item + "' in '" + text + "'");
    }
    c.push_back(std::stoi(item));
  }
  if (c.empty() || (!text.empty() && text.back() == ',')) {
    throw ConfigError("bad cone vector '" + text + "'");
  }
  return ConeVector(std::move(c));
}

std::string format_cone_vector(const ConeVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.rank(); ++i) {
    if (i) out += ',';
    out += std::to_string(v.coeffs[i]);
  }
  return out;
}

// --------------------------------------------------------------- CartanDatum

namespace {

void validate_matrix(const IntMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw ConfigError("empty Cartan matrix");
  for (const auto& row : a) {
    if (row.size() != n) throw ConfigError("Cartan matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i][i] != 2) throw ConfigError("Cartan matrix diagonal entry is not 2");
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw ConfigError("positive off-diagonal Cartan entry");
      if ((a[i][j] == 0) != (a[j][i] == 0)) {
        throw ConfigError("Cartan matrix zero pattern is not symmetric");
      }
    }
  }
}

void validate_symmetrizers(const IntMatrix& a, const std::vector<int>& d) {
  const std::size_t n = a.size();
  if (d.size() != n) throw ConfigError("symmetrizer count does not match rank");
  for (int x : d) {
    if (x <= 0) throw ConfigError("symmetrizers must be positive");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (static_cast<long>(d[i]) * a[i][j] != static_cast<long>(d[j]) * a[j][i]) {
        throw ConfigError("matrix is not symmetrized by the given d (d_i a_ij != d_j a_ji)");
      }
    }
  }
}

std::vector<std::vector<std::size_t>> components_of(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::queue<std::size_t> todo;
    todo.push(s);
    comp[s] = static_cast<int>(out.size() - 1);
    while (!todo.empty()) {
      auto i = todo.front();
      todo.pop();
      out.back().push_back(i);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i && a[i][j] != 0 && comp[j] < 0) {
          comp[j] = comp[s];
          todo.push(j);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::vector<int> infer_symmetrizers(const IntMatrix& a) {
  const std::size_t n = a.size();
  std::vector<int> d(n, 0);
  for (const auto& comp : components_of(a)) {
    std::map<std::size_t, Rational> val;
    val[comp.front()] = 1;
    std::queue<std::size_t> todo;
    todo.push(comp.front());
    while (!todo.empty()) {
      auto i = todo.front();
      todo.pop();
      for (std::size_t j : comp) {
        if (j == i || a[i][j] == 0) continue;
        Rational dj = val[i] * a[i][j] / a[j][i];
        auto it = val.find(j);
        if (it == val.end()) {
          val[j] = dj;
          todo.push(j);
        } else if (it->second != dj) {
          throw ConfigError("Cartan matrix is not symmetrizable");
        }
      }
    }
    Rational lo = val.begin()->second;
    for (auto& [i, v] : val) lo = std::min(lo, v);
    for (auto& [i, v] : val) {
      Rational scaled = v / lo;
      if (scaled.get_den() != 1) {
        throw ConfigError("symmetrizers cannot be normalized to integers with minimum 1");
      }
      d[i] = static_cast<int>(scaled.get_num().get_si());
    }
  }
  return d;
}

// Leading principal minors of an integer matrix, exactly.
std::vector<Rational> leading_minors(const IntMatrix& b) {
  const std::size_t n = b.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = b[i][j];
  std::vector<Rational> minors;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      // A zero pivot on a leading position: the remaining leading minors of
      // this elimination order are not positive.
      minors.push_back(0);
      for (std::size_t r = k + 1; r < n; ++r) minors.push_back(0);
      return minors;
    }
    det *= m[k][k];
    minors.push_back(det);
    for (std::size_t r = k + 1; r < n; ++r) {
      Rational f = m[r][k] / m[k][k];
      for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
  }
  return minors;
}

bool positive_definite(const IntMatrix& b) {
  for (const auto& x : leading_minors(b)) {
    if (x <= 0) return false;
  }
  return true;
}

IntMatrix principal_submatrix(const IntMatrix& b, const std::vector<std::size_t>& idx) {
  IntMatrix out(idx.size(), std::vector<int>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out[i][j] = b[idx[i]][idx[j]];
  return out;
}

Rational determinant(const IntMatrix& b) {
  const std::size_t n = b.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = b[i][j];
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t r = k + 1; r < n; ++r) {
      Rational f = m[r][k] / m[k][k];
      for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
    }
  }
  return det;
}

// Positive semidefinite with a one-dimensional kernel, per connected
// component: det = 0 and some corank-one principal submatrix is definite.
bool affine_semidefinite(const IntMatrix& b) {
  if (determinant(b) != 0) return false;
  const std::size_t n = b.size();
  for (std::size_t drop = 0; drop < n; ++drop) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < n; ++i)
      if (i != drop) keep.push_back(i);
    if (positive_definite(principal_submatrix(b, keep))) return true;
  }
  return false;
}

IntMatrix symmetrized(const IntMatrix& a, const std::vector<int>& d) {
  IntMatrix b = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) b[i][j] = d[i] * a[i][j];
  return b;
}

}  // namespace

CartanDatum::CartanDatum(std::string label, IntMatrix matrix,
                         std::vector<int> symmetrizers, bool affine,
                         bool conjectural)
    : label_(std::move(label)),
      matrix_(std::move(matrix)),
      symmetrizers_(std::move(symmetrizers)),
      affine_(affine),
      conjectural_(conjectural) {
  validate_matrix(matrix_);
  validate_symmetrizers(matrix_, symmetrizers_);
  for (const auto& comp : components_of(matrix_)) {
    int lo = symmetrizers_[comp.front()];
    for (auto i : comp) lo = std::min(lo, symmetrizers_[i]);
    if (lo != 1) throw ConfigError("symmetrizers must have minimum 1 on each component");
  }
  form_ = symmetrized(matrix_, symmetrizers_);
}

bool CartanDatum::simply_laced() const {
  return std::all_of(symmetrizers_.begin(), symmetrizers_.end(),
                     [](int x) { return x == 1; });
}

std::vector<std::string> CartanDatum::variable_names() const {
  std::vector<std::string> names{"q"};
  const int offset = affine_ ? 0 : 1;
  for (std::size_t i = 0; i < rank(); ++i) {
    names.push_back("z" + std::to_string(static_cast<int>(i) + offset));
  }
  return names;
}

void CartanDatum::check(const ConeVector& v) const {
  if (v.rank() != rank()) {
    throw MismatchError("cone vector of rank " + std::to_string(v.rank()) +
                        " used with datum " + label_ + " of rank " +
                        std::to_string(rank()));
  }
}

std::int64_t CartanDatum::form_pair(const ConeVector& beta,
                                    const ConeVector& gamma) const {
  check(beta);
  check(gamma);
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (beta.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j) {
      sum += static_cast<std::int64_t>(beta.coeffs[i]) * form_[i][j] * gamma.coeffs[j];
    }
  }
  return sum;
}

std::int64_t CartanDatum::norm_half(const ConeVector& beta) const {
  const auto two = form_pair(beta, beta);
  if (two % 2 != 0) throw InvariantError("odd value of (beta,beta)");
  return two / 2;
}

std::int64_t CartanDatum::lattice_pair(const std::vector<std::int64_t>& beta,
                                       const std::vector<std::int64_t>& gamma) const {
  if (beta.size() != rank() || gamma.size() != rank()) {
    throw MismatchError("lattice vector rank mismatch for " + label_);
  }
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) sum += beta[i] * form_[i][j] * gamma[j];
  return sum;
}

std::vector<Exponent> CartanDatum::eigencharacter(const ConeVector& alpha) const {
  const auto a = norm_half(alpha);
  if (a > std::numeric_limits<Exponent>::max()) throw OverflowError("eigencharacter exponent overflow");
  std::vector<Exponent> mono{static_cast<Exponent>(a)};
  auto star = star_monomial(alpha);
  mono.insert(mono.end(), star.begin(), star.end());
  return mono;
}

// ------------------------------------------------------------ type catalog

namespace {

IntMatrix path_matrix(std::size_t n) {
  IntMatrix a(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

void link(IntMatrix& a, std::size_t i, std::size_t j) { a[i][j] = a[j][i] = -1; }

IntMatrix finite_matrix(char letter, int n) {
  const auto r = static_cast<std::size_t>(n);
  switch (letter) {
    case 'A':
      if (n < 1) break;
      return path_matrix(r);
    case 'B': {
      if (n < 2) break;
      auto a = path_matrix(r);
      a[r - 2][r - 1] = -2;
      return a;
    }
    case 'C': {
      if (n < 2) break;
      auto a = path_matrix(r);
      a[r - 1][r - 2] = -2;
      return a;
    }
    case 'D': {
      if (n < 4) break;
      IntMatrix a(r, std::vector<int>(r, 0));
      for (std::size_t i = 0; i < r; ++i) a[i][i] = 2;
      for (std::size_t i = 0; i + 2 < r; ++i) link(a, i, i + 1);
      link(a, r - 3, r - 1);
      return a;
    }
    case 'E': {
      if (n < 6 || n > 8) break;
      IntMatrix a(r, std::vector<int>(r, 0));
      for (std::size_t i = 0; i < r; ++i) a[i][i] = 2;
      link(a, 0, 2);
      link(a, 1, 3);
      for (std::size_t i = 2; i + 1 < r; ++i) link(a, i, i + 1);
      return a;
    }
    case 'F': {
      if (n != 4) break;
      auto a = path_matrix(4);
      a[1][2] = -2;
      return a;
    }
    case 'G':
      if (n != 2) break;
      return {{2, -1}, {-3, 2}};
    default:
      break;
  }
  throw UnsupportedTypeError(std::string("no simple Lie algebra of type ") + letter +
                             std::to_string(n));
}

// Positive roots of a finite datum as coefficient vectors, by closing the
// simple roots under simple reflections that stay positive.
std::vector<std::vector<int>> positive_roots(const IntMatrix& b,
                                             const std::vector<int>& d) {
  const std::size_t n = b.size();
  std::set<std::vector<int>> seen;
  std::queue<std::vector<int>> todo;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    todo.push(e);
  }
  while (!todo.empty()) {
    auto beta = todo.front();
    todo.pop();
    for (std::size_t i = 0; i < n; ++i) {
      long pair = 0;
      for (std::size_t j = 0; j < n; ++j) pair += static_cast<long>(beta[j]) * b[j][i];
      if (pair % d[i] != 0) throw InvariantError("non-integral reflection coefficient");
      auto image = beta;
      image[i] -= static_cast<int>(pair / d[i]);
      if (image[i] < 0) continue;
      if (seen.insert(image).second) todo.push(image);
    }
  }
  return {seen.begin(), seen.end()};
}

// Untwisted affinization: prepend the node alpha_0 = delta - theta.
CartanDatum affinize(const CartanDatum& fin, std::string label, bool conjectural) {
  const auto& b = fin.form();
  const auto& d = fin.symmetrizers();
  const std::size_t n = fin.rank();
  const auto roots = positive_roots(b, d);
  const auto& theta = *std::max_element(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
    return std::accumulate(x.begin(), x.end(), 0) < std::accumulate(y.begin(), y.end(), 0);
  });
  std::vector<long> theta_dot(n, 0);  // (theta, alpha_j)
  long theta_sq = 0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) theta_dot[j] += static_cast<long>(theta[k]) * b[k][j];
    theta_sq += theta[j] * theta_dot[j];
  }
  const long d0 = theta_sq / 2;
  IntMatrix a(n + 1, std::vector<int>(n + 1, 0));
  std::vector<int> sym(n + 1);
  sym[0] = static_cast<int>(d0);
  a[0][0] = 2;
  for (std::size_t j = 0; j < n; ++j) {
    sym[j + 1] = d[j];
    for (std::size_t k = 0; k < n; ++k) a[j + 1][k + 1] = fin.matrix()[j][k];
    const long b0j = -theta_dot[j];
    if (b0j % d0 != 0 || b0j % d[j] != 0) throw InvariantError("non-integral affine Cartan entry");
    a[0][j + 1] = static_cast<int>(b0j / d0);
    a[j + 1][0] = static_cast<int>(b0j / d[j]);
  }
  return CartanDatum(std::move(label), std::move(a), std::move(sym), true, conjectural);
}

CartanDatum parse_simple(const std::string& text, const ParseOptions& opts) {
  static const std::regex twisted(R"(^[A-G][0-9]+(\^\([0-9]+\)|~[0-9]+)$)");
  static const std::regex simple(R"(^([A-G])([0-9]{1,3})(~?)$)");
  if (std::regex_match(text, twisted)) {
    throw UnsupportedTypeError("twisted affine type '" + text + "' is not supported");
  }
  std::smatch m;
  if (!std::regex_match(text, m, simple)) {
    throw MalformedTypeError("malformed type label '" + text +
                             "' (expected e.g. A3, G2, A2~)");
  }
  const char letter = m[1].str()[0];
  const int n = std::stoi(m[2].str());
  const bool affine = !m[3].str().empty();
  auto mat = finite_matrix(letter, n);
  CartanDatum fin(text, mat, infer_symmetrizers(mat), false);
  if (!affine) return fin;
  if (letter != 'A' && !opts.unverified_affine) {
    throw UnsupportedTypeError("affine type '" + text +
                               "' is only supported behind --unverified-affine");
  }
  return affinize(fin, text, letter != 'A');
}

}  // namespace

CartanDatum parse_cartan_type(const std::string& text, ParseOptions opts) {
  if (text.empty()) throw MalformedTypeError("empty type label");
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, 'x')) parts.push_back(item);
  if (parts.empty() || text.back() == 'x') throw MalformedTypeError("malformed type label '" + text + "'");
  CartanDatum out = parse_simple(parts.front(), opts);
  for (std::size_t k = 1; k < parts.size(); ++k) {
    out = direct_sum(out, parse_simple(parts[k], opts));
  }
  return out;
}

CartanDatum make_custom_datum(std::string label, const IntMatrix& matrix,
                              std::optional<std::vector<int>> symmetrizers,
                              bool affine, ParseOptions opts) {
  validate_matrix(matrix);
  std::vector<int> d = symmetrizers ? *symmetrizers : infer_symmetrizers(matrix);
  validate_symmetrizers(matrix, d);
  const auto b = symmetrized(matrix, d);
  bool conjectural = false;
  if (affine) {
    if (components_of(matrix).size() != 1) {
      throw ConfigError("affine custom matrices must be connected");
    }
    if (!affine_semidefinite(b)) {
      throw ConfigError("affine matrix: symmetrized form is not semidefinite with 1-dim kernel");
    }
    const std::size_t n = matrix.size();
    const bool type_a = n >= 2 && [&] {
      auto expect = parse_cartan_type("A" + std::to_string(n - 1) + "~");
      return expect.matrix() == matrix;
    }();
    if (!type_a) {
      if (!opts.unverified_affine) {
        throw UnsupportedTypeError(
            "custom affine matrix is not of type A~; pass --unverified-affine");
      }
      conjectural = true;
    }
  } else if (!positive_definite(b)) {
    throw ConfigError("finite custom matrix: symmetrized form is not positive definite");
  }
  return CartanDatum(std::move(label), matrix, std::move(d), affine, conjectural);
}

CartanDatum direct_sum(const CartanDatum& a, const CartanDatum& b) {
  const std::size_t n = a.rank() + b.rank();
  IntMatrix m(n, std::vector<int>(n, 0));
  std::vector<int> d;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) m[i][j] = a.matrix()[i][j];
    d.push_back(a.symmetrizers()[i]);
  }
  for (std::size_t i = 0; i < b.rank(); ++i) {
    for (std::size_t j = 0; j < b.rank(); ++j) m[a.rank() + i][a.rank() + j] = b.matrix()[i][j];
    d.push_back(b.symmetrizers()[i]);
  }
  return CartanDatum(a.label() + "x" + b.label(), std::move(m), std::move(d),
                     a.affine() || b.affine(), a.conjectural() || b.conjectural());
}

CartanDatum restrict_datum(const CartanDatum& d, const std::vector<std::size_t>& nodes) {
  std::vector<int> sym;
  std::string label = d.label() + "|";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (nodes[k] >= d.rank()) throw ConfigError("restrict_datum: node index out of range");
    sym.push_back(d.symmetrizers()[nodes[k]]);
    label += (k ? "," : "") + std::to_string(nodes[k] + 1);
  }
  const auto sub = principal_submatrix(d.matrix(), nodes);
  // Re-normalize so each component has minimum symmetrizer 1.
  auto inferred = infer_symmetrizers(sub);
  return CartanDatum(label, sub, inferred, false);
}

std::vector<std::vector<std::size_t>> connected_components(const CartanDatum& d) {
  return components_of(d.matrix());
}

// ------------------------------------------------------- cone combinatorics

int height(const ConeVector& gamma) {
  return std::accumulate(gamma.coeffs.begin(), gamma.coeffs.end(), 0);
}

std::vector<ConeVector> interval_below(const ConeVector& alpha) {
  std::vector<ConeVector> out;
  std::vector<int> cur(alpha.rank(), 0);
  while (true) {
    out.emplace_back(cur);
    // Odometer increment, last coordinate fastest: lexicographic order.
    std::size_t k = alpha.rank();
    while (k > 0) {
      --k;
      if (cur[k] < alpha.coeffs[k]) {
        ++cur[k];
        break;
      }
      cur[k] = 0;
      if (k == 0) return out;
    }
    if (alpha.rank() == 0) return out;
  }
}

std::vector<ConeVector> cone_up_to_height(std::size_t rank, int bound) {
  std::vector<ConeVector> out;
  std::vector<int> cur(rank, 0);
  auto rec = [&](auto& self, std::size_t pos, int left) -> void {
    if (pos == rank) {
      out.emplace_back(cur);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      cur[pos] = c;
      self(self, pos + 1, left - c);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, bound);
  std::stable_sort(out.begin(), out.end(), [](const ConeVector& x, const ConeVector& y) {
    return height(x) < height(y);
  });
  return out;
}

std::vector<Exponent> star_monomial(const ConeVector& beta) {
  return {beta.coeffs.begin(), beta.coeffs.end()};
}

// ------------------------------------------------------------ statistics

std::vector<int> vanishing_orders(const CartanDatum& d, bool allow_affine) {
  if (d.affine() && !allow_affine) {
    throw ConfigError("vanishing orders are established for finite types only");
  }
  return d.symmetrizers();
}

std::int64_t discrepancy(const CartanDatum& d, const ConeVector& alpha) {
  d.check(alpha);
  if (d.affine() || !d.simply_laced()) {
    throw ConfigError("discrepancy formula holds for simply-laced finite types only");
  }
  if (alpha.is_zero()) throw ConfigError("discrepancy needs a nonzero alpha");
  return height(alpha) + d.norm_half(alpha) - 2;
}

std::int64_t deligne_pair(std::int64_t n1, std::int64_t n2) {
  return (n1 + n2 + 1) * (n1 + n2) - (n1 + 1) * n1 - (n2 + 1) * n2;
}

std::int64_t det_character(const CartanDatum& d, const std::vector<std::int64_t>& gamma) {
  if (gamma.size() != d.rank()) throw MismatchError("lattice vector rank mismatch");
  const auto& b = d.form();
  std::int64_t m = 0;
  for (std::size_t i = 0; i < d.rank(); ++i) {
    m += (b[i][i] / 2) * deligne_pair(gamma[i], gamma[i]);
    for (std::size_t j = i + 1; j < d.rank(); ++j) {
      m += b[i][j] * deligne_pair(gamma[i], gamma[j]);
    }
  }
  return m;
}

}  // namespace jfun
