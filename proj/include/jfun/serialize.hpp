#ifndef JFUN_SERIALIZE_HPP
#define JFUN_SERIALIZE_HPP

#include <json.hpp>

#include <span>
#include <string>
#include <vector>

#include "jfun/factored.hpp"

namespace jfun {

// Canonical form used by the cache and the JSON emitter:
//   {"den":[{"a":1,"m":[0,1],"mult":1},...],
//    "num":[["1/1",[0,0,0]],...],
//    "nvars":3}
// Coefficients are always "num/den"; terms are in graded lex order and
// factors in (a, m) order, so equal structures give equal bytes.
nlohmann::json to_json(const MultiPolynomial& p);
nlohmann::json to_json(const FactoredRational& r);
std::string serialize(const FactoredRational& r);

// Inverse of serialize. Throws ConfigError on malformed input; the result
// is re-canonicalized (terms sorted, zeros dropped).
MultiPolynomial polynomial_from_json(const nlohmann::json& j, std::size_t nvars,
                                     bool laurent = false);
FactoredRational factored_from_json(const nlohmann::json& j);
FactoredRational deserialize(const std::string& text);

std::string format_rational(const Rational& c);
Rational parse_rational(const std::string& text);

// Human-readable rendering, e.g. "q^2 z1 z2", "1 + q z1",
// "(1 + q^2 z1) / ((1 - q)(1 - q^2)(1 - q z1))".
std::string render_monomial(std::span<const Exponent> exps,
                            const std::vector<std::string>& names);
std::string render_polynomial(const MultiPolynomial& p,
                              const std::vector<std::string>& names);
std::string render_factored(const FactoredRational& r,
                            const std::vector<std::string>& names);

// LaTeX math (no surrounding delimiters).
std::string latex_polynomial(const MultiPolynomial& p,
                             const std::vector<std::string>& names);
std::string latex_factored(const FactoredRational& r,
                           const std::vector<std::string>& names);

// Hex SHA-256 digest, used for cache entry checksums and file names.
std::string sha256_hex(const std::string& bytes);

}  // namespace jfun

#endif  // JFUN_SERIALIZE_HPP
