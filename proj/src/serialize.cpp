#include "jfun/serialize.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>

#include "jfun/errors.hpp"

namespace jfun {

std::string format_rational(const Rational& c) {
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational out;
  const auto slash = text.find('/');
  if (slash == std::string::npos || text.find('/', slash + 1) != std::string::npos) {
    throw ConfigError("coefficient '" + text + "' is not of the form num/den");
  }
  try {
    mpz_class num(text.substr(0, slash), 10);
    mpz_class den(text.substr(slash + 1), 10);
    if (den <= 0) throw ConfigError("coefficient '" + text + "' has a nonpositive denominator");
    out = Rational(num, den);
    out.canonicalize();
  } catch (const std::invalid_argument&) {
    throw ConfigError("coefficient '" + text + "' is not a rational number");
  }
  return out;
}

nlohmann::json to_json(const MultiPolynomial& p) {
  auto terms = nlohmann::json::array();
  for (std::size_t t = 0; t < p.size(); ++t) {
    auto e = p.exponents(t);
    terms.push_back({format_rational(p.coefficient(t)), std::vector<Exponent>(e.begin(), e.end())});
  }
  return terms;
}

nlohmann::json to_json(const FactoredRational& r) {
  auto den = nlohmann::json::array();
  for (const auto& [f, mult] : r.denominator()) {
    auto m = f.m();
    den.push_back({{"a", f.a()}, {"m", std::vector<Exponent>(m.begin(), m.end())}, {"mult", mult}});
  }
  return {{"nvars", r.nvars()}, {"num", to_json(r.numerator())}, {"den", den}};
}

std::string serialize(const FactoredRational& r) { return to_json(r).dump(); }

MultiPolynomial polynomial_from_json(const nlohmann::json& j, std::size_t nvars,
                                     bool laurent) {
  if (!j.is_array()) throw ConfigError("polynomial terms must be an array");
  std::vector<std::vector<Exponent>> exps;
  std::vector<Rational> coeffs;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[0].is_string() || !term[1].is_array()) {
      throw ConfigError("malformed polynomial term " + term.dump());
    }
    auto e = term[1].get<std::vector<Exponent>>();
    if (e.size() != nvars) throw ConfigError("exponent vector of wrong length in " + term.dump());
    exps.push_back(std::move(e));
    coeffs.push_back(parse_rational(term[0].get<std::string>()));
  }
  return MultiPolynomial::from_terms(nvars, exps, coeffs, laurent);
}

FactoredRational factored_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || !j.contains("nvars") || !j.contains("num") || !j.contains("den")) {
      throw ConfigError("factored rational needs nvars, num and den");
    }
    const auto nvars = j.at("nvars").get<std::size_t>();
    if (nvars == 0) throw ConfigError("nvars must be positive");
    bool laurent = false;
    FactoredRational::Denominator den;
    for (const auto& f : j.at("den")) {
      auto m = f.at("m").get<std::vector<Exponent>>();
      if (m.size() + 1 != nvars) throw ConfigError("denominator factor of wrong length");
      const auto mult = f.at("mult").get<int>();
      if (mult <= 0) throw ConfigError("denominator multiplicity must be positive");
      BinomialFactor factor(f.at("a").get<Exponent>(), m);
      for (auto e : factor.monomial()) laurent = laurent || e < 0;
      den.emplace_back(std::move(factor), mult);
    }
    for (const auto& term : j.at("num")) {
      if (term.is_array() && term.size() == 2 && term[1].is_array()) {
        for (const auto& e : term[1]) laurent = laurent || (e.is_number_integer() && e.get<long>() < 0);
      }
    }
    return FactoredRational(polynomial_from_json(j.at("num"), nvars, laurent), std::move(den));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed factored rational: ") + e.what());
  } catch (const InvariantError& e) {
    throw ConfigError(std::string("malformed factored rational: ") + e.what());
  }
}

FactoredRational deserialize(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("unparsable factored rational: ") + e.what());
  }
  return factored_from_json(j);
}

// --------------------------------------------------------------- rendering

std::string render_monomial(std::span<const Exponent> exps,
                            const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] == 0) continue;
    if (!out.empty()) out += ' ';
    out += names.at(v);
    if (exps[v] != 1) out += "^" + std::to_string(exps[v]);
  }
  return out.empty() ? "1" : out;
}

namespace {

bool all_zero(std::span<const Exponent> e) {
  for (auto x : e)
    if (x != 0) return false;
  return true;
}

std::string coefficient_text(const Rational& c) {
  return c.get_den() == 1 ? c.get_num().get_str() : c.get_str();
}

std::string latex_name(const std::string& name) {
  std::size_t k = 0;
  while (k < name.size() && !(name[k] >= '0' && name[k] <= '9')) ++k;
  if (k == name.size()) return name;
  return name.substr(0, k) + "_{" + name.substr(k) + "}";
}

std::string latex_monomial(std::span<const Exponent> exps,
                           const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] == 0) continue;
    if (!out.empty()) out += ' ';
    out += latex_name(names.at(v));
    if (exps[v] != 1) out += "^{" + std::to_string(exps[v]) + "}";
  }
  return out.empty() ? "1" : out;
}

template <typename MonomialFn, typename CoeffFn>
std::string render_terms(const MultiPolynomial& p, MonomialFn mono, CoeffFn coeff) {
  if (p.is_zero()) return "0";
  std::string out;
  for (std::size_t t = 0; t < p.size(); ++t) {
    Rational c = p.coefficient(t);
    const bool negative = c < 0;
    if (negative) c = -c;
    if (t == 0) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    auto e = p.exponents(t);
    if (all_zero(e)) {
      out += coeff(c);
    } else if (c == 1) {
      out += mono(e);
    } else {
      out += coeff(c) + " " + mono(e);
    }
  }
  return out;
}

}  // namespace

std::string render_polynomial(const MultiPolynomial& p,
                              const std::vector<std::string>& names) {
  return render_terms(
      p, [&](auto e) { return render_monomial(e, names); }, coefficient_text);
}

std::string render_factored(const FactoredRational& r,
                            const std::vector<std::string>& names) {
  std::string num = render_polynomial(r.numerator(), names);
  if (r.denominator().empty()) return num;
  if (r.numerator().size() > 1) num = "(" + num + ")";
  std::string den;
  for (const auto& [f, mult] : r.denominator()) {
    den += "(1 - " + render_monomial(f.monomial(), names) + ")";
    if (mult != 1) den += "^" + std::to_string(mult);
  }
  if (r.denominator().size() > 1 || r.denominator().front().second != 1) den = "(" + den + ")";
  return num + " / " + den;
}

std::string latex_polynomial(const MultiPolynomial& p,
                             const std::vector<std::string>& names) {
  return render_terms(
      p, [&](auto e) { return latex_monomial(e, names); },
      [](const Rational& c) {
        if (c.get_den() == 1) return c.get_num().get_str();
        return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
      });
}

std::string latex_factored(const FactoredRational& r,
                           const std::vector<std::string>& names) {
  std::string num = latex_polynomial(r.numerator(), names);
  if (r.denominator().empty()) return num;
  std::string den;
  for (const auto& [f, mult] : r.denominator()) {
    den += "(1 - " + latex_monomial(f.monomial(), names) + ")";
    if (mult != 1) den += "^{" + std::to_string(mult) + "}";
  }
  return "\\frac{" + num + "}{" + den + "}";
}

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw InvariantError("SHA-256 digest failed");
  }
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

}  // namespace jfun
