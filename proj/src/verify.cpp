#include "jfun/verify.hpp"

#include <set>
#include <sstream>

#include "jfun/errors.hpp"
#include "jfun/serialize.hpp"

namespace jfun {

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j = {{"kind", "report"},
                      {"suite", suite},
                      {"datum", datum},
                      {"parameters", parameters},
                      {"outcome", passed ? "pass" : "fail"},
                      {"checks", checks}};
  if (witness) {
    j["witness"] = {{"alpha", witness->alpha}, {"detail", witness->detail}, {"value", witness->value}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "suite:      " << suite << "\n"
      << "datum:      " << datum << "\n";
  if (!parameters.empty()) {
    out << "parameters:";
    for (const auto& [k, v] : parameters) out << " " << k << "=" << v;
    out << "\n";
  }
  out << "checks:     " << checks << "\n"
      << "outcome:    " << (passed ? "PASS" : "FAIL") << "\n";
  if (witness) {
    if (!witness->alpha.empty()) out << "witness:    alpha = (" << witness->alpha << ")\n";
    out << "detail:     " << witness->detail << "\n"
        << "value:      " << witness->value << "\n";
  }
  return out.str();
}

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

namespace {

void fail(VerificationReport& report, Witness w) {
  if (report.passed) {
    report.passed = false;
    report.witness = std::move(w);
  }
}

}  // namespace

// ---------------------------------------------------------------- recursion

MultiPolynomial recursion_residual(const JTable& table, const ConeVector& alpha) {
  const CartanDatum& d = table.datum();
  d.check(alpha);
  const FactoredRational* target = table.find(alpha);
  if (target == nullptr) {
    throw ConfigError("J_(" + format_cone_vector(alpha) + ") is not in the table");
  }
  struct Term {
    MultiPolynomial num;
    FactoredRational::Denominator den;
  };
  std::vector<Term> terms;
  FactoredRational::Denominator common = target->denominator();
  for (const auto& beta : interval_below(alpha)) {
    const FactoredRational* jb = table.find(beta);
    if (jb == nullptr) {
      throw ConfigError("J_(" + format_cone_vector(beta) + ") is not in the table");
    }
    Term t{jb->numerator().shifted(d.eigencharacter(beta)),
           denominator_sum(jb->denominator(), q_pochhammer(d, alpha - beta))};
    common = denominator_union_max(common, t.den);
    terms.push_back(std::move(t));
  }
  MultiPolynomial residual = -lift_to_denominator(target->numerator(), target->denominator(), common);
  for (const auto& t : terms) residual += lift_to_denominator(t.num, t.den, common);
  return residual;
}

VerificationReport verify_recursion_table(const JTable& table, int height_bound) {
  if (height_bound < 0) throw ConfigError("height bound must be nonnegative");
  VerificationReport report;
  report.suite = "recursion";
  report.datum = table.datum().label();
  report.parameters["height"] = std::to_string(height_bound);
  for (const auto& alpha : cone_up_to_height(table.datum().rank(), height_bound)) {
    if (table.find(alpha) == nullptr) {
      fail(report, {format_cone_vector(alpha), "value missing from table", ""});
      break;
    }
    ++report.checks;
    auto residual = recursion_residual(table, alpha);
    if (!residual.is_zero()) {
      fail(report, {format_cone_vector(alpha), "nonzero cleared-denominator residual",
                    to_json(residual).dump()});
      break;
    }
  }
  return report;
}

VerificationReport verify_recursion(const CartanDatum& d, int height_bound) {
  if (height_bound < 0) throw ConfigError("height bound must be nonnegative");
  JTable table(d);
  for (const auto& alpha : cone_up_to_height(d.rank(), height_bound)) compute_j(alpha, table);
  return verify_recursion_table(table, height_bound);
}

// --------------------------------------------------------------- positivity

VerificationReport verify_positivity_values(
    const std::string& datum_label,
    const std::vector<std::pair<ConeVector, FactoredRational>>& values, int order,
    Grading grading) {
  VerificationReport report;
  report.suite = "positivity";
  report.datum = datum_label;
  report.parameters["order"] = std::to_string(order);
  report.parameters["grading"] = to_string(grading);
  for (const auto& [alpha, value] : values) {
    const auto pieces = series_expand(value, order, grading);
    for (std::size_t g = 0; g < pieces.size(); ++g) {
      ++report.checks;
      const auto& piece = pieces[g];
      for (std::size_t t = 0; t < piece.size(); ++t) {
        const auto& c = piece.coefficient(t);
        if (c.get_den() != 1 || c < 0) {
          fail(report, {format_cone_vector(alpha),
                        "grade " + std::to_string(g) + " coefficient " + c.get_str() +
                            " is not a nonnegative integer",
                        to_json(piece).dump()});
          return report;
        }
      }
    }
  }
  return report;
}

VerificationReport verify_positivity(const CartanDatum& d, int height_bound, int order,
                                     std::optional<Grading> grading) {
  if (height_bound < 0) throw ConfigError("height bound must be nonnegative");
  const Grading g = grading.value_or(d.affine() ? Grading::Joint : Grading::Q);
  if (d.affine() && g == Grading::Q) {
    throw ConfigError("q-grading does not apply to affine types (factors with (beta,beta)=0); use --grading joint");
  }
  JTable table(d);
  std::vector<std::pair<ConeVector, FactoredRational>> values;
  for (const auto& alpha : cone_up_to_height(d.rank(), height_bound)) {
    values.emplace_back(alpha, compute_j(alpha, table));
  }
  auto report = verify_positivity_values(d.label(), values, order, g);
  report.parameters["height"] = std::to_string(height_bound);
  return report;
}

// -------------------------------------------------------------- subdiagram

VerificationReport verify_subdiagram(const CartanDatum& big, const CartanDatum& small,
                                     const std::vector<std::size_t>& embedding,
                                     const ConeVector& alpha_small) {
  small.check(alpha_small);
  if (embedding.size() != small.rank()) throw ConfigError("embedding size does not match the small datum");
  if (std::set<std::size_t>(embedding.begin(), embedding.end()).size() != embedding.size()) {
    throw ConfigError("embedding is not injective");
  }
  for (std::size_t i = 0; i < small.rank(); ++i) {
    if (embedding[i] >= big.rank()) throw ConfigError("embedding index out of range");
    if (small.symmetrizers()[i] != big.symmetrizers()[embedding[i]]) {
      throw ConfigError("embedding does not match symmetrizers");
    }
    for (std::size_t j = 0; j < small.rank(); ++j) {
      if (small.matrix()[i][j] != big.matrix()[embedding[i]][embedding[j]]) {
        throw ConfigError("embedding does not realize a principal submatrix");
      }
    }
  }
  VerificationReport report;
  report.suite = "subdiagram";
  report.datum = big.label() + " > " + small.label();
  std::string emb;
  for (std::size_t i = 0; i < embedding.size(); ++i) emb += (i ? "," : "") + std::to_string(embedding[i] + 1);
  report.parameters["embedding"] = emb;


  std::vector<int> big_coeffs(big.rank(), 0);
  for (std::size_t i = 0; i < small.rank(); ++i) big_coeffs[embedding[i]] = alpha_small.coeffs[i];
  const ConeVector alpha_big(big_coeffs);
  report.parameters["alpha"] = format_cone_vector(alpha_big);

  std::vector<std::size_t> varmap{0};
  for (auto e : embedding) varmap.push_back(e + 1);

  JTable big_table(big);
  const FactoredRational& value_big = compute_j(alpha_big, big_table);
  JTable small_table(small);
  const auto value_small = remap_variables(compute_j(alpha_small, small_table), big.nvars(), varmap);
  ++report.checks;
  if (!frac_equal(value_big, value_small)) {
    fail(report, {format_cone_vector(alpha_big), "sub-diagram value differs from full-diagram value",
                  serialize(value_small)});
    return report;
  }
  // Orthogonal supports decouple: the value is the product over components.
  const auto components = connected_components(small);
  if (components.size() > 1) {
    FactoredRational product = FactoredRational::one(big.nvars());
    for (const auto& comp : components) {
      const auto sub = restrict_datum(small, comp);
      std::vector<int> coeffs;
      std::vector<std::size_t> map{0};
      for (auto i : comp) {
        coeffs.push_back(alpha_small.coeffs[i]);
        map.push_back(embedding[i] + 1);
      }
      JTable sub_table(sub);
      product = frac_mul(product, remap_variables(compute_j(ConeVector(coeffs), sub_table),
                                                  big.nvars(), map));
    }
    ++report.checks;
    if (!frac_equal(value_big, product)) {
      fail(report, {format_cone_vector(alpha_big),
                    "value is not the product over orthogonal components", serialize(product)});
    }
  }
  return report;
}

// -------------------------------------------------------------- determinant

VerificationReport verify_determinant_identity(const CartanDatum& d, int trials,
                                               std::uint64_t seed, int deligne_range) {
  if (trials < 0 || deligne_range < 0) throw ConfigError("trials and range must be nonnegative");
  VerificationReport report;
  report.suite = "determinant";
  report.datum = d.label();
  report.parameters["trials"] = std::to_string(trials);
  report.parameters["seed"] = std::to_string(seed);
  report.parameters["deligne_range"] = std::to_string(deligne_range);
  SeededRng rng(seed);
  for (int k = 0; k < trials; ++k) {
    std::vector<std::int64_t> gamma(d.rank());
    for (auto& x : gamma) x = rng.uniform(-10, 10);
    ++report.checks;
    const auto via_pairing = det_character(d, gamma);
    const auto direct = d.lattice_pair(gamma, gamma);
    if (via_pairing != direct) {
      std::string g;
      for (std::size_t i = 0; i < gamma.size(); ++i) g += (i ? "," : "") + std::to_string(gamma[i]);
      fail(report, {g, "Deligne-pairing decomposition disagrees with (gamma,gamma)",
                    std::to_string(via_pairing) + " != " + std::to_string(direct)});
      return report;
    }
  }
  for (int n1 = -deligne_range; n1 <= deligne_range; ++n1) {
    for (int n2 = -deligne_range; n2 <= deligne_range; ++n2) {
      ++report.checks;
      if (deligne_pair(n1, n2) != 2 * static_cast<std::int64_t>(n1) * n2) {
        fail(report, {"", "deligne_pair(" + std::to_string(n1) + "," + std::to_string(n2) + ") != 2 n1 n2",
                      std::to_string(deligne_pair(n1, n2))});
        return report;
      }
    }
  }
  return report;
}

// ------------------------------------------------------------ affine chart

namespace {

Rational random_nonzero_rational(SeededRng& rng) {
  std::int64_t num = 0;
  while (num == 0) num = rng.uniform(-9, 9);
  Rational r(static_cast<long>(num), static_cast<unsigned long>(rng.uniform(1, 9)));
  r.canonicalize();
  return r;
}

}  // namespace

VerificationReport verify_affine_chart(int n_nodes, std::uint64_t seed, int points) {
  if (n_nodes < 2) throw ConfigError("affine chart needs N >= 2");
  VerificationReport report;
  report.suite = "chart";
  const CartanDatum d = parse_cartan_type("A" + std::to_string(n_nodes - 1) + "~");
  report.datum = d.label();
  report.parameters["N"] = std::to_string(n_nodes);
  report.parameters["seed"] = std::to_string(seed);
  report.parameters["points"] = std::to_string(points);
  const auto n = static_cast<std::size_t>(n_nodes);

  // z_0 z_1 ... z_{N-1} -> u.
  std::vector<Exponent> all_z(n + 1, 1);
  all_z[0] = 0;
  std::vector<Exponent> u_only(n + 1, 0);
  u_only[1] = 1;
  ++report.checks;
  if (chart_image(all_z, n_nodes) != u_only) {
    auto img = chart_image(all_z, n_nodes);
    fail(report, {"", "product of all z_i does not map to u",
                  render_monomial(img, chart_variable_names(n_nodes))});
    return report;
  }
  // q -> v^2.
  std::vector<Exponent> q_only(n + 1, 0);
  q_only[0] = 1;
  std::vector<Exponent> v_sq(n + 1, 0);
  v_sq[0] = 2;
  ++report.checks;
  if (chart_image(q_only, n_nodes) != v_sq) {
    fail(report, {"", "q does not map to v^2", ""});
    return report;
  }

  // Substitute-then-evaluate equals evaluate at the composed point.
  JTable table(d);
  const ConeVector alpha0 = ConeVector::simple(n, 0);
  const ConeVector delta(std::vector<int>(n, 1));
  SeededRng rng(seed);
  for (const auto& alpha : {alpha0, delta}) {
    const FactoredRational& value = compute_j(alpha, table);
    const FactoredRational image = affine_chart_substitute(value, n_nodes);
    int done = 0;
    int attempts = 0;
    while (done < points && attempts < 100 * (points + 1)) {
      ++attempts;
      std::vector<Rational> chart_point(n + 1);
      for (auto& x : chart_point) x = random_nonzero_rational(rng);
      Rational expected;
      Rational got;
      try {
        expected = evaluate_at(value, chart_point_to_qz(chart_point, n_nodes));
        got = evaluate_at(image, chart_point);
      } catch (const PoleError&) {
        continue;
      }
      ++done;
      ++report.checks;
      if (expected != got) {
        std::string pt;
        for (std::size_t k = 0; k < chart_point.size(); ++k) pt += (k ? "," : "") + chart_point[k].get_str();
        fail(report, {format_cone_vector(alpha), "substitution does not commute with evaluation at (" + pt + ")",
                      got.get_str() + " != " + expected.get_str()});
        return report;
      }
    }
    if (done < points) {
      fail(report, {format_cone_vector(alpha), "could not find enough pole-free points", ""});
      return report;
    }
  }
  return report;
}

}  // namespace jfun
