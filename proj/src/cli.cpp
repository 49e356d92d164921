#include "jfun/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "jfun/cache.hpp"
#include "jfun/errors.hpp"
#include "jfun/jrecursion.hpp"
#include "jfun/serialize.hpp"
#include "jfun/verify.hpp"

namespace jfun {

CartanDatum datum_from_document(const nlohmann::json& doc, bool unverified_affine) {
  if (!doc.is_object()) throw ConfigError("custom matrix document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "matrix" && key != "symmetrizers" && key != "affine" && key != "label") {
      throw ConfigError("unknown key in custom matrix document: " + key);
    }
  }
  if (!doc.contains("matrix")) throw ConfigError("custom matrix document has no \"matrix\"");
  IntMatrix matrix;
  std::optional<std::vector<int>> syms;
  bool affine = false;
  std::string label = "custom";
  try {
    matrix = doc.at("matrix").get<IntMatrix>();
    if (doc.contains("symmetrizers") && !doc.at("symmetrizers").is_null()) {
      syms = doc.at("symmetrizers").get<std::vector<int>>();
    }
    if (doc.contains("affine")) affine = doc.at("affine").get<bool>();
    if (doc.contains("label")) label = doc.at("label").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("bad custom matrix document: ") + e.what());
  }
  return make_custom_datum(label, matrix, syms, affine, ParseOptions{unverified_affine});
}

CartanDatum load_datum(const std::optional<std::string>& type,
                       const std::optional<std::string>& matrix_path,
                       bool unverified_affine) {
  if (type.has_value() == matrix_path.has_value()) {
    throw ConfigError("give exactly one of --type and --matrix");
  }
  if (type) return parse_cartan_type(*type, ParseOptions{unverified_affine});
  std::ifstream in(*matrix_path);
  if (!in) throw ConfigError("cannot read " + *matrix_path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(*matrix_path + ": " + e.what());
  }
  return datum_from_document(doc, unverified_affine);
}

nlohmann::json stats_record(const CartanDatum& d, const ConeVector& alpha) {
  d.check(alpha);
  const auto eig = d.eigencharacter(alpha);
  nlohmann::json j = {{"kind", "stats"},
                      {"datum", datum_json(d)},
                      {"alpha", alpha.coeffs},
                      {"height", height(alpha)},
                      {"dim", 2 * height(alpha)},
                      {"eigenchar", render_monomial(eig, d.variable_names())},
                      {"eigenchar_exponents", eig}};
  if (d.affine()) {
    j["discrepancy"] = nullptr;
    j["discrepancy_reason"] = "defined for finite simply-laced types only";
  } else if (!d.simply_laced()) {
    j["discrepancy"] = nullptr;
    j["discrepancy_reason"] = "not simply laced";
  } else if (alpha.is_zero()) {
    j["discrepancy"] = nullptr;
    j["discrepancy_reason"] = "alpha = 0 has no exceptional divisor";
  } else {
    j["discrepancy"] = discrepancy(d, alpha);
    j["discrepancy_reason"] = nullptr;
  }
  j["orders"] = vanishing_orders(d, /*allow_affine=*/true);
  j["orders_extrapolated"] = d.affine();
  j["orders_convention"] =
      d.simply_laced() ? "all boundary components vanish to order 1"
                       : "order d_i on the component of node i; which nodes are long "
                         "depends on the matrix convention, only the multiset is intrinsic";
  j["conjectural"] = d.conjectural();
  return j;
}

namespace {

struct Format {
  enum Kind { Factored, Series, Json, Latex } kind = Factored;
  int order = 0;
};

Format parse_format(const std::string& text) {
  if (text == "factored") return {Format::Factored, 0};
  if (text == "json") return {Format::Json, 0};
  if (text == "latex") return {Format::Latex, 0};
  if (text.rfind("series:", 0) == 0) {
    const std::string n = text.substr(7);
    if (!n.empty() && n.size() < 6 && std::all_of(n.begin(), n.end(), ::isdigit)) {
      return {Format::Series, std::stoi(n)};
    }
  }
  throw ConfigError("unknown format '" + text + "' (factored, series:N, json, latex)");
}

Grading default_grading(const CartanDatum& d, const std::optional<std::string>& flag) {
  if (!flag) return d.affine() ? Grading::Joint : Grading::Q;
  const Grading g = parse_grading(*flag);
  if (g == Grading::Q && d.affine()) {
    throw ConfigError("q-grading does not give finite pieces in affine type; use --grading joint");
  }
  return g;
}

std::string render_factor_list(const FactoredRational& r, const std::vector<std::string>& names) {
  std::string out;
  for (const auto& [f, mult] : r.denominator()) {
    if (!out.empty()) out += ", ";
    out += "(1 - " + render_monomial(f.monomial(), names) + ")";
    if (mult > 1) out += "^" + std::to_string(mult);
  }
  return out.empty() ? "none" : out;
}

std::string latex_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '~': out += "\\textasciitilde{}"; break;
      case '^': out += "\\textasciicircum{}"; break;
      case '\\': out += "\\textbackslash{}"; break;
      case '_': case '#': case '%': case '&': case '$': case '{': case '}':
        out += '\\';
        out += c;
        break;
      default: out += c;
    }
  }
  return out;
}

struct ComputeOpts {
  std::optional<std::string> type, matrix, alpha, up_to, grading, cache_dir;
  std::string format = "factored";
  bool unverified_affine = false;
  unsigned threads = 1;
};

int run_compute(const ComputeOpts& o, std::ostream& out) {
  if (o.alpha.has_value() == o.up_to.has_value()) {
    throw ConfigError("give exactly one of --alpha and --up-to");
  }
  const Format fmt = parse_format(o.format);
  const CartanDatum d = load_datum(o.type, o.matrix, o.unverified_affine);
  const ConeVector bound = parse_cone_vector(o.alpha ? *o.alpha : *o.up_to);
  d.check(bound);
  std::optional<Grading> grading;
  if (fmt.kind == Format::Series) grading = default_grading(d, o.grading);

  JTable table(d);
  const auto dir = resolve_cache_dir(o.cache_dir);
  if (dir) load_cache(*dir, table);
  const std::size_t before = table.size();
  populate(table, bound, std::max(1u, o.threads));
  if (dir && table.size() != before) save_cache(*dir, table);

  std::vector<ConeVector> targets;
  if (o.alpha) {
    targets.push_back(bound);
  } else {
    targets = interval_below(bound);
  }
  const auto names = d.variable_names();

  switch (fmt.kind) {
    case Format::Json: {
      nlohmann::json entries = nlohmann::json::array();
      for (const auto& a : targets) {
        const auto& v = *table.find(a);
        entries.push_back({{"alpha", a.coeffs}, {"value", to_json(v)}, {"text", render_factored(v, names)}});
      }
      nlohmann::json doc = {{"kind", "jfunction"},
                            {"engine", kEngineVersion},
                            {"datum", datum_json(d)},
                            {"interpretation", interpretation(d)},
                            {"conjectural", d.conjectural()},
                            {"variables", names},
                            {"entries", entries}};
      out << doc.dump(2) << "\n";
      break;
    }
    case Format::Factored: {
      out << "# " << d.label() << ": " << interpretation(d) << "\n";
      for (const auto& a : targets) {
        const auto& v = *table.find(a);
        out << "J(" << format_cone_vector(a) << ")\n"
            << "  numerator:   " << render_polynomial(v.numerator(), names) << "\n"
            << "  factors:     " << render_factor_list(v, names) << "\n"
            << "  value:       " << render_factored(v, names) << "\n";
      }
      break;
    }
    case Format::Series: {
      out << "# " << d.label() << ": " << interpretation(d) << "\n"
          << "# " << to_string(*grading) << "-graded expansion to order " << fmt.order << "\n";
      const std::string prefix = *grading == Grading::Q ? "q^" : "deg ";
      for (const auto& a : targets) {
        out << "J(" << format_cone_vector(a) << ")\n";
        const auto pieces = series_expand(*table.find(a), fmt.order, *grading);
        for (std::size_t n = 0; n < pieces.size(); ++n) {
          out << "  " << prefix << n << ": " << render_polynomial(pieces[n], names) << "\n";
        }
      }
      break;
    }
    case Format::Latex: {
      out << "\\documentclass{article}\n"
          << "\\usepackage{amsmath,amssymb}\n"
          << "\\begin{document}\n"
          << "\\noindent Type \\texttt{" << latex_escape(d.label()) << "}: "
          << latex_escape(interpretation(d)) << ".\n"
          << "\\begin{align*}\n";
      for (std::size_t i = 0; i < targets.size(); ++i) {
        const auto& v = *table.find(targets[i]);
        out << "\\mathfrak{J}_{(" << format_cone_vector(targets[i]) << ")} &= "
            << latex_factored(v, names) << (i + 1 < targets.size() ? " \\\\" : "") << "\n";
      }
      out << "\\end{align*}\n"
          << "\\end{document}\n";
      break;
    }
  }
  return kExitOk;
}

struct VerifyOpts {
  std::string suite;
  std::optional<std::string> type, matrix, grading, small, embedding, alpha;
  std::string format = "json";
  int height = -1;
  int order = 10;
  int trials = 100;
  int nodes = 2;
  int points = 5;
  std::uint64_t seed = 0;
  bool unverified_affine = false;
};

std::vector<std::size_t> parse_embedding(const std::string& text) {
  const ConeVector v = parse_cone_vector(text);
  std::vector<std::size_t> out;
  for (int c : v.coeffs) {
    if (c < 1) throw ConfigError("embedding indices are 1-based");
    out.push_back(static_cast<std::size_t>(c - 1));
  }
  return out;
}

int run_verify(const VerifyOpts& o, std::ostream& out) {
  if (o.format != "json" && o.format != "text") throw ConfigError("--format must be json or text");
  VerificationReport report;
  if (o.suite == "chart") {
    report = verify_affine_chart(o.nodes, o.seed, o.points);
  } else {
    const CartanDatum d = load_datum(o.type, o.matrix, o.unverified_affine);
    if (o.suite == "recursion") {
      report = verify_recursion(d, o.height < 0 ? 3 : o.height);
    } else if (o.suite == "positivity") {
      std::optional<Grading> g;
      if (o.grading) g = parse_grading(*o.grading);
      report = verify_positivity(d, o.height < 0 ? 2 : o.height, o.order, g);
    } else if (o.suite == "determinant") {
      report = verify_determinant_identity(d, o.trials, o.seed);
    } else if (o.suite == "subdiagram") {
      if (!o.small || !o.embedding || !o.alpha) {
        throw ConfigError("subdiagram needs --small, --embedding and --alpha");
      }
      const CartanDatum small = parse_cartan_type(*o.small, ParseOptions{o.unverified_affine});
      const auto emb = parse_embedding(*o.embedding);
      const ConeVector alpha = parse_cone_vector(*o.alpha);
      d.check(alpha);
      if (emb.size() != small.rank()) throw ConfigError("embedding size does not match --small");
      std::vector<int> small_coeffs;
      std::vector<int> rest = alpha.coeffs;
      for (auto e : emb) {
        if (e >= d.rank()) throw ConfigError("embedding index out of range");
        small_coeffs.push_back(alpha.coeffs[e]);
        rest[e] = 0;
      }
      if (std::any_of(rest.begin(), rest.end(), [](int c) { return c != 0; })) {
        throw ConfigError("alpha is not supported on the embedded nodes");
      }
      report = verify_subdiagram(d, small, emb, ConeVector(small_coeffs));
    } else {
      throw ConfigError("unknown suite " + o.suite);
    }
  }
  if (o.format == "json") {
    out << report.to_json().dump(2) << "\n";
  } else {
    out << report.to_text();
  }
  return report.passed ? kExitOk : kExitSuiteFailed;
}

struct StatsOpts {
  std::optional<std::string> type, matrix;
  std::string alpha;
  bool unverified_affine = false;
};

int run_stats(const StatsOpts& o, std::ostream& out) {
  const CartanDatum d = load_datum(o.type, o.matrix, o.unverified_affine);
  out << stats_record(d, parse_cone_vector(o.alpha)).dump(2) << "\n";
  return kExitOk;
}

struct CacheOpts {
  std::optional<std::string> type, matrix, cache_dir;
  std::string up_to;
  bool unverified_affine = false;
};

const char* status_name(CacheStatus s) {
  switch (s) {
    case CacheStatus::Missing: return "missing";
    case CacheStatus::VersionMismatch: return "version-mismatch";
    case CacheStatus::Loaded: return "loaded";
  }
  return "";
}

// Write, re-read, and compare every re-read entry byte for byte with a
// recomputation that never touches the cache.
int run_cache(const CacheOpts& o, std::ostream& out) {
  const CartanDatum d = load_datum(o.type, o.matrix, o.unverified_affine);
  const ConeVector bound = parse_cone_vector(o.up_to);
  d.check(bound);
  const auto dir = resolve_cache_dir(o.cache_dir);
  if (!dir) throw ConfigError(std::string("no cache directory (--cache-dir or ") + kCacheDirEnv + ")");

  JTable table(d);
  const CacheStatus before = load_cache(*dir, table);
  populate(table, bound);
  save_cache(*dir, table);

  JTable reread(d);
  if (load_cache(*dir, reread) != CacheStatus::Loaded) {
    throw InvariantError("cache file vanished after writing");
  }
  JTable fresh(d);
  std::size_t compared = 0;
  for (const auto& [alpha, value] : reread.entries()) {
    if (serialize(value) != serialize(compute_j(alpha, fresh))) {
      throw InvariantError("cached entry alpha=(" + format_cone_vector(alpha) +
                           ") differs from recomputation");
    }
    ++compared;
  }
  for (const auto& a : interval_below(bound)) {
    if (reread.find(a) == nullptr) {
      throw InvariantError("entry alpha=(" + format_cone_vector(a) + ") missing after re-read");
    }
  }
  nlohmann::json doc = {{"kind", "cache"},
                        {"datum", datum_json(d)},
                        {"engine", kEngineVersion},
                        {"file", cache_file(*dir, d).string()},
                        {"status_before", status_name(before)},
                        {"entries", compared},
                        {"identical", true}};
  out << doc.dump(2) << "\n";
  return kExitOk;
}

void add_datum_options(CLI::App* app, std::optional<std::string>& type,
                       std::optional<std::string>& matrix, bool& unverified) {
  app->add_option("--type", type, "Cartan type label, e.g. A3, G2, A2~, A1xA1");
  app->add_option("--matrix", matrix, "custom Cartan matrix JSON file");
  app->add_flag("--unverified-affine", unverified,
                "accept untwisted affine types outside A (outputs tagged conjectural)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computation of the fermionic J-function coefficients", "jfun"};
  app.set_version_flag("--version", kEngineVersion);
  app.require_subcommand(0, 1);

  ComputeOpts c;
  add_datum_options(&app, c.type, c.matrix, c.unverified_affine);
  app.add_option("--alpha", c.alpha, "cone vector, comma separated");
  app.add_option("--up-to", c.up_to, "emit every alpha below this bound");
  app.add_option("--format", c.format, "factored | series:N | json | latex");
  app.add_option("--grading", c.grading, "q | joint (series format)");
  app.add_option("--cache-dir", c.cache_dir, std::string("cache directory (overrides ") + kCacheDirEnv + ")");
  app.add_option("--threads", c.threads, "worker threads");

  VerifyOpts v;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", v.suite, "recursion | positivity | subdiagram | determinant | chart")
      ->required()
      ->check(CLI::IsMember({"recursion", "positivity", "subdiagram", "determinant", "chart"}));
  add_datum_options(verify, v.type, v.matrix, v.unverified_affine);
  verify->add_option("--height", v.height, "height bound");
  verify->add_option("--order", v.order, "series order (positivity)");
  verify->add_option("--grading", v.grading, "q | joint (positivity)");
  verify->add_option("--seed", v.seed, "seed for random trials");
  verify->add_option("--trials", v.trials, "random trials (determinant)");
  verify->add_option("--small", v.small, "sub-diagram type (subdiagram)");
  verify->add_option("--embedding", v.embedding, "1-based node indices of the sub-diagram");
  verify->add_option("--alpha", v.alpha, "cone vector of the big datum (subdiagram)");
  verify->add_option("--N", v.nodes, "number of affine nodes (chart)");
  verify->add_option("--points", v.points, "random evaluation points (chart)");
  verify->add_option("--format", v.format, "json | text");

  StatsOpts s;
  auto* stats = app.add_subcommand("stats", "geometric statistics for one alpha");
  add_datum_options(stats, s.type, s.matrix, s.unverified_affine);
  stats->add_option("--alpha", s.alpha, "cone vector")->required();

  CacheOpts k;
  auto* cache = app.add_subcommand("cache", "cache round trip");
  add_datum_options(cache, k.type, k.matrix, k.unverified_affine);
  cache->add_option("--up-to", k.up_to, "bound")->required();
  cache->add_option("--cache-dir", k.cache_dir, "cache directory");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kEngineVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "jfun: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (verify->parsed()) return run_verify(v, out);
    if (stats->parsed()) return run_stats(s, out);
    if (cache->parsed()) return run_cache(k, out);
    return run_compute(c, out);
  } catch (const CacheCorruptError& e) {
    err << "jfun: " << e.what() << "\n";
    return kExitCacheCorrupt;
  } catch (const MalformedTypeError& e) {
    err << "jfun: malformed type: " << e.what() << "\n";
    return kExitType;
  } catch (const UnsupportedTypeError& e) {
    err << "jfun: unsupported type: " << e.what() << "\n";
    return kExitType;
  } catch (const InvariantError& e) {
    err << "jfun: internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const Error& e) {
    err << "jfun: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "jfun: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "jfun: internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace jfun
