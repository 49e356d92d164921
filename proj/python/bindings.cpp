#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "jfun/cache.hpp"
#include "jfun/cli.hpp"
#include "jfun/errors.hpp"
#include "jfun/jrecursion.hpp"
#include "jfun/serialize.hpp"
#include "jfun/verify.hpp"

namespace py = pybind11;

namespace {

jfun::CartanDatum datum(const std::string& type, bool unverified_affine) {
  return jfun::parse_cartan_type(type, jfun::ParseOptions{unverified_affine});
}

// JSON crosses the boundary as text; the Python side parses it.
std::string compute(const std::string& type, const std::string& alpha, bool unverified_affine) {
  jfun::JTable table(datum(type, unverified_affine));
  const auto a = jfun::parse_cone_vector(alpha);
  table.datum().check(a);
  const auto& v = jfun::compute_j(a, table);
  nlohmann::json j = {{"alpha", a.coeffs},
                      {"value", jfun::to_json(v)},
                      {"text", jfun::render_factored(v, table.datum().variable_names())}};
  return j.dump();
}

py::tuple cli_run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code;
  {
    py::gil_scoped_release release;
    code = jfun::run_cli(args, out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact J-function coefficients from the fermionic recursion";
  m.attr("engine_version") = jfun::kEngineVersion;
  m.attr("schema_path") = JFUN_SCHEMA_PATH;

  auto base = py::register_exception<jfun::Error>(m, "JfunError");
  py::register_exception<jfun::MalformedTypeError>(m, "MalformedTypeError", base.ptr());
  py::register_exception<jfun::UnsupportedTypeError>(m, "UnsupportedTypeError", base.ptr());
  py::register_exception<jfun::ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<jfun::MismatchError>(m, "MismatchError", base.ptr());
  py::register_exception<jfun::OverflowError>(m, "ExponentOverflowError", base.ptr());
  py::register_exception<jfun::PoleError>(m, "PoleError", base.ptr());
  py::register_exception<jfun::CacheCorruptError>(m, "CacheCorruptError", base.ptr());
  py::register_exception<jfun::InvariantError>(m, "InvariantError", base.ptr());

  m.def("cli_run", &cli_run, py::arg("args"),
        "Run the command line; returns (exit_code, stdout, stderr).");
  m.def("datum_json",
        [](const std::string& type, bool unverified_affine) {
          return jfun::datum_json(datum(type, unverified_affine)).dump();
        },
        py::arg("type"), py::arg("unverified_affine") = false);
  m.def("compute_json", &compute, py::arg("type"), py::arg("alpha"),
        py::arg("unverified_affine") = false);
  m.def("stats_json",
        [](const std::string& type, const std::string& alpha) {
          return jfun::stats_record(datum(type, false), jfun::parse_cone_vector(alpha)).dump();
        },
        py::arg("type"), py::arg("alpha"));
  m.def("verify_recursion_json",
        [](const std::string& type, int height) {
          py::gil_scoped_release release;
          return jfun::verify_recursion(datum(type, false), height).to_json().dump();
        },
        py::arg("type"), py::arg("height"));
  m.def("deligne_pair", &jfun::deligne_pair, py::arg("n1"), py::arg("n2"));
}
