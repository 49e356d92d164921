#ifndef JFUN_CLI_HPP
#define JFUN_CLI_HPP

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "jfun/cartan.hpp"

namespace jfun {

// Process exit codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitSuiteFailed = 1,
  kExitConfig = 2,
  kExitType = 3,
  kExitInvariant = 4,
  kExitCacheCorrupt = 5,
};

// Datum from a type label or a custom-matrix JSON document
//   {"matrix": [[...]], "symmetrizers": [...], "affine": false, "label": "..."}
// (symmetrizers and label optional).
CartanDatum load_datum(const std::optional<std::string>& type,
                       const std::optional<std::string>& matrix_path,
                       bool unverified_affine);
CartanDatum datum_from_document(const nlohmann::json& doc, bool unverified_affine);

// The stats record for alpha (kind "stats").
nlohmann::json stats_record(const CartanDatum& d, const ConeVector& alpha);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jfun

#endif  // JFUN_CLI_HPP
