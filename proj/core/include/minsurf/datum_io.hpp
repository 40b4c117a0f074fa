#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "minsurf/weierstrass.hpp"

namespace minsurf {

// On-disk form of a Weierstrass datum (JSON):
//
//   {
//     "n": 3,
//     "label": "catenoid",
//     "components": [ {"num": [[re, im], ...], "den": [[re, im], ...]}, ... ],
//     "punctures": [[re, im], "inf"],      (optional; detected when absent)
//     "basepoint": [re, im]                (optional)
//   }
//
// Coefficients are ascending-power [re, im] pairs. The document keeps the
// coefficients exactly as written; reduction happens in to_datum().
struct DatumComponent {
  std::vector<Complex> num;
  std::vector<Complex> den;
  friend bool operator==(const DatumComponent&, const DatumComponent&) = default;
};

struct DatumDocument {
  int n = 0;
  std::string label;
  std::vector<DatumComponent> components;
  std::optional<std::vector<SpherePoint>> punctures;
  std::optional<Complex> basepoint;
  friend bool operator==(const DatumDocument&, const DatumDocument&) = default;
};

// Throws ParseError carrying the 1-based line/column of syntax errors
// (0/0 for schema errors, which name the offending field instead).
DatumDocument parse_datum(std::string_view text);
std::string serialize_datum(const DatumDocument& doc);

DatumDocument read_datum_file(const std::filesystem::path& path);
void write_datum_file(const std::filesystem::path& path, const DatumDocument& doc);

WeierstrassData to_datum(const DatumDocument& doc, const Tolerances& tol = {});
DatumDocument to_document(const WeierstrassData& w);

}  // namespace minsurf
