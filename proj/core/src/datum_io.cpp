#include "minsurf/datum_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& what) { throw ParseError("invalid datum: " + what, 0, 0); }

Complex parse_complex(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    schema_error(where + " must be a [re, im] pair of numbers");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Complex> parse_coeffs(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where + " must be an array of [re, im] pairs");
  std::vector<Complex> out;
  for (size_t k = 0; k < j.size(); ++k) out.push_back(parse_complex(j[k], where + "[" + std::to_string(k) + "]"));
  return out;
}

json complex_json(Complex c) { return json::array({c.real(), c.imag()}); }

json coeffs_json(const std::vector<Complex>& v) {
  json a = json::array();
  for (const Complex& c : v) a.push_back(complex_json(c));
  return a;
}

std::pair<int, int> line_column(std::string_view text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

DatumDocument parse_datum(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // nlohmann reports the byte just past the offending character.
    const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                         e.what(),
                     line, col);
  }
  if (!j.is_object()) schema_error("top level must be an object");

  DatumDocument doc;
  if (!j.contains("n") || !j["n"].is_number_integer()) schema_error("field 'n' must be an integer");
  doc.n = j["n"].get<int>();
  if (j.contains("label")) {
    if (!j["label"].is_string()) schema_error("field 'label' must be a string");
    doc.label = j["label"].get<std::string>();
  }
  if (!j.contains("components") || !j["components"].is_array()) schema_error("field 'components' must be an array");
  const json& comps = j["components"];
  for (size_t i = 0; i < comps.size(); ++i) {
    const std::string where = "components[" + std::to_string(i) + "]";
    if (!comps[i].is_object() || !comps[i].contains("num") || !comps[i].contains("den")) {
      schema_error(where + " needs 'num' and 'den'");
    }
    doc.components.push_back({parse_coeffs(comps[i]["num"], where + ".num"), parse_coeffs(comps[i]["den"], where + ".den")});
  }
  if (static_cast<int>(doc.components.size()) != doc.n) {
    schema_error("'n' is " + std::to_string(doc.n) + " but " + std::to_string(doc.components.size()) +
                 " components are given");
  }
  if (j.contains("punctures")) {
    const json& ps = j["punctures"];
    if (!ps.is_array()) schema_error("field 'punctures' must be an array");
    std::vector<SpherePoint> pts;
    for (size_t i = 0; i < ps.size(); ++i) {
      if (ps[i].is_string() && ps[i].get<std::string>() == "inf") {
        pts.push_back(SpherePoint::infinity());
      } else {
        pts.push_back(SpherePoint::at(parse_complex(ps[i], "punctures[" + std::to_string(i) + "]")));
      }
    }
    doc.punctures = std::move(pts);
  }
  if (j.contains("basepoint")) doc.basepoint = parse_complex(j["basepoint"], "basepoint");
  return doc;
}

std::string serialize_datum(const DatumDocument& doc) {
  json j;
  j["n"] = doc.n;
  j["label"] = doc.label;
  json comps = json::array();
  for (const DatumComponent& c : doc.components) {
    comps.push_back(json{{"num", coeffs_json(c.num)}, {"den", coeffs_json(c.den)}});
  }
  j["components"] = std::move(comps);
  if (doc.punctures) {
    json ps = json::array();
    for (const SpherePoint& p : *doc.punctures) ps.push_back(p.is_infinite() ? json("inf") : complex_json(p.value()));
    j["punctures"] = std::move(ps);
  }
  if (doc.basepoint) j["basepoint"] = complex_json(*doc.basepoint);
  return j.dump(2) + "\n";
}

DatumDocument read_datum_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_datum(ss.str());
}

void write_datum_file(const std::filesystem::path& path, const DatumDocument& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << serialize_datum(doc);
  if (!out) throw IoError("write failed for " + path.string());
}

WeierstrassData to_datum(const DatumDocument& doc, const Tolerances& tol) {
  std::vector<RationalMap> phi;
  for (size_t i = 0; i < doc.components.size(); ++i) {
    const ComplexPoly den(doc.components[i].den);
    if (den.is_zero()) schema_error("components[" + std::to_string(i) + "].den is the zero polynomial");
    phi.emplace_back(ComplexPoly(doc.components[i].num), den, tol);
  }
  return WeierstrassData(doc.label, std::move(phi), doc.punctures, doc.basepoint, tol);
}

DatumDocument to_document(const WeierstrassData& w) {
  DatumDocument doc;
  doc.n = w.n();
  doc.label = w.label();
  for (const RationalMap& r : w.phi()) {
    const auto n = r.num().coeffs();
    const auto d = r.den().coeffs();
    doc.components.push_back({{n.begin(), n.end()}, {d.begin(), d.end()}});
  }
  doc.punctures = std::vector<SpherePoint>(w.punctures().begin(), w.punctures().end());
  doc.basepoint = w.basepoint();
  return doc;
}

}  // namespace minsurf
