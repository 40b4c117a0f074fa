#include "commands.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "minsurf/catalog.hpp"
#include "minsurf/datum_io.hpp"
#include "minsurf/errors.hpp"
#include "minsurf/mesh.hpp"
#include "report.hpp"

namespace minsurf::cli {

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

std::string catalog_listing() {
  std::string s;
  for (const std::string& n : catalog_names()) {
    s += n;
    if (n == "generalized-jorge-meeks") s += "  (--param m, 1..6, default 2)";
    s += "\n";
  }
  return s;
}

Projection parse_projection(const std::string& text, int n) {
  Projection p{};
  std::istringstream is(text);
  std::string tok;
  int i = 0;
  while (std::getline(is, tok, ',')) {
    if (i >= 3) throw CLI::ValidationError("--project", "expects three comma-separated axes");
    int axis = 0;
    try {
      size_t used = 0;
      axis = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--project", "bad axis '" + tok + "'");
    }
    if (axis < 1 || axis > n) throw CLI::ValidationError("--project", "axis " + tok + " outside 1.." + std::to_string(n));
    p[i++] = axis - 1;
  }
  if (i != 3 || p[0] == p[1] || p[1] == p[2] || p[0] == p[2]) {
    throw CLI::ValidationError("--project", "expects three distinct axes");
  }
  return p;
}

struct Loaded {
  std::string text;
  WeierstrassData datum;
};

Loaded load(const std::string& path, const Tolerances& tol) {
  std::string text = read_text(path);
  WeierstrassData w = to_datum(parse_datum(text), tol);
  return {std::move(text), std::move(w)};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal surfaces of genus zero from Weierstrass data", "minsurf"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());
  double tol_scale = 1.0;
  app.add_option("--tol", tol_scale, "Scale factor applied to every numerical tolerance")
      ->check(CLI::PositiveNumber);

  std::string input;
  auto* verify = app.add_subcommand("verify", "Check the null condition, real periods and completeness");
  verify->add_option("input", input, "Datum file")->required();

  std::string json_out;
  auto* analyze_cmd = app.add_subcommand("analyze", "Curvature, inequalities and end analysis");
  analyze_cmd->add_option("input", input, "Datum file")->required();
  analyze_cmd->add_option("--json", json_out, "Write the report document here");

  std::string name;
  std::optional<int> param;
  std::string output;
  auto* catalog = app.add_subcommand("catalog", "List catalog surfaces or write one as a datum file");
  catalog->add_option("name", name, "Catalog entry");
  catalog->add_option("--param", param, "Family parameter (m for generalized-jorge-meeks)");
  catalog->add_option("-o,--output", output, "Output file (default stdout)");

  double r_min = 1e-2, r_max = 1.0;
  int res = 64;
  std::string projection;
  auto* mesh = app.add_subcommand("mesh", "Triangulate the surface and write OBJ");
  mesh->add_option("input", input, "Datum file")->required();
  mesh->add_option("-o,--output", output, "OBJ file")->required();
  mesh->add_option("--rmin", r_min, "Innermost ring radius around each end")->capture_default_str();
  mesh->add_option("--rmax", r_max, "Outermost ring radius")->capture_default_str();
  mesh->add_option("--res", res, "Angular samples per ring")->capture_default_str()->check(CLI::Range(8, 1 << 16));
  mesh->add_option("--project", projection, "Axes written as x,y,z (1-based), e.g. 1,2,3");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }
  const Tolerances tol{tol_scale};

  try {
    if (*catalog) {
      if (name.empty()) {
        out << catalog_listing();
        return kOk;
      }
      CatalogEntry entry = [&] {
        try {
          return catalog_entry(name, param);
        } catch (const ParameterError& e) {
          err << "minsurf: " << e.what() << "\navailable entries:\n" << catalog_listing();
          throw;
        }
      }();
      const std::string text = serialize_datum(to_document(entry.data));
      if (output.empty()) {
        out << text;
      } else {
        write_text(output, text);
      }
      return kOk;
    }

    const Loaded in = load(input, tol);
    const WeierstrassData& w = in.datum;
    const Validation v = validate(w);

    if (*verify) {
      err << describe(w, v);
      return v.ok() ? kOk : kRejected;
    }
    if (!v.ok()) {
      err << describe(w, v) << "minsurf: datum rejected; not analyzing\n";
      return kRejected;
    }

    if (*analyze_cmd) {
      const AnalysisReport report = analyze(w, in.text);
      out << summary(report);
      if (!json_out.empty()) write_text(json_out, to_json(report));
      return kOk;
    }

    if (*mesh) {
      std::optional<Projection> axes;
      if (!projection.empty()) axes = parse_projection(projection, w.n());
      const ParamTriangulation tri = sample_domain(w, r_min, r_max, res);
      for (const std::string& warning : tri.warnings) err << "minsurf: warning: " << warning << "\n";
      const SurfaceMesh m = build_mesh(w, tri);
      export_obj(m, output, axes);
      out << "wrote " << output << " (" << m.vertices.size() << " vertices, " << m.faces.size() << " faces)";
      if (w.n() > 3) out << " and " << sidecar_path(output);
      out << "\n";
      return kOk;
    }
  } catch (const CLI::ValidationError& e) {
    err << "minsurf: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "minsurf: " << e.what() << "\n";
    return kUsage;
  } catch (const ParameterError&) {
    return kUsage;
  } catch (const IoError& e) {
    err << "minsurf: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidDatum& e) {
    err << "minsurf: invalid datum: " << e.what() << "\n";
    return kUsage;
  } catch (const DegenerateInput& e) {
    err << "minsurf: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "minsurf: " << e.what() << "\n";
    return kRejected;
  }
  return kUsage;
}

}  // namespace minsurf::cli
