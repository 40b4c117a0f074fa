#include "report.hpp"

#include <cstdio>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "minsurf/errors.hpp"

namespace minsurf::cli {

namespace {

using Json = nlohmann::ordered_json;

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

std::string yes_no(bool b) { return b ? "TRUE" : "FALSE"; }

std::string num(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

}  // namespace

std::string tool_version() { return MINSURF_VERSION; }

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

AnalysisReport analyze(const WeierstrassData& w, std::string_view input_bytes) {
  AnalysisReport r;
  r.label = w.label();
  r.input_hash = fnv1a64(input_bytes);
  r.n = w.n();
  r.validation = validate(w);
  r.punctures.assign(w.punctures().begin(), w.punctures().end());
  r.curvature = curvature_report(w, true, 1e-6 * w.tolerances().scale);

  r.all_ends_catenoid_or_planar = true;
  r.all_ends_embedded = true;
  for (const SpherePoint& p : w.punctures()) {
    EndRecord rec{analyze_end(w, p), std::nullopt, {}};
    try {
      rec.rotation_numeric = rotation_index_numeric(w, rec.analysis, kReportRadii);
    } catch (const NumericInstability& e) {
      rec.rotation_error = e.what();
    }
    if (rec.analysis.classification == EndType::HigherOrder) r.all_ends_catenoid_or_planar = false;
    if (!rec.analysis.embedded) r.all_ends_embedded = false;
    r.ends.push_back(std::move(rec));
  }
  r.main_theorem_consistent = r.curvature.co_equality == r.all_ends_catenoid_or_planar &&
                              r.all_ends_catenoid_or_planar == r.all_ends_embedded && r.curvature.co_cross_check;
  return r;
}

std::string to_json(const AnalysisReport& r) {
  const CurvatureReport& c = r.curvature;
  Json doc;
  doc["tool"] = {{"name", "minsurf"}, {"version", tool_version()}};
  doc["datum"] = {{"label", r.label}, {"n", r.n}, {"input_hash", "fnv1a64:" + r.input_hash}};

  Json orders = Json::array();
  for (size_t i = 0; i < r.punctures.size(); ++i) {
    orders.push_back({{"point", r.punctures[i].to_string()}, {"mu", r.validation.orders[i].mu}});
  }
  doc["validation"] = {{"null_ok", r.validation.null.ok},
                       {"null_defect", r.validation.null.defect},
                       {"residues_ok", r.validation.residues.ok},
                       {"residue_worst_imag", r.validation.residues.worst_imag},
                       {"complete", r.validation.complete},
                       {"ends", orders}};

  Json curv;
  curv["d"] = c.d;
  curv["tc_algebraic"] = c.tc_algebraic.symbolic();
  if (c.tc_numeric) {
    curv["tc_numeric"] = *c.tc_numeric;
  } else {
    curv["tc_numeric"] = nullptr;
  }
  curv["genus"] = c.genus;
  curv["ends"] = c.m;
  curv["chi"] = c.chi;
  curv["co_rhs"] = c.co_rhs.symbolic();
  curv["co_holds"] = c.co_holds;
  curv["co_equality"] = c.co_equality;
  curv["all_orders_minus_two"] = c.all_orders_minus_two;
  curv["full"] = c.full;
  curv["l"] = c.l;
  curv["gackstatter_rhs"] = c.gackstatter_rhs.symbolic();
  curv["gackstatter_applicable"] = c.gackstatter_applicable;
  curv["gackstatter_holds"] = c.gackstatter_holds;
  curv["ejiri_rhs"] = c.ejiri_rhs.symbolic();
  curv["ejiri_holds"] = c.ejiri_holds;
  curv["ejiri_equality"] = c.ejiri_equality;
  doc["curvature"] = curv;

  Json ends = Json::array();
  for (const EndRecord& rec : r.ends) {
    const EndAnalysis& e = rec.analysis;
    Json a2 = Json::array();
    for (Complex z : e.a_minus2) a2.push_back(complex_json(z));
    Json frame = Json::array();
    for (const auto& v : e.frame) frame.push_back(v);
    Json end;
    end["point"] = e.puncture.to_string();
    end["mu"] = e.mu;
    end["k"] = e.k;
    end["classification"] = to_string(e.classification);
    end["a"] = e.a;
    end["b"] = e.b;
    end["a_minus2"] = a2;
    end["a_minus1"] = e.a_minus1;
    end["frame"] = frame;
    end["rotation_index"] = e.rotation_index;
    if (rec.rotation_numeric) {
      end["rotation_index_numeric"] = *rec.rotation_numeric;
    } else {
      end["rotation_index_numeric"] = nullptr;
      end["rotation_error"] = rec.rotation_error;
    }
    end["embedded"] = e.embedded;
    ends.push_back(end);
  }
  doc["ends"] = ends;

  doc["verdicts"] = {{"co_equality", c.co_equality},
                     {"all_ends_catenoid_or_planar", r.all_ends_catenoid_or_planar},
                     {"all_ends_embedded", r.all_ends_embedded},
                     {"main_theorem_cross_check", r.main_theorem_consistent ? "pass" : "fail"}};
  return doc.dump(2) + "\n";
}

std::string summary(const AnalysisReport& r) {
  const CurvatureReport& c = r.curvature;
  std::ostringstream os;
  os << "datum " << r.label << " (n = " << r.n << ", hash " << r.input_hash << ")\n";
  os << "Gauss map degree d = " << c.d << "\n";
  os << "total curvature TC = " << c.tc_algebraic.symbolic();
  if (c.tc_numeric) os << " (numeric " << num(*c.tc_numeric) << ")";
  os << "\n";
  os << "ends m = " << c.m << ", Euler characteristic chi = " << c.chi << "\n";
  os << "Chern-Osserman: TC <= " << c.co_rhs.symbolic() << " " << (c.co_holds ? "holds" : "FAILS")
     << ", equality " << yes_no(c.co_equality) << "\n";
  os << "full " << yes_no(c.full) << ", l = " << c.l << "\n";
  os << "Gackstatter: TC <= " << c.gackstatter_rhs.symbolic() << " " << (c.gackstatter_holds ? "holds" : "FAILS")
     << (c.gackstatter_applicable ? "" : " (not full; not applicable)") << "\n";
  os << "Ejiri: TC <= " << c.ejiri_rhs.symbolic() << " " << (c.ejiri_holds ? "holds" : "FAILS") << ", equality "
     << yes_no(c.ejiri_equality) << "\n";
  for (const EndRecord& rec : r.ends) {
    const EndAnalysis& e = rec.analysis;
    os << "end " << e.puncture.to_string() << ": mu = " << e.mu << ", " << to_string(e.classification)
       << ", a = " << num(e.a) << ", b = " << num(e.b) << ", rotation index " << e.rotation_index;
    if (rec.rotation_numeric) {
      os << " (numeric " << *rec.rotation_numeric << ")";
    } else {
      os << " (numeric failed: " << rec.rotation_error << ")";
    }
    os << (e.embedded ? ", embedded" : ", not embedded") << "\n";
  }
  os << "main theorem cross-check: " << (r.main_theorem_consistent ? "pass" : "FAIL") << "\n";
  return os.str();
}

std::string describe(const WeierstrassData& w, const Validation& v) {
  std::ostringstream os;
  os << "null condition: " << (v.null.ok ? "ok" : "FAILED") << " (defect " << v.null.defect << ")\n";
  os << "real periods: " << (v.residues.ok ? "ok" : "FAILED") << " (worst |Im res| " << v.residues.worst_imag
     << ")\n";
  for (size_t i = 0; i < v.orders.size(); ++i) {
    os << "end " << w.punctures()[i].to_string() << ": order " << v.orders[i].mu
       << (v.orders[i].mu <= -2 ? "" : " (not complete)") << "\n";
  }
  os << "complete: " << (v.complete ? "ok" : "FAILED") << "\n";
  return os.str();
}

}  // namespace minsurf::cli
