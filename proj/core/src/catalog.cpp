#include "minsurf/catalog.hpp"

#include <cmath>

#include "minsurf/errors.hpp"

namespace minsurf {

namespace {

const Complex I(0.0, 1.0);

RationalMap ratio(ComplexPoly num, ComplexPoly den) { return RationalMap(std::move(num), std::move(den)); }

}  // namespace

CatalogEntry catenoid() {
  std::vector<RationalMap> phi{
      ratio({1.0, 0.0, -1.0}, {0.0, 0.0, 2.0}),
      ratio({I, 0.0, I}, {0.0, 0.0, 2.0}),
      ratio({1.0}, {0.0, 1.0}),
  };
  Expected e;
  e.n = 3;
  e.d = 2;
  e.tc = {-4};
  e.ends = 2;
  e.chi = 0;
  e.co_equality = true;
  e.classifications = {EndType::CatenoidType, EndType::CatenoidType};
  e.rotation_indices = {1, 1};
  e.full = true;
  e.l = 0;
  e.ejiri_equality = true;
  return {"catenoid", WeierstrassData("catenoid", std::move(phi)), e};
}

CatalogEntry plane() {
  std::vector<RationalMap> phi{
      RationalMap::polynomial({0.5}),
      RationalMap::polynomial({-0.5 * I}),
      RationalMap(),
  };
  Expected e;
  e.n = 3;
  e.d = 0;
  e.tc = {0};
  e.ends = 1;
  e.chi = 1;
  e.co_equality = true;
  e.classifications = {EndType::Planar};
  e.rotation_indices = {1};
  e.full = false;
  e.l = 2;
  e.ejiri_equality = true;
  return {"plane", WeierstrassData("plane", std::move(phi)), e};
}

CatalogEntry enneper() {
  std::vector<RationalMap> phi{
      RationalMap::polynomial({0.5, 0.0, -0.5}),
      RationalMap::polynomial({0.5 * I, 0.0, 0.5 * I}),
      RationalMap::polynomial({0.0, 1.0}),
  };
  Expected e;
  e.n = 3;
  e.d = 2;
  e.tc = {-4};
  e.ends = 1;
  e.chi = 1;
  e.co_equality = false;
  e.classifications = {EndType::HigherOrder};
  e.rotation_indices = {3};
  e.full = true;
  e.l = 0;
  e.ejiri_equality = true;
  return {"enneper", WeierstrassData("enneper", std::move(phi)), e};
}

CatalogEntry generalized_jorge_meeks(int m) {
  if (m < 1 || m > 6) throw ParameterError("generalized Jorge-Meeks needs 1 <= m <= 6, got " + std::to_string(m));
  // (z^{m+1} - 1)^2, doubled: the components below carry the factor 1/2 of
  // f = 2 Re int phi dz.
  ComplexPoly base = ComplexPoly::monomial(1.0, m + 1) - ComplexPoly::constant(1.0);
  const ComplexPoly den = 2.0 * (base * base);
  std::vector<RationalMap> phi;
  for (int j = 0; j < m; ++j) {
    const ComplexPoly zj = ComplexPoly::monomial(1.0, j);
    const ComplexPoly high = ComplexPoly::monomial(1.0, 2 * m - 2 * j);
    phi.push_back(RationalMap(zj * (ComplexPoly::constant(1.0) - high), den));
    phi.push_back(RationalMap(I * (zj * (ComplexPoly::constant(1.0) + high)), den));
  }
  phi.push_back(RationalMap(ComplexPoly::monomial(2.0 * std::sqrt(static_cast<double>(m)), m), den));

  Expected e;
  e.n = 2 * m + 1;
  e.d = 2 * m;
  e.tc = {-4LL * m};
  e.ends = m + 1;
  e.chi = 1 - m;
  e.co_equality = true;
  e.classifications.assign(m + 1, EndType::CatenoidType);
  e.rotation_indices.assign(m + 1, 1);
  e.full = true;
  e.l = 0;
  e.ejiri_equality = true;
  const std::string label = "generalized-jorge-meeks m=" + std::to_string(m);
  return {label, WeierstrassData(label, std::move(phi), std::nullopt, Complex(0.0)), e};
}

CatalogEntry holomorphic_counterexample() {
  // f = (z, 1/z^2) = 2 Re int (1/2, -i/2, -z^-3, i z^-3) dz
  std::vector<RationalMap> phi{
      RationalMap::polynomial({0.5}),
      RationalMap::polynomial({-0.5 * I}),
      ratio({-1.0}, ComplexPoly::monomial(1.0, 3)),
      ratio({I}, ComplexPoly::monomial(1.0, 3)),
  };
  Expected e;
  e.n = 4;
  e.d = 3;
  e.tc = {-6};
  e.ends = 2;
  e.chi = 0;
  e.co_equality = false;
  e.classifications = {EndType::HigherOrder, EndType::Planar};
  e.rotation_indices = {2, 1};
  e.full = true;
  e.l = 2;
  e.ejiri_equality = false;
  return {"holomorphic-counterexample", WeierstrassData("holomorphic-counterexample", std::move(phi)), e};
}

std::vector<std::string> catalog_names() {
  return {"catenoid", "plane", "enneper", "generalized-jorge-meeks", "holomorphic-counterexample"};
}

CatalogEntry catalog_entry(const std::string& name, std::optional<int> param) {
  if (name == "catenoid") return catenoid();
  if (name == "plane") return plane();
  if (name == "enneper") return enneper();
  if (name == "generalized-jorge-meeks") return generalized_jorge_meeks(param.value_or(2));
  if (name == "holomorphic-counterexample") return holomorphic_counterexample();
  std::string known;
  for (const std::string& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
  throw ParameterError("unknown catalog entry '" + name + "' (known: " + known + ")");
}

std::vector<CatalogEntry> full_catalog() {
  std::vector<CatalogEntry> out;
  out.push_back(catenoid());
  out.push_back(plane());
  out.push_back(enneper());
  for (int m = 1; m <= 4; ++m) out.push_back(generalized_jorge_meeks(m));
  out.push_back(holomorphic_counterexample());
  return out;
}

}  // namespace minsurf
