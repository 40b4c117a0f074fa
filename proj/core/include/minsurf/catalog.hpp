#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minsurf/curvature.hpp"
#include "minsurf/ends.hpp"
#include "minsurf/weierstrass.hpp"

namespace minsurf {

// What the analysis pipeline must reproduce for a catalog surface. End
// fields are parallel to data.punctures().
struct Expected {
  int n = 0;
  int d = 0;
  PiMultiple tc;
  int ends = 0;
  int chi = 0;
  bool co_equality = false;
  std::vector<EndType> classifications;
  std::vector<int> rotation_indices;
  bool full = false;
  int l = 0;
  bool ejiri_equality = false;
};

struct CatalogEntry {
  std::string name;
  WeierstrassData data;
  Expected expected;
};

CatalogEntry catenoid();
CatalogEntry plane();
CatalogEntry enneper();
// 1 <= m <= 6, otherwise ParameterError.
CatalogEntry generalized_jorge_meeks(int m);
// The holomorphic curve (z, 1/z^2) in C^2 = R^4.
CatalogEntry holomorphic_counterexample();

std::vector<std::string> catalog_names();
// Throws ParameterError for an unknown name. param is m for the
// generalized Jorge-Meeks family (default 2) and ignored otherwise.
CatalogEntry catalog_entry(const std::string& name, std::optional<int> param = std::nullopt);

// Every entry, with the Jorge-Meeks family for m = 1..4.
std::vector<CatalogEntry> full_catalog();

}  // namespace minsurf
