#pragma once

namespace minsurf {

// Every numerical threshold in the library, derived from one scale factor
// so that a single command-line flag can loosen or tighten all of them.
struct Tolerances {
  double scale = 1.0;

  // Root clustering radius factor: roots closer than cluster()*(1+|r|) are
  // one root. Also governs rational reduction (common roots of num/den).
  double cluster() const { return 1e-8 * scale; }
  // Relative size below which a polynomial coefficient counts as zero.
  double coefficient() const { return 1e-10 * scale; }
  // Largest admissible |Im residue|.
  double residue() const { return 1e-10 * scale; }
  // Relative and absolute targets for path quadrature.
  double quadrature_rel() const { return 1e-10 * scale; }
  double quadrature_abs() const { return 1e-13 * scale; }
  // Singular values below rank()*sigma_max are zero.
  double rank() const { return 1e-8 * scale; }
  // b <= planar()*a classifies an order -2 end as planar.
  double planar() const { return 1e-8 * scale; }
  // Bilinear relations at an order -2 end, relative to |a_{-2}|^2.
  double relation() const { return 1e-9 * scale; }
  // Distance (relative to 1+|p|) below which a point is the puncture itself.
  double singular() const { return 1e-9 * scale; }
};

}  // namespace minsurf
