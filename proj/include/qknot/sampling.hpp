#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qknot/classify.hpp"
#include "qknot/variety.hpp"

namespace qknot {

struct BranchSample {
  double y = 0.0;
  int branch = 0; // stable id, paired across x by nearest-y continuation
  Region region = Region::Degenerate_x2_1_y0;
  std::optional<double> profile; // y/(1-x^2); empty when |1-x^2| < 1e-9
};

struct CurveSample {
  double x = 0.0;
  std::vector<BranchSample> branches; // ascending y
};

// Real y-branches of the variety on the rational grid x_min, x_min+step, ...
// <= x_max. Generators must involve x, y only (UnsupportedIdeal otherwise);
// roots are isolated exactly per grid point and refined to width < eps.
std::vector<CurveSample> sample_variety(const CIdeal& ideal, const mpq_class& x_min,
                                        const mpq_class& x_max, const mpq_class& step,
                                        double eps = 1e-12, double boundary_tol = 1e-9);

// The y-branches above a single (not necessarily rational-friendly) x:
// exact roots of every generator plus near-tangent double roots where the
// generator value at a critical point stays below tol.
std::vector<double> branches_at(const CIdeal& ideal, double x, double tol = 1e-9,
                                double eps = 1e-12);

struct ProfileRow {
  double x = 0.0;
  int branch = 0;
  std::optional<double> profile;
  Region region = Region::Degenerate_x2_1_y0;
  bool parabola_boundary = false; // |profile| = 1 within tolerance
  bool unit_x = false;            // |x| = 1 within tolerance
};

std::vector<ProfileRow> region_profile(const std::vector<CurveSample>& samples,
                                       double boundary_tol = 1e-9);

// CSV with header "x,y,branch,region,profile", rows ordered by ascending x
// then ascending y; floats printed with 12 significant digits.
void emit_csv(const std::vector<CurveSample>& samples, std::ostream& os);
void emit_csv(const std::vector<CurveSample>& samples, const std::string& path); // IoError

} // namespace qknot
