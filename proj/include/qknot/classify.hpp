#pragma once

#include <optional>
#include <string>

#include "qknot/quatnum.hpp"
#include "qknot/variety.hpp"
#include "qknot/word.hpp"

namespace qknot {

// Real-point regions of the classification; boundary values within the
// boundary tolerance snap to the boundary case.
enum class Region {
  Case1_S3,                            // 1-x^2>0, (1-x^2)^2>y^2
  Boundary_AlmostIrreducible_Complex,  // 1-x^2>0, (1-x^2)^2=y^2 (SL(2,C) only)
  Case2_1_SL2R,                        // 1-x^2>0, (1-x^2)^2<y^2
  Case2_2_1_SL2R,                      // 1-x^2<0, (1-x^2)^2<y^2, y<0
  Case2_2_2_SL2R,                      // 1-x^2<0, (1-x^2)^2<y^2, y>0
  Case2_3_SL2R,                        // 1-x^2<0, (1-x^2)^2>y^2
  Case2_4_AlmostIrr_SL2R,              // 1-x^2<0, (1-x^2)^2=y^2
  Case2_5_Parabolic_SL2R,              // x^2=1, y != 0
  Degenerate_x2_1_y0,                  // x^2=1, y = 0
};

const char* region_tag(Region r); // "1", "2.1", ..., "complex-boundary", "degenerate"

// Pure sign dispatch; the caller checks that (x,y) lies on the variety.
Region classify_point(double x, double y, double boundary_tol = 1e-9);

struct PairConstruction {
  NumQuaternion A;
  NumQuaternion B;
  bool complex_field = false; // true only for the (1-x^2)^2 = y^2, x^2 < 1 boundary
  std::string field_desc;
};

// The boxed quaternion pair of the region (positive square-root branches).
// Throws DegeneratePoint for Degenerate_x2_1_y0 and DomainError when a
// radicand is negative beyond tol (misclassification signal).
PairConstruction construct_pair(Region r, double x, double y, double tol = 1e-9);

struct GeomInvariant {
  std::string kind; // "cos_omega", "cosh_d" or "cos_theta"
  double value;
};

// Case 1 -> cos w = y/(1-x^2); 2.1 -> cosh d = y/(1-x^2);
// 2.2.x -> cosh d = |y|/(x^2-1); 2.3 -> cos theta = -y/(x^2-1); else none.
// DomainError if |cos| > 1 or cosh < 1 beyond tol.
std::optional<GeomInvariant> geometric_invariant(Region r, double x, double y,
                                                 double tol = 1e-9);

enum class PairClass { Irreducible, AlmostIrreducible, Reducible };

const char* pair_class_tag(PairClass c); // "irreducible", "almost_irreducible", "none"

struct IrreducibilityResult {
  PairClass label;
  cplx det; // determinant of the {A-, B-, (A-B-)-} coordinate matrix
};

// Rank of the 3x3 coordinate matrix of {A-, B-, (A-B-)-} in basis {i,j,ij}:
// 3 -> irreducible, 2 with independent {A-,B-} -> almost irreducible,
// else reducible. |det| is cross-checked against |y^2 - (1-x^2)^2|.
IrreducibilityResult irreducibility_test(const NumQuaternion& A, const NumQuaternion& B,
                                         double tol = 1e-9);

// 3x3 conjugation matrices of the constructed pair (Eq. of the action matrix).
std::pair<Mat3, Mat3> so_matrix_pair(const PairConstruction& pc, double tol = 1e-9);

// One classified point with everything the CLI reports.
struct ClassifiedPoint {
  double x = 0.0, y = 0.0;
  Region region = Region::Degenerate_x2_1_y0;
  std::optional<PairConstruction> pair; // empty for the degenerate point
  std::optional<GeomInvariant> invariant;
  PairClass reducibility = PairClass::Reducible;
  std::optional<double> residual; // relator residual, when a pair exists
};

// Full pipeline at a variety point: dispatch, construct, invariant, relator
// check, irreducibility. Throws OffVariety if a simplified generator exceeds
// tol at (x,y).
ClassifiedPoint classify_full(const CIdeal& ideal, double x, double y, double tol = 1e-9,
                              double boundary_tol = 1e-9);

} // namespace qknot
