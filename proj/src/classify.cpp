#include "qknot/classify.hpp"

#include <algorithm>
#include <cmath>

#include "qknot/errors.hpp"

namespace qknot {

const char* region_tag(Region r) {
  switch (r) {
    case Region::Case1_S3: return "1";
    case Region::Boundary_AlmostIrreducible_Complex: return "complex-boundary";
    case Region::Case2_1_SL2R: return "2.1";
    case Region::Case2_2_1_SL2R: return "2.2.1";
    case Region::Case2_2_2_SL2R: return "2.2.2";
    case Region::Case2_3_SL2R: return "2.3";
    case Region::Case2_4_AlmostIrr_SL2R: return "2.4";
    case Region::Case2_5_Parabolic_SL2R: return "2.5";
    case Region::Degenerate_x2_1_y0: return "degenerate";
  }
  return "?";
}

const char* pair_class_tag(PairClass c) {
  switch (c) {
    case PairClass::Irreducible: return "irreducible";
    case PairClass::AlmostIrreducible: return "almost_irreducible";
    case PairClass::Reducible: return "none";
  }
  return "?";
}

Region classify_point(double x, double y, double tol) {
  const double u = 1.0 - x * x;
  const double D = u * u - y * y;

  if (std::abs(u) < tol) {
    return std::abs(y) < tol ? Region::Degenerate_x2_1_y0 : Region::Case2_5_Parabolic_SL2R;
  }
  if (u > 0.0) {
    if (std::abs(D) < tol) return Region::Boundary_AlmostIrreducible_Complex;
    return D > 0.0 ? Region::Case1_S3 : Region::Case2_1_SL2R;
  }
  if (std::abs(D) < tol) return Region::Case2_4_AlmostIrr_SL2R;
  if (D > 0.0) return Region::Case2_3_SL2R;
  return y < 0.0 ? Region::Case2_2_1_SL2R : Region::Case2_2_2_SL2R;
}

namespace {

double checked_sqrt(double radicand, double tol, const char* what) {
  if (radicand < -tol)
    throw DomainError(std::string("negative radicand in ") + what + " (misclassified point?)");
  return std::sqrt(std::max(radicand, 0.0));
}

NumQuaternion real_quat(AlgebraParams par, double a, double b, double c, double d) {
  return {a, b, c, d, par};
}

} // namespace

PairConstruction construct_pair(Region r, double x, double y, double tol) {
  PairConstruction pc;
  const double u = 1.0 - x * x;

  switch (r) {
    case Region::Case1_S3: {
      // A = x + (y i + sqrt(u^2-y^2) j)/sqrt(u), B = x + sqrt(u) i
      double su = checked_sqrt(u, tol, "case 1");
      double w = checked_sqrt(u * u - y * y, tol, "case 1");
      pc.A = real_quat(kHamilton, x, y / su, w / su, 0.0);
      pc.B = real_quat(kHamilton, x, su, 0.0, 0.0);
      pc.field_desc = "Q(x,y,sqrt(1-x^2),sqrt((1-x^2)^2-y^2))";
      return pc;
    }
    case Region::Case2_1_SL2R: {
      // A = x + sqrt(u) I, B = x + (y I + sqrt(y^2-u^2) J)/sqrt(u)
      double su = checked_sqrt(u, tol, "case 2.1");
      double w = checked_sqrt(y * y - u * u, tol, "case 2.1");
      pc.A = real_quat(kSplit, x, su, 0.0, 0.0);
      pc.B = real_quat(kSplit, x, y / su, w / su, 0.0);
      pc.field_desc = "Q(x,y,sqrt(1-x^2),sqrt(y^2-(1-x^2)^2))";
      return pc;
    }
    case Region::Case2_2_1_SL2R: {
      // y < 0: A = x + sqrt(x^2-1) J, B = x + (sqrt(y^2-(x^2-1)^2) I - y J)/sqrt(x^2-1)
      double g = checked_sqrt(-u, tol, "case 2.2.1");
      double w = checked_sqrt(y * y - u * u, tol, "case 2.2.1");
      pc.A = real_quat(kSplit, x, 0.0, g, 0.0);
      pc.B = real_quat(kSplit, x, w / g, -y / g, 0.0);
      pc.field_desc = "Q(x,y,sqrt(x^2-1),sqrt(y^2-(x^2-1)^2))";
      return pc;
    }
    case Region::Case2_2_2_SL2R: {
      // y > 0: B = x - (sqrt(y^2-(x^2-1)^2) I + y J)/sqrt(x^2-1)
      double g = checked_sqrt(-u, tol, "case 2.2.2");
      double w = checked_sqrt(y * y - u * u, tol, "case 2.2.2");
      pc.A = real_quat(kSplit, x, 0.0, g, 0.0);
      pc.B = real_quat(kSplit, x, -w / g, -y / g, 0.0);
      pc.field_desc = "Q(x,y,sqrt(x^2-1),sqrt(y^2-(x^2-1)^2))";
      return pc;
    }
    case Region::Case2_3_SL2R: {
      // A = x + sqrt(x^2-1) J, B = x + (-y J + sqrt((x^2-1)^2-y^2) IJ)/sqrt(x^2-1)
      double g = checked_sqrt(-u, tol, "case 2.3");
      double w = checked_sqrt(u * u - y * y, tol, "case 2.3");
      pc.A = real_quat(kSplit, x, 0.0, g, 0.0);
      pc.B = real_quat(kSplit, x, 0.0, -y / g, w / g);
      pc.field_desc = "Q(x,y,sqrt(x^2-1),sqrt((x^2-1)^2-y^2))";
      return pc;
    }
    case Region::Case2_4_AlmostIrr_SL2R: {
      // A = x + sqrt(x^2-1) J, B = x + (IJ + I) - y/sqrt(x^2-1) J
      double g = checked_sqrt(-u, tol, "case 2.4");
      pc.A = real_quat(kSplit, x, 0.0, g, 0.0);
      pc.B = real_quat(kSplit, x, 1.0, -y / g, 1.0);
      pc.field_desc = "Q(x,y,sqrt(x^2-1))";
      return pc;
    }
    case Region::Case2_5_Parabolic_SL2R: {
      // A = x + I + J, B = x + (y/2)(I - J)
      pc.A = real_quat(kSplit, x, 1.0, 1.0, 0.0);
      pc.B = real_quat(kSplit, x, y / 2.0, -y / 2.0, 0.0);
      pc.field_desc = "Q(y)";
      return pc;
    }
    case Region::Boundary_AlmostIrreducible_Complex: {
      // A = x + sqrt(x^2-1) IJ with sqrt(x^2-1) = i sqrt(1-x^2);
      // B = x + ((2-3x^2+x^4-y^2) I + (-x^2+x^4-y^2) J)/(2x^2-2) - y/sqrt(x^2-1) IJ
      if (u < -tol) throw DomainError("complex boundary construction needs x^2 < 1");
      cplx sq(0.0, checked_sqrt(u, tol, "complex boundary")); // sqrt(x^2-1), x^2 < 1
      const double x2 = x * x, x4 = x2 * x2, y2 = y * y;
      const double den = 2.0 * x2 - 2.0;
      pc.A = {x, 0.0, 0.0, sq, kSplit};
      pc.B = {x, (2.0 - 3.0 * x2 + x4 - y2) / den, (-x2 + x4 - y2) / den, -y / sq, kSplit};
      pc.complex_field = true;
      pc.field_desc = "Q(x,y,sqrt(x^2-1))";
      return pc;
    }
    case Region::Degenerate_x2_1_y0:
      throw DegeneratePoint("(x,y) = (+-1, 0): no irreducible or almost-irreducible c-representation");
  }
  throw DomainError("unknown region");
}

std::optional<GeomInvariant> geometric_invariant(Region r, double x, double y, double tol) {
  const double u = 1.0 - x * x;
  auto check_cos = [&](double v) {
    if (std::abs(v) > 1.0 + tol) throw DomainError("invariant is not a cosine");
    return std::clamp(v, -1.0, 1.0);
  };
  auto check_cosh = [&](double v) {
    if (v < 1.0 - tol) throw DomainError("invariant is not a hyperbolic cosine");
    return std::max(v, 1.0);
  };
  switch (r) {
    case Region::Case1_S3:
      return GeomInvariant{"cos_omega", check_cos(y / u)};
    case Region::Case2_1_SL2R:
      return GeomInvariant{"cosh_d", check_cosh(y / u)};
    case Region::Case2_2_1_SL2R:
    case Region::Case2_2_2_SL2R:
      return GeomInvariant{"cosh_d", check_cosh(std::abs(y) / -u)};
    case Region::Case2_3_SL2R:
      return GeomInvariant{"cos_theta", check_cos(-y / -u)};
    default:
      return std::nullopt;
  }
}

IrreducibilityResult irreducibility_test(const NumQuaternion& A, const NumQuaternion& B,
                                         double tol) {
  const NumQuaternion Am = A.minus_part();
  const NumQuaternion Bm = B.minus_part();
  const NumQuaternion ABm = (Am * Bm).minus_part();

  // rows = coordinates in {i, j, ij}
  cplx m[3][3] = {{Am.beta, Am.gamma, Am.delta},
                  {Bm.beta, Bm.gamma, Bm.delta},
                  {ABm.beta, ABm.gamma, ABm.delta}};

  double scale = 0.0;
  for (auto& row : m)
    for (auto& v : row) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return {PairClass::Reducible, 0.0};

  // Gaussian elimination with partial pivoting; det from the pivots.
  cplx det = 1.0;
  int rank = 0;
  int rows_indep_ab = 0; // rank of the first two rows alone
  cplx work[3][3];
  std::copy(&m[0][0], &m[0][0] + 9, &work[0][0]);

  // rank of {A-, B-} first
  {
    cplx w2[2][3];
    std::copy(&m[0][0], &m[0][0] + 6, &w2[0][0]);
    int r2 = 0;
    for (int col = 0; col < 3 && r2 < 2; ++col) {
      int piv = -1;
      double best = tol * scale;
      for (int i = r2; i < 2; ++i)
        if (std::abs(w2[i][col]) > best) {
          best = std::abs(w2[i][col]);
          piv = i;
        }
      if (piv < 0) continue;
      std::swap_ranges(w2[r2], w2[r2] + 3, w2[piv]);
      for (int i = r2 + 1; i < 2; ++i) {
        cplx f = w2[i][col] / w2[r2][col];
        for (int j = col; j < 3; ++j) w2[i][j] -= f * w2[r2][j];
      }
      ++r2;
    }
    rows_indep_ab = r2;
  }

  for (int col = 0, row = 0; col < 3 && row < 3; ++col) {
    int piv = -1;
    double best = tol * scale;
    for (int i = row; i < 3; ++i)
      if (std::abs(work[i][col]) > best) {
        best = std::abs(work[i][col]);
        piv = i;
      }
    if (piv < 0) continue;
    if (piv != row) {
      std::swap_ranges(work[row], work[row] + 3, work[piv]);
      det = -det;
    }
    det *= work[row][col];
    for (int i = row + 1; i < 3; ++i) {
      cplx f = work[i][col] / work[row][col];
      for (int j = col; j < 3; ++j) work[i][j] -= f * work[row][j];
    }
    ++row;
    rank = row;
  }
  if (rank < 3) det = 0.0;

  PairClass label;
  if (rank == 3)
    label = PairClass::Irreducible;
  else if (rank == 2 && rows_indep_ab == 2)
    label = PairClass::AlmostIrreducible;
  else
    label = PairClass::Reducible;
  return {label, det};
}

std::pair<Mat3, Mat3> so_matrix_pair(const PairConstruction& pc, double tol) {
  return {rotation_matrix(pc.A, tol), rotation_matrix(pc.B, tol)};
}

ClassifiedPoint classify_full(const CIdeal& ideal, double x, double y, double tol,
                              double boundary_tol) {
  for (const Poly& g : ideal.simplified.gens) {
    double v = evaluate(g, x, y);
    if (std::abs(v) > tol)
      throw OffVariety("generator " + to_string(g) + " = " + std::to_string(v) +
                       " at the given point");
  }

  ClassifiedPoint out;
  out.x = x;
  out.y = y;
  out.region = classify_point(x, y, boundary_tol);
  if (out.region == Region::Degenerate_x2_1_y0) {
    out.reducibility = PairClass::Reducible;
    return out;
  }
  out.pair = construct_pair(out.region, x, y, tol);
  out.invariant = geometric_invariant(out.region, x, y, tol);
  out.residual = verify_relator(out.pair->A, out.pair->B, ideal.pres, tol);
  out.reducibility = irreducibility_test(out.pair->A, out.pair->B).label;
  return out;
}

} // namespace qknot
