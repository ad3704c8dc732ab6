#include <doctest.h>

#include <cmath>

#include "qknot/classify.hpp"
#include "qknot/errors.hpp"

using namespace qknot;

namespace {

const double kS3 = std::sqrt(3.0) / 2.0;
const double kS5 = std::sqrt(5.0) / 2.0;

double trefoil_y(double x) { return (2.0 * x * x - 1.0) / 2.0; }

void check_mat2(const Mat2& got, const Mat2& want, double tol = 1e-10) {
  for (int k = 0; k < 4; ++k)
    CHECK(std::abs(got[static_cast<std::size_t>(k)] - want[static_cast<std::size_t>(k)]) < tol);
}

void check_mat3(const Mat3& got, const Mat3& want, double tol = 1e-10) {
  for (int k = 0; k < 9; ++k)
    CHECK(std::abs(got[static_cast<std::size_t>(k)] - want[static_cast<std::size_t>(k)]) < tol);
}

void check_realizes(const PairConstruction& pc, double x, double y, double tol = 1e-10) {
  CHECK(std::abs(pc.A.plus() - x) < tol);
  CHECK(std::abs(pc.B.plus() - x) < tol);
  CHECK(std::abs(scalar_product(pc.A, pc.B) - y) < tol); // <A-,B-> = y
  CHECK(std::abs(pc.A.norm() - 1.0) < tol);
  CHECK(std::abs(pc.B.norm() - 1.0) < tol);
}

} // namespace

TEST_CASE("region dispatch") {
  CHECK(classify_point(0.3, trefoil_y(0.3)) == Region::Case1_S3);
  CHECK(classify_point(kS5, -0.25) == Region::Case2_4_AlmostIrr_SL2R);
  CHECK(classify_point(1.0, 0.0) == Region::Degenerate_x2_1_y0);
  CHECK(classify_point(1.0, 0.5) == Region::Case2_5_Parabolic_SL2R);
  CHECK(classify_point(kS3, 0.25) == Region::Boundary_AlmostIrreducible_Complex);
  CHECK(classify_point(0.95, trefoil_y(0.95)) == Region::Case2_1_SL2R);
  CHECK(classify_point(1.2, trefoil_y(1.2)) == Region::Case2_2_2_SL2R);
  CHECK(classify_point(1.2, -trefoil_y(1.2)) == Region::Case2_2_1_SL2R);
  CHECK(classify_point(1.2, 0.1) == Region::Case2_3_SL2R);
  CHECK(classify_point(1.2, 0.0) == Region::Case2_3_SL2R); // y=0 outside: right angle
  CHECK(classify_point(-1.0, 0.0) == Region::Degenerate_x2_1_y0);
}

TEST_CASE("construct_pair realizes (x, y) in every region") {
  struct Probe {
    Region r;
    double x, y;
  };
  const Probe probes[] = {
      {Region::Case1_S3, 0.3, trefoil_y(0.3)},
      {Region::Case2_1_SL2R, 0.95, trefoil_y(0.95)},
      {Region::Case2_1_SL2R, 0.0, -1.5},
      {Region::Case2_2_1_SL2R, 1.3, -0.9},
      {Region::Case2_2_2_SL2R, 1.2, trefoil_y(1.2)},
      {Region::Case2_3_SL2R, 1.25, 0.3},
      {Region::Case2_3_SL2R, 1.25, -0.3},
      {Region::Case2_4_AlmostIrr_SL2R, kS5, -0.25},
      {Region::Case2_4_AlmostIrr_SL2R, 1.3, 0.69},
      {Region::Case2_5_Parabolic_SL2R, 1.0, 0.5},
      {Region::Case2_5_Parabolic_SL2R, -1.0, -0.7},
      {Region::Boundary_AlmostIrreducible_Complex, kS3, 0.25},
      {Region::Boundary_AlmostIrreducible_Complex, 0.5, -0.75},
  };
  for (const auto& pr : probes) {
    CAPTURE(region_tag(pr.r));
    CAPTURE(pr.x);
    REQUIRE(classify_point(pr.x, pr.y) == pr.r);
    PairConstruction pc = construct_pair(pr.r, pr.x, pr.y);
    check_realizes(pc, pr.x, pr.y);
    if (pr.r == Region::Case1_S3) CHECK(pc.A.par == kHamilton);
    else CHECK(pc.A.par == kSplit);
    CHECK(pc.complex_field == (pr.r == Region::Boundary_AlmostIrreducible_Complex));

    // the conjugation matrices preserve the norm form and have det 1
    auto eta = eta_diag(pc.A.par);
    auto [ma, mb] = so_matrix_pair(pc, 1e-8);
    for (const Mat3& m : {ma, mb}) {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          cplx acc = 0.0;
          for (int k = 0; k < 3; ++k)
            acc += m[static_cast<std::size_t>(3 * k + i)] * eta[static_cast<std::size_t>(k)] *
                   m[static_cast<std::size_t>(3 * k + j)];
          cplx want = i == j ? cplx(eta[static_cast<std::size_t>(i)]) : cplx(0.0);
          CHECK(std::abs(acc - want) < 1e-9);
        }
      cplx det = m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
                 m[2] * (m[3] * m[7] - m[4] * m[6]);
      CHECK(std::abs(det - 1.0) < 1e-9);
    }
  }
  CHECK_THROWS_AS(construct_pair(Region::Degenerate_x2_1_y0, 1.0, 0.0), DegeneratePoint);
  CHECK_THROWS_AS(construct_pair(Region::Case1_S3, 1.5, 0.2), DomainError);
}

TEST_CASE("case 1 explicit shape (trefoil x = 0.3)") {
  double x = 0.3, y = trefoil_y(0.3), u = 1.0 - x * x;
  PairConstruction pc = construct_pair(Region::Case1_S3, x, y);
  CHECK(pc.A.alpha.real() == doctest::Approx(x));
  CHECK(pc.A.beta.real() == doctest::Approx(y / std::sqrt(u)));
  CHECK(pc.A.gamma.real() == doctest::Approx(std::sqrt(u * u - y * y) / std::sqrt(u)));
  CHECK(pc.B.beta.real() == doctest::Approx(std::sqrt(u)));
  CHECK(pc.field_desc == "Q(x,y,sqrt(1-x^2),sqrt((1-x^2)^2-y^2))");
}

TEST_CASE("case 2.4 figure-eight goldens") {
  PairConstruction pc = construct_pair(Region::Case2_4_AlmostIrr_SL2R, kS5, -0.25);
  // A = sqrt5/2 + (1/2) J, B = sqrt5/2 + I + (1/2) J + IJ
  CHECK(pc.A.gamma.real() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pc.A.beta.real() == doctest::Approx(0.0));
  CHECK(pc.B.beta.real() == doctest::Approx(1.0));
  CHECK(pc.B.gamma.real() == doctest::Approx(0.5));
  CHECK(pc.B.delta.real() == doctest::Approx(1.0));
  CHECK(pc.field_desc == "Q(x,y,sqrt(x^2-1))");

  // Psi images; the two SL(2,R) matrices of the worked example
  check_mat2(embed_2x2(pc.A), Mat2{kS5, 0.5, 0.5, kS5});
  check_mat2(embed_2x2(pc.B), Mat2{1.0 + kS5, 1.5, -0.5, -1.0 + kS5});

  auto [ma, mb] = so_matrix_pair(pc);
  check_mat3(ma, Mat3{1.5, 0, kS5, 0, 1, 0, kS5, 0, 1.5});
}

TEST_CASE("case 1 trefoil rotation matrix golden") {
  // m_x(b) = [[2x^2-1, -2x sqrt(1-x^2), 0], [2x sqrt(1-x^2), 2x^2-1, 0], [0,0,1]]
  double x = 0.3, u = 1 - x * x;
  PairConstruction pc = construct_pair(Region::Case1_S3, x, trefoil_y(x));
  auto [ma, mb] = so_matrix_pair(pc);
  check_mat3(mb, Mat3{2 * x * x - 1, -2 * x * std::sqrt(u), 0, 2 * x * std::sqrt(u),
                      2 * x * x - 1, 0, 0, 0, 1});
  (void)ma;
}

TEST_CASE("case 2.5 trefoil goldens at (1, 1/2)") {
  PairConstruction pc = construct_pair(Region::Case2_5_Parabolic_SL2R, 1.0, 0.5);
  CHECK(pc.A.beta.real() == doctest::Approx(1.0));
  CHECK(pc.A.gamma.real() == doctest::Approx(1.0));
  CHECK(pc.B.beta.real() == doctest::Approx(0.25));
  CHECK(pc.B.gamma.real() == doctest::Approx(-0.25));

  auto [ma, mb] = so_matrix_pair(pc);
  check_mat3(ma, Mat3{1, -2, 2, 2, -1, 2, 2, -2, 3});
  check_mat3(mb, Mat3{1, -0.5, -0.5, 0.5, 7.0 / 8, -1.0 / 8, -0.5, 1.0 / 8, 9.0 / 8});
}

TEST_CASE("complex boundary construction (trefoil (sqrt3/2, 1/4))") {
  PairConstruction pc = construct_pair(Region::Boundary_AlmostIrreducible_Complex, kS3, 0.25);
  // A = sqrt3/2 + (i/2) IJ, B = sqrt3/2 - I/2 + J/2 + (i/2) IJ
  CHECK(pc.A.delta.imag() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pc.B.beta.real() == doctest::Approx(-0.5).epsilon(1e-10));
  CHECK(pc.B.gamma.real() == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(pc.B.delta.imag() == doctest::Approx(0.5).epsilon(1e-10));

  // Psi image: the diagonal SL(2,C) matrix of the worked example
  Mat2 a2 = embed_2x2(pc.A);
  CHECK(std::abs(a2[0] - cplx(kS3, 0.5)) < 1e-10);
  CHECK(std::abs(a2[3] - cplx(kS3, -0.5)) < 1e-10);
  CHECK(std::abs(a2[1]) < 1e-12);

  // coordinate determinant = y^2 - (1-x^2)^2 = 0 on the boundary
  auto ir = irreducibility_test(pc.A, pc.B);
  CHECK(ir.label == PairClass::AlmostIrreducible);
  CHECK(std::abs(ir.det) < 1e-9);
}

TEST_CASE("complex construction determinant off the boundary") {
  // the complex construction is valid for any x^2 != 1; its coordinate
  // determinant must equal y^2 - (1-x^2)^2 (signed)
  double x = 0.4, y = 0.9; // 1-x^2 = 0.84, y^2 != u^2
  PairConstruction pc = construct_pair(Region::Boundary_AlmostIrreducible_Complex, x, y);
  check_realizes(pc, x, y);
  auto ir = irreducibility_test(pc.A, pc.B);
  double want = y * y - (1 - x * x) * (1 - x * x);
  CHECK(std::abs(ir.det - want) < 1e-9);
  CHECK(ir.label == PairClass::Irreducible);
}

TEST_CASE("geometric invariants") {
  double x = 0.3, u = 1 - x * x;
  auto inv1 = geometric_invariant(Region::Case1_S3, x, trefoil_y(x));
  REQUIRE(inv1);
  CHECK(inv1->kind == "cos_omega");
  CHECK(inv1->value == doctest::Approx((x * x - 0.5) / u));

  double x5 = 1.2;
  auto inv5 = geometric_invariant(Region::Case2_2_2_SL2R, x5, trefoil_y(x5));
  REQUIRE(inv5);
  CHECK(inv5->kind == "cosh_d");
  CHECK(inv5->value == doctest::Approx((x5 * x5 - 0.5) / (x5 * x5 - 1.0)));

  // figure-eight case 4 (region 2.3): cos theta = (1 - sqrt(5-24x^2+16x^4))/(4(x^2-1))
  double x8 = 1.4;
  double disc = 5 - 24 * x8 * x8 + 16 * std::pow(x8, 4);
  double y8 = (-1 + std::sqrt(disc)) / 4;
  auto inv8 = geometric_invariant(Region::Case2_3_SL2R, x8, y8);
  REQUIRE(inv8);
  CHECK(inv8->kind == "cos_theta");
  CHECK(inv8->value == doctest::Approx((1 - std::sqrt(disc)) / (4 * (x8 * x8 - 1))));

  CHECK_FALSE(geometric_invariant(Region::Case2_4_AlmostIrr_SL2R, kS5, -0.25));
  CHECK_FALSE(geometric_invariant(Region::Case2_5_Parabolic_SL2R, 1.0, 0.5));
  CHECK_THROWS_AS(geometric_invariant(Region::Case1_S3, 0.3, 0.95), DomainError);
  CHECK_THROWS_AS(geometric_invariant(Region::Case2_1_SL2R, 0.95, -0.5), DomainError);
}

TEST_CASE("irreducibility of constructed pairs") {
  PairConstruction c1 = construct_pair(Region::Case1_S3, 0.3, trefoil_y(0.3));
  CHECK(irreducibility_test(c1.A, c1.B).label == PairClass::Irreducible);
  // Hamilton pairs carry det (1-x^2)^2 - y^2
  double u = 1 - 0.09, y = trefoil_y(0.3);
  CHECK(std::abs(irreducibility_test(c1.A, c1.B).det - (u * u - y * y)) < 1e-10);

  PairConstruction c24 = construct_pair(Region::Case2_4_AlmostIrr_SL2R, kS5, -0.25);
  CHECK(irreducibility_test(c24.A, c24.B).label == PairClass::AlmostIrreducible);

  // diagonal (reducible, not almost-reducible) pair: A = B with B- = A-
  PairConstruction cb = construct_pair(Region::Case1_S3, 0.3, 1 - 0.09);
  // on the upper parabola the case-1 construction degenerates to A- = B-
  CHECK(irreducibility_test(cb.A, cb.B).label == PairClass::Reducible);

  // the diagonal pair rho(a) = rho(b) = diag((sqrt3+i)/2, (sqrt3-i)/2) at
  // (sqrt3/2, 1/4): A = B = sqrt3/2 + (i/2) IJ
  NumQuaternion D{kS3, 0.0, 0.0, cplx(0.0, 0.5), kSplit};
  CHECK(irreducibility_test(D, D).label == PairClass::Reducible);
  CHECK(verify_relator(D, D, parse_presentation("aba=bab"), 1e-9) < 1e-12);
}

TEST_CASE("relator residuals at on/off variety points") {
  Presentation tre = parse_presentation("aba=bab");
  CIdeal ci = c_ideal(tre);

  ClassifiedPoint cp = classify_full(ci, 0.3, trefoil_y(0.3));
  REQUIRE(cp.residual);
  CHECK(*cp.residual < 1e-9);
  CHECK(cp.region == Region::Case1_S3);
  CHECK(cp.reducibility == PairClass::Irreducible);

  // off-variety input is rejected
  CHECK_THROWS_AS(classify_full(ci, 0.3, 0.7), OffVariety);

  // a made-up pair at an off-variety point leaves a large residual
  PairConstruction pc = construct_pair(Region::Case1_S3, 0.3, 0.7);
  CHECK(verify_relator(pc.A, pc.B, tre, 1e-9) > 0.1);
}

TEST_CASE("degenerate point gives a structured result") {
  // "a=a" puts no condition on (x,y): the whole plane, (1,0) included
  CIdeal all = c_ideal(parse_presentation("a=a"));
  CHECK(all.simplified.gens.empty());
  ClassifiedPoint cp = classify_full(all, 1.0, 0.0);
  CHECK(cp.region == Region::Degenerate_x2_1_y0);
  CHECK_FALSE(cp.pair);
  CHECK(cp.reducibility == PairClass::Reducible);
  CHECK_FALSE(cp.residual);
}
