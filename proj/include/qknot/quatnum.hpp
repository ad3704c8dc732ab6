#pragma once

#include <array>
#include <complex>

#include "qknot/word.hpp"

namespace qknot {

using cplx = std::complex<double>;
using Mat2 = std::array<cplx, 4>; // row major 2x2
using Mat3 = std::array<cplx, 9>; // row major 3x3
using Vec3 = std::array<double, 3>;

// Structure constants of the quaternion algebra (mu,nu / k): i^2 = mu,
// j^2 = nu, ij = -ji. Both nonzero.
struct AlgebraParams {
  double mu = -1.0;
  double nu = -1.0;
  bool operator==(const AlgebraParams&) const = default;
};

inline constexpr AlgebraParams kHamilton{-1.0, -1.0}; // (-1,-1): S^3 / SU(2)
inline constexpr AlgebraParams kSplit{-1.0, 1.0};     // (-1, 1): SL(2,R) or SL(2,C)

// Numeric quaternion alpha + beta i + gamma j + delta ij over R or C.
struct NumQuaternion {
  cplx alpha{}, beta{}, gamma{}, delta{};
  AlgebraParams par;

  cplx plus() const { return alpha; }
  NumQuaternion minus_part() const { return {0.0, beta, gamma, delta, par}; }
  NumQuaternion conj() const { return {alpha, -beta, -gamma, -delta, par}; }
  // N(A) = alpha^2 - mu beta^2 - nu gamma^2 + mu nu delta^2
  cplx norm() const {
    return alpha * alpha - par.mu * beta * beta - par.nu * gamma * gamma +
           par.mu * par.nu * delta * delta;
  }
  cplx trace() const { return 2.0 * alpha; }
  bool is_real(double tol = 1e-12) const;
  double max_abs() const;
};

NumQuaternion operator*(const NumQuaternion& p, const NumQuaternion& q);
NumQuaternion operator+(const NumQuaternion& p, const NumQuaternion& q);
NumQuaternion operator-(const NumQuaternion& p, const NumQuaternion& q);

// <P-, Q-> = -(P-Q-)^+ on pure quaternions.
cplx scalar_product(const NumQuaternion& p, const NumQuaternion& q);

// P- x Q- = (P-Q-)^-, anticommutative and orthogonal to both factors.
NumQuaternion vector_product(const NumQuaternion& p, const NumQuaternion& q);

// 2x2 matrix image: Psi for (-1,1) (real entries when the quaternion is
// real), Phi for (-1,-1) (SU(2) when the quaternion is a real unit).
// Determinant equals N(q). Throws UnsupportedAlgebra for other parameters.
Mat2 embed_2x2(const NumQuaternion& q);

// The conjugation-action matrix m(mu,nu; alpha,beta,gamma,delta) on
// coordinates {X,Y,Z} in the basis {-ij, j, i}. Requires N = 1 within tol
// (NotUnitNorm otherwise).
Mat3 rotation_matrix(const AlgebraParams& par, cplx alpha, cplx beta, cplx gamma,
                     cplx delta, double tol = 1e-9);
Mat3 rotation_matrix(const NumQuaternion& q, double tol = 1e-9);

// Norm form on {X,Y,Z} coordinates: diag(mu nu, -nu, -mu).
std::array<double, 3> eta_diag(const AlgebraParams& par);

// {X,Y,Z} coordinates of the pure part (pure quaternion = Z i + Y j - X ij).
std::array<cplx, 3> xyz_coords(const NumQuaternion& q);

// Evaluates the two sides of the presentation at rho(a)=A, rho(b)=B by
// quaternion multiplication (inverses via conjugates; requires unit norms
// within tol) and returns the max-abs component difference.
double verify_relator(const NumQuaternion& A, const NumQuaternion& B,
                      const Presentation& pres, double tol = 1e-9);

// Word evaluated on concrete quaternions (A^-1 = conj(A); unit norm assumed).
NumQuaternion eval_word_numeric(const Word& w, const NumQuaternion& A,
                                const NumQuaternion& B);

} // namespace qknot
