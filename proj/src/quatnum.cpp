#include "qknot/quatnum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "qknot/errors.hpp"

namespace qknot {

bool NumQuaternion::is_real(double tol) const {
  return std::abs(alpha.imag()) < tol && std::abs(beta.imag()) < tol &&
         std::abs(gamma.imag()) < tol && std::abs(delta.imag()) < tol;
}

double NumQuaternion::max_abs() const {
  return std::max({std::abs(alpha), std::abs(beta), std::abs(gamma), std::abs(delta)});
}

NumQuaternion operator*(const NumQuaternion& p, const NumQuaternion& q) {
  const double mu = p.par.mu, nu = p.par.nu;
  NumQuaternion r;
  r.par = p.par;
  r.alpha = p.alpha * q.alpha + mu * p.beta * q.beta + nu * p.gamma * q.gamma -
            mu * nu * p.delta * q.delta;
  r.beta = p.alpha * q.beta + p.beta * q.alpha - nu * p.gamma * q.delta + nu * p.delta * q.gamma;
  r.gamma = p.alpha * q.gamma + p.gamma * q.alpha + mu * p.beta * q.delta - mu * p.delta * q.beta;
  r.delta = p.alpha * q.delta + p.delta * q.alpha + p.beta * q.gamma - p.gamma * q.beta;
  return r;
}

NumQuaternion operator+(const NumQuaternion& p, const NumQuaternion& q) {
  return {p.alpha + q.alpha, p.beta + q.beta, p.gamma + q.gamma, p.delta + q.delta, p.par};
}

NumQuaternion operator-(const NumQuaternion& p, const NumQuaternion& q) {
  return {p.alpha - q.alpha, p.beta - q.beta, p.gamma - q.gamma, p.delta - q.delta, p.par};
}

cplx scalar_product(const NumQuaternion& p, const NumQuaternion& q) {
  return -(p.minus_part() * q.minus_part()).plus();
}

NumQuaternion vector_product(const NumQuaternion& p, const NumQuaternion& q) {
  return (p.minus_part() * q.minus_part()).minus_part();
}

Mat2 embed_2x2(const NumQuaternion& q) {
  if (q.par == kSplit) {
    // Psi: i -> [[0,1],[-1,0]], j -> [[0,1],[1,0]]
    return {q.alpha + q.delta, q.beta + q.gamma, -q.beta + q.gamma, q.alpha - q.delta};
  }
  if (q.par == kHamilton) {
    // Phi: i -> [[0,-1],[1,0]], j -> [[0,i],[i,0]]
    const cplx im(0.0, 1.0);
    return {q.alpha - q.delta * im, -q.beta + q.gamma * im, q.beta + q.gamma * im,
            q.alpha + q.delta * im};
  }
  throw UnsupportedAlgebra("embed_2x2 supports (-1,-1) and (-1,1) only");
}

Mat3 rotation_matrix(const AlgebraParams& par, cplx a, cplx b, cplx c, cplx d, double tol) {
  const double mu = par.mu, nu = par.nu;
  cplx N = a * a - mu * b * b - nu * c * c + mu * nu * d * d;
  if (std::abs(N - 1.0) > tol) throw NotUnitNorm("rotation_matrix: N(A) != 1");
  return {
      a * a + mu * b * b + nu * c * c + mu * nu * d * d,
      -2.0 * a * b + 2.0 * nu * c * d,
      2.0 * a * c + 2.0 * mu * b * d,
      -2.0 * mu * a * b - 2.0 * mu * nu * c * d,
      a * a + mu * b * b - nu * c * c - mu * nu * d * d,
      -2.0 * mu * b * c - 2.0 * mu * a * d,
      2.0 * nu * a * c - 2.0 * mu * nu * b * d,
      -2.0 * nu * b * c + 2.0 * nu * a * d,
      a * a - mu * b * b + nu * c * c - mu * nu * d * d,
  };
}

Mat3 rotation_matrix(const NumQuaternion& q, double tol) {
  return rotation_matrix(q.par, q.alpha, q.beta, q.gamma, q.delta, tol);
}

std::array<double, 3> eta_diag(const AlgebraParams& par) {
  return {par.mu * par.nu, -par.nu, -par.mu};
}

std::array<cplx, 3> xyz_coords(const NumQuaternion& q) {
  // pure quaternion Z i + Y j - X ij
  return {-q.delta, q.gamma, q.beta};
}

NumQuaternion eval_word_numeric(const Word& w, const NumQuaternion& A, const NumQuaternion& B) {
  NumQuaternion acc{1.0, 0.0, 0.0, 0.0, A.par};
  for (Letter l : w.letters()) {
    const NumQuaternion& g = std::abs(l) == 1 ? A : B;
    acc = acc * (l > 0 ? g : g.conj());
  }
  return acc;
}

double verify_relator(const NumQuaternion& A, const NumQuaternion& B, const Presentation& pres,
                      double tol) {
  if (std::abs(A.norm() - 1.0) > tol || std::abs(B.norm() - 1.0) > tol)
    throw NotUnitNorm("verify_relator: generators must be unit quaternions");
  NumQuaternion lhs = eval_word_numeric(pres.lhs, A, B);
  NumQuaternion rhs = pres.balanced ? eval_word_numeric(pres.rhs, A, B)
                                    : NumQuaternion{1.0, 0.0, 0.0, 0.0, A.par};
  return (lhs - rhs).max_abs();
}

} // namespace qknot
