#pragma once

#include <array>

#include "qknot/poly.hpp"
#include "qknot/word.hpp"

namespace qknot {

// 4x4 matrix of polynomials in x, y acting on coordinates in the basis
// {1, A-, B-, (A-B-)-}; u is always stored as 1 - x^2.
class SymMat4 {
public:
  SymMat4() = default;

  static SymMat4 identity();
  static SymMat4 zero() { return SymMat4{}; }

  Poly& at(int r, int c) { return e_[static_cast<std::size_t>(4 * r + c)]; }
  const Poly& at(int r, int c) const { return e_[static_cast<std::size_t>(4 * r + c)]; }

  friend SymMat4 operator*(const SymMat4& a, const SymMat4& b);
  friend SymMat4 operator+(const SymMat4& a, const SymMat4& b);
  friend SymMat4 operator-(const SymMat4& a, const SymMat4& b);

  // column of the matrix applied to a coordinate vector
  std::array<Poly, 4> apply(const std::array<Poly, 4>& v) const;

  bool operator==(const SymMat4&) const = default;

private:
  std::array<Poly, 16> e_{};
};

// u = 1 - x^2 as a Poly.
Poly u_poly();

// Left-multiplication matrices m(A-), m(B-), m((A-B-)-).
struct BasisMults {
  SymMat4 mA;  // m(A-)
  SymMat4 mB;  // m(B-)
  SymMat4 mAB; // m((A-B-)-)
};
const BasisMults& left_mult_basis();

// Right-multiplication matrices r(A-), r(B-), r((A-B-)-); column j holds the
// coordinates of basis_j * X.
const BasisMults& right_mult_basis();

// m(A) = x I + m(A-) etc.; inverse letters use the conjugate (A^-1 = Abar).
SymMat4 left_mult_letter(Letter l);
SymMat4 right_mult_letter(Letter l);

// Product of the letter matrices of w; identity word gives I4.
SymMat4 eval_word(const Word& w);

// Conjugation action v -> X v Xbar of a generator letter, as the 4x4 matrix
// left_mult(X) * right_mult(Xbar). Fixes the scalar slot.
SymMat4 conj_action(Letter l);

// Conjugation action of a whole word.
SymMat4 conj_action_word(const Word& w);

// Gram matrix of {A-, B-, (A-B-)-}: [[u,y,0],[y,u,0],[0,0,u^2-y^2]].
std::array<Poly, 9> gram3();

} // namespace qknot
