#include "qknot/symmat.hpp"

#include <cstdlib>

#include "qknot/errors.hpp"

namespace qknot {

namespace {

Poly c(long v) { return Poly::constant(mpz_class(v)); }
Poly X() { return Poly::var(VX); }
Poly Y() { return Poly::var(VY); }

SymMat4 from_rows(const std::array<std::array<Poly, 4>, 4>& rows) {
  SymMat4 m;
  for (int r = 0; r < 4; ++r)
    for (int col = 0; col < 4; ++col) m.at(r, col) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
  return m;
}

} // namespace

Poly u_poly() { return c(1) - X() * X(); }

SymMat4 SymMat4::identity() {
  SymMat4 m;
  for (int i = 0; i < 4; ++i) m.at(i, i) = c(1);
  return m;
}

SymMat4 operator*(const SymMat4& a, const SymMat4& b) {
  SymMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      Poly acc;
      for (int k = 0; k < 4; ++k) acc += a.at(i, k) * b.at(k, j);
      r.at(i, j) = acc;
    }
  return r;
}

SymMat4 operator+(const SymMat4& a, const SymMat4& b) {
  SymMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = a.at(i, j) + b.at(i, j);
  return r;
}

SymMat4 operator-(const SymMat4& a, const SymMat4& b) {
  SymMat4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r.at(i, j) = a.at(i, j) - b.at(i, j);
  return r;
}

std::array<Poly, 4> SymMat4::apply(const std::array<Poly, 4>& v) const {
  std::array<Poly, 4> r;
  for (int i = 0; i < 4; ++i) {
    Poly acc;
    for (int k = 0; k < 4; ++k) acc += at(i, k) * v[static_cast<std::size_t>(k)];
    r[static_cast<std::size_t>(i)] = acc;
  }
  return r;
}

const BasisMults& left_mult_basis() {
  static const BasisMults tables = [] {
    const Poly u = u_poly();
    const Poly y = Y();
    const Poly z;

    BasisMults t;
    // multiplication table: A-A- = B-B- = -u, A-B- = -y + (A-B-)-,
    // B-A- = -y - (A-B-)-, A-(A-B-)- = yA- - uB-, B-(A-B-)- = -yB- + uA-,
    // (A-B-)-A- = -yA- + uB-, (A-B-)-B- = yB- - uA-, ((A-B-)-)^2 = y^2 - u^2
    t.mA = from_rows({{{z, -u, -y, z},
                       {c(1), z, z, y},
                       {z, z, z, -u},
                       {z, z, c(1), z}}});
    t.mB = from_rows({{{z, -y, -u, z},
                       {z, z, z, u},
                       {c(1), z, z, -y},
                       {z, -c(1), z, z}}});
    t.mAB = from_rows({{{z, z, z, y * y - u * u},
                        {z, -y, -u, z},
                        {z, u, y, z},
                        {c(1), z, z, z}}});
    return t;
  }();
  return tables;
}

const BasisMults& right_mult_basis() {
  static const BasisMults tables = [] {
    const Poly u = u_poly();
    const Poly y = Y();
    const Poly z;

    BasisMults t;
    // same table read on the right: column j = basis_j * X
    t.mA = from_rows({{{z, -u, -y, z},
                       {c(1), z, z, -y},
                       {z, z, z, u},
                       {z, z, -c(1), z}}});
    t.mB = from_rows({{{z, -y, -u, z},
                       {z, z, z, -u},
                       {c(1), z, z, y},
                       {z, c(1), z, z}}});
    t.mAB = from_rows({{{z, z, z, y * y - u * u},
                        {z, y, u, z},
                        {z, -u, -y, z},
                        {c(1), z, z, z}}});
    return t;
  }();
  return tables;
}

SymMat4 left_mult_letter(Letter l) {
  const auto& t = left_mult_basis();
  SymMat4 xI;
  for (int i = 0; i < 4; ++i) xI.at(i, i) = X();
  const SymMat4& gen = std::abs(l) == 1 ? t.mA : t.mB;
  return l > 0 ? xI + gen : xI - gen;
}

SymMat4 right_mult_letter(Letter l) {
  const auto& t = right_mult_basis();
  SymMat4 xI;
  for (int i = 0; i < 4; ++i) xI.at(i, i) = X();
  const SymMat4& gen = std::abs(l) == 1 ? t.mA : t.mB;
  return l > 0 ? xI + gen : xI - gen;
}

SymMat4 eval_word(const Word& w) {
  SymMat4 m = SymMat4::identity();
  for (Letter l : w.letters()) m = m * left_mult_letter(l);
  return m;
}

SymMat4 conj_action(Letter l) {
  return left_mult_letter(l) * right_mult_letter(static_cast<Letter>(-l));
}

SymMat4 conj_action_word(const Word& w) {
  SymMat4 m = SymMat4::identity();
  for (Letter l : w.letters()) m = m * conj_action(l);
  return m;
}

std::array<Poly, 9> gram3() {
  const Poly u = u_poly();
  const Poly y = Y();
  const Poly z;
  return {u, y, z, y, u, z, z, z, u * u - y * y};
}

} // namespace qknot
