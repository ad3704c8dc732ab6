#pragma once

#include <map>
#include <optional>

#include "qknot/classify.hpp"
#include "qknot/groebner.hpp"
#include "qknot/poly.hpp"
#include "qknot/quatnum.hpp"
#include "qknot/symmat.hpp"
#include "qknot/word.hpp"

namespace qknot {

// Translational part of an affine element, as coordinates in the basis
// {1, A-, B-, (A-B-)-}; the scalar slot stays identically zero.
struct SymCocycle {
  std::array<Poly, 4> coords{};

  static SymCocycle zero() { return {}; }
  bool operator==(const SymCocycle&) const = default;
};

SymCocycle operator+(const SymCocycle& a, const SymCocycle& b);
SymCocycle operator-(const SymCocycle& a, const SymCocycle& b);

// The normal-form generator cocycles: v(a) = s A-, v(b) = s B- + (A-B-)-
// (or - (A-B-)- for the minus variant).
SymCocycle cocycle_va();
SymCocycle cocycle_vb(bool minus_sign = false);

// v(w) accumulated letter by letter via the cocycle condition
// v(g1 g2) = v(g1) + rho^(g1) v(g2), with v(g^-1) = -c(g^-1) v(g).
SymCocycle cocycle_of_word(const Word& w, const SymCocycle& va, const SymCocycle& vb);

// Formal integer combination of group words.
using WordCombo = std::map<Word, long>;

// Fox free derivatives (d w / d a, d w / d b); the independent second route
// to the relator cocycle.
std::pair<WordCombo, WordCombo> fox_derivatives(const Word& w);

// Applies an evaluated Fox derivative: sum of coeff * c(word) * v.
SymCocycle apply_fox(const WordCombo& combo, const SymCocycle& v);

struct AffineIdeal {
  std::vector<Poly> p_gens; // from the c-representation ideal (x, y)
  std::vector<Poly> q_gens; // cocycle relations (x, y, s)
  Ideal combined;           // normalized p_gens U q_gens
};

// Cocycle relation ideal of the presentation in the normal form
// rho(a) = (sA-, A), rho(b) = (sB- +- (A-B-)-, B).
AffineIdeal affine_ideal(const Presentation& pres, bool minus_sign = false);

// An affine isometry (v, A): v in {X,Y,Z} coordinates, N(A) = 1.
struct AffineElement {
  Vec3 v{};
  NumQuaternion A;
};

struct AxisShiftResult {
  double shift = 0.0;        // s with v = s A- + v_perp (0 when A- is null)
  Vec3 vector_shift{};       // s A-
  Vec3 v_perp{};
  bool null_direction = false;          // N(A-) = 0: no orthogonal split
  std::optional<Vec3> axis_point;       // empty = NoAxis
};

// Splits v orthogonally along A- (norm form of the algebra) and solves
// (Id - c(A)) u = v_perp on the complement for the axis point; NoAxis when
// the restricted system is singular. Throws ZeroAxisDirection when A- ~ 0.
AxisShiftResult axis_shift(const AffineElement& e, double tol = 1e-9);

} // namespace qknot
