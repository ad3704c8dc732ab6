#pragma once

#include <array>

#include "qknot/groebner.hpp"
#include "qknot/poly.hpp"
#include "qknot/word.hpp"

namespace qknot {

// The c-representation ideal of a presentation: the raw 4-vector of
// relator polynomials and its normalized, Groebner-reduced form.
// For presentations in the conjugate shape a v = v b the outer raw entries
// vanish; `warning` is set (not thrown) when that pattern breaks.
struct CIdeal {
  std::array<Poly, 4> raw;
  Ideal simplified;
  Presentation pres;
  std::string warning;
};

// raw = (W1 - W2) e0 for a balanced presentation, (W - I) e0 for a relator;
// simplified = content-free, sign-normalized, deduplicated nonzero entries,
// Groebner-reduced over Q.
CIdeal c_ideal(const Presentation& pres);

// Change to the trace coordinates x' = 4x^2 - 2, z = 2x^2 - 2y, i.e. the
// substitution x^2 = (x'+2)/4, y = (x'+2)/4 - z/2, cleared of denominators.
// The result lives in the (x', z) slots (VX, VY). Throws NotExpressible when
// an odd power of x (or any s) survives.
Poly to_trace_coords(const Poly& p);

struct ReducibleLocus {
  bool on_upper_parabola = false; // y = 1 - x^2
  bool on_lower_parabola = false; // y = x^2 - 1
  bool realizable_by_reducible = false;
};

enum class GroupKind { Knot, Link };

// Which reducible c-representations realize a point of V(y^2 - (1-x^2)^2);
// knots and links differ on the lower parabola.
ReducibleLocus reducible_locus(double x, double y, GroupKind kind, double tol);

} // namespace qknot
