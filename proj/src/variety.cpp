#include "qknot/variety.hpp"

#include <cmath>

#include "qknot/errors.hpp"
#include "qknot/symmat.hpp"

namespace qknot {

CIdeal c_ideal(const Presentation& pres) {
  CIdeal out;
  out.pres = pres;

  SymMat4 diff;
  if (pres.balanced)
    diff = eval_word(pres.lhs) - eval_word(pres.rhs);
  else
    diff = eval_word(pres.lhs) - SymMat4::identity();

  for (int i = 0; i < 4; ++i) out.raw[static_cast<std::size_t>(i)] = diff.at(i, 0);

  // a v = v b presentations keep the scalar and (A-B-)- slots clean
  if (pres.balanced && !pres.lhs.empty() && !pres.rhs.empty() &&
      pres.lhs.letters().front() == kA && pres.rhs.letters().back() == kB) {
    Word v1(std::vector<Letter>(pres.lhs.letters().begin() + 1, pres.lhs.letters().end()));
    Word v2(std::vector<Letter>(pres.rhs.letters().begin(), pres.rhs.letters().end() - 1));
    if (v1 == v2 && !(out.raw[0].is_zero() && out.raw[3].is_zero()))
      out.warning = "outer entries of the raw vector do not vanish for a v = v b";
  }

  Ideal entries = normalize_ideal({out.raw.begin(), out.raw.end()});
  out.simplified = groebner(entries);
  return out;
}

Poly to_trace_coords(const Poly& p) {
  if (p.uses(VS)) throw NotExpressible("to_trace_coords: polynomial involves s");
  for (auto& [m, c] : p.terms())
    if (m.e[VX] % 2 != 0)
      throw NotExpressible("to_trace_coords: odd power of x cannot be written in (x', z)");

  // x^2 = (x'+2)/4, y = (x'+2)/4 - z/2, with x' in the x slot, z in the y slot
  const QPoly xp = QPoly::var(VX);
  const QPoly zp = QPoly::var(VY);
  const QPoly x2 = (xp + QPoly::constant(2)) * mpq_class(1, 4);
  const QPoly ysub = x2 - zp * mpq_class(1, 2);

  QPoly acc;
  for (auto& [m, c] : p.terms()) {
    QPoly t = QPoly::constant(mpq_class(c));
    t *= x2.pow(m.e[VX] / 2);
    t *= ysub.pow(m.e[VY]);
    acc += t;
  }
  return primitive_from_rational(acc);
}

ReducibleLocus reducible_locus(double x, double y, GroupKind kind, double tol) {
  ReducibleLocus r;
  r.on_upper_parabola = std::abs(y - (1.0 - x * x)) < tol;
  r.on_lower_parabola = std::abs(y - (x * x - 1.0)) < tol;
  bool at_corner = std::abs(x * x - 1.0) < tol && std::abs(y) < tol; // (+-1, 0)
  if (kind == GroupKind::Link)
    r.realizable_by_reducible = r.on_upper_parabola || r.on_lower_parabola;
  else
    r.realizable_by_reducible = r.on_upper_parabola || (r.on_lower_parabola && at_corner);
  return r;
}

} // namespace qknot
