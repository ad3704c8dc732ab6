#pragma once

#include <vector>

#include "qknot/poly.hpp"

namespace qknot {

// Ideal of Z[x,y,s] given by generators; normalized form keeps them
// nonzero, primitive, sign-normalized and deduplicated.
struct Ideal {
  std::vector<Poly> gens;

  bool operator==(const Ideal&) const = default;
};

// Drops zeros, takes sign-normalized primitive parts, dedupes.
Ideal normalize_ideal(std::vector<Poly> gens);

// Reduced Groebner basis over Q for the chosen order (precedence s > y > x),
// returned as primitive integer polynomials with positive leading
// coefficients, sorted; unique for the order. {} stays {}; a unit ideal
// reduces to {1}.
Ideal groebner(const Ideal& I, TermOrder order = TermOrder::GrLex);

// Reduced-basis comparison over Q.
bool ideal_equal(const Ideal& I, const Ideal& J, TermOrder order = TermOrder::GrLex);

// Normal form of p modulo the (already computed) basis G.
QPoly reduce_mod(const QPoly& p, const std::vector<QPoly>& G, TermOrder order);

// True iff p reduces to zero modulo groebner(I).
bool ideal_contains(const Ideal& I, const Poly& p, TermOrder order = TermOrder::GrLex);

} // namespace qknot
