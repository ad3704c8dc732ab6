#pragma once

#include <gmpxx.h>

#include <vector>

#include "qknot/poly.hpp"

namespace qknot {

// Isolating interval for one real root; lo == hi means the root is exact.
struct RootInterval {
  mpq_class lo;
  mpq_class hi;
  double mid() const { return mpq_class((lo + hi) / 2).get_d(); }
  bool exact() const { return lo == hi; }
};

// Real roots of the univariate polynomial with the given dense integer
// coefficients (coeffs[k] is the coefficient of t^k) inside [lo, hi],
// via Sturm sequences; the square-free part is taken internally, so each
// root appears exactly once. Intervals are refined to width < eps.
// Throws ZeroPolynomial on the zero polynomial.
std::vector<RootInterval> isolate_real_roots(const std::vector<mpz_class>& coeffs,
                                             const mpq_class& lo, const mpq_class& hi,
                                             const mpq_class& eps);

// Same, for a Poly that uses a single variable; constants yield either no
// roots (nonzero) or ZeroPolynomial.
std::vector<RootInterval> univariate_real_roots(const Poly& p, Var v,
                                                const mpq_class& lo, const mpq_class& hi,
                                                const mpq_class& eps);

// Sign variations of the Sturm chain of coeffs at t (exposed for the
// variation-count invariant).
int sturm_variations(const std::vector<mpz_class>& coeffs, const mpq_class& t);

} // namespace qknot
