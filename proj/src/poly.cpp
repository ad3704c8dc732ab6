#include "qknot/poly.hpp"

#include <algorithm>
#include <cmath>

namespace qknot {

mpq_class evaluate(const Poly& p, const RationalPoint& pt) {
  for (int v = 0; v < 3; ++v)
    if (p.degree_in(static_cast<Var>(v)) > 0 && !pt.coords[v])
      throw MissingVariable(std::string("point does not assign variable ") + kVarNames[v]);

  mpq_class acc = 0;
  for (auto& [m, c] : p.terms()) {
    mpq_class t(c);
    for (int v = 0; v < 3; ++v)
      for (int k = 0; k < m.e[v]; ++k) t *= *pt.coords[v];
    acc += t;
  }
  return acc;
}

namespace {

// Horner in x of polynomials whose coefficients are Horner forms in y, s.
double eval_double_rec(const Poly& p, const double* vals, int var) {
  if (var == 3) {
    // constant by now
    if (p.is_zero()) return 0.0;
    return p.terms().begin()->second.get_d();
  }
  Var v = static_cast<Var>(var);
  int d = p.degree_in(v);
  double acc = 0.0;
  for (int k = d; k >= 0; --k) {
    Poly coeff;
    for (auto& [m, c] : p.terms())
      if (m.e[v] == k) {
        Mono m2 = m;
        m2.e[v] = 0;
        coeff.add_term(m2, c);
      }
    acc = acc * vals[var] + eval_double_rec(coeff, vals, var + 1);
  }
  return acc;
}

} // namespace

double evaluate(const Poly& p, double x, double y, double s) {
  double vals[3] = {x, y, s};
  return eval_double_rec(p, vals, 0);
}

std::pair<mpz_class, Poly> content_primitive(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial("content of zero polynomial");
  mpz_class g = 0;
  for (auto& [m, c] : p.terms()) {
    mpz_class a = abs(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
  }
  // sign from the print-order leading coefficient
  MonoPrintOrder less;
  auto lead = p.terms().begin();
  for (auto it = std::next(p.terms().begin()); it != p.terms().end(); ++it)
    if (less(lead->first, it->first)) lead = it;
  if (sgn(lead->second) < 0) g = -g;
  Poly prim = p.map_coeffs([&](const mpz_class& c) { return mpz_class(c / g); });
  return {g, prim};
}

Poly sign_normalized_primitive(const Poly& p) {
  if (p.is_zero()) return p;
  return content_primitive(p).second;
}

Poly primitive_from_rational(const QPoly& p) {
  if (p.is_zero()) return Poly{};
  mpz_class lcm_den = 1;
  for (auto& [m, c] : p.terms())
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
  Poly z = p.map_coeffs([&](const mpq_class& c) {
    mpq_class t = c * lcm_den;
    return mpz_class(t.get_num());
  });
  return sign_normalized_primitive(z);
}

QPoly substitute(const QPoly& p, Var v, const mpq_class& value) {
  QPoly r;
  for (auto& [m, c] : p.terms()) {
    mpq_class t = c;
    for (int k = 0; k < m.e[v]; ++k) t *= value;
    Mono m2 = m;
    m2.e[v] = 0;
    r.add_term(m2, t);
  }
  return r;
}

std::vector<mpz_class> dense_univariate(const Poly& p, Var v) {
  for (int w = 0; w < 3; ++w)
    if (w != v && p.degree_in(static_cast<Var>(w)) > 0)
      throw ArgumentError(std::string("polynomial is not univariate in ") + kVarNames[v]);
  std::vector<mpz_class> coeffs(static_cast<std::size_t>(p.degree_in(v)) + 1, mpz_class(0));
  for (auto& [m, c] : p.terms()) coeffs[static_cast<std::size_t>(m.e[v])] = c;
  return coeffs;
}

std::string to_string(const Poly& p, const std::array<std::string, 3>& names, bool spaced) {
  if (p.is_zero()) return "0";

  // print order: grlex with x most significant
  std::vector<std::pair<Mono, mpz_class>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = a.first.deg(), db = b.first.deg();
    if (da != db) return da > db;
    if (a.first.e[VX] != b.first.e[VX]) return a.first.e[VX] > b.first.e[VX];
    if (a.first.e[VY] != b.first.e[VY]) return a.first.e[VY] > b.first.e[VY];
    return a.first.e[VS] > b.first.e[VS];
  });

  const std::string plus = spaced ? " + " : "+";
  const std::string minus = spaced ? " - " : "-";
  std::string out;
  bool first = true;
  for (auto& [m, c] : terms) {
    mpz_class a = abs(c);
    if (first) {
      if (sgn(c) < 0) out += "-";
      first = false;
    } else {
      out += sgn(c) < 0 ? minus : plus;
    }
    std::string mono;
    // variables inside a monomial read s, x, y ("4*s*x", "12*x^2*y")
    const int order[3] = {VS, VX, VY};
    for (int v : order)
      if (m.e[v] > 0) {
        if (!mono.empty()) mono += "*";
        mono += names[static_cast<std::size_t>(v)];
        if (m.e[v] > 1) mono += "^" + std::to_string(m.e[v]);
      }
    if (mono.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

} // namespace qknot
