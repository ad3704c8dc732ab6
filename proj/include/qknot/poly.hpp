#pragma once

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qknot/errors.hpp"

namespace qknot {

// Variable slots of the ambient ring Z[x,y,s].
enum Var : int { VX = 0, VY = 1, VS = 2 };

inline const char* kVarNames[3] = {"x", "y", "s"};

struct Mono {
  std::array<int, 3> e{0, 0, 0};

  int deg() const { return e[0] + e[1] + e[2]; }
  bool operator==(const Mono&) const = default;

  friend Mono operator*(const Mono& a, const Mono& b) {
    return Mono{{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
  }
  bool divides(const Mono& m) const {
    return e[0] <= m.e[0] && e[1] <= m.e[1] && e[2] <= m.e[2];
  }
};

// Graded lex with precedence s > y > x (the computation order; storage order
// of every Poly, so map equality is polynomial equality).
struct MonoGrlex {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db;
    if (a.e[VS] != b.e[VS]) return a.e[VS] < b.e[VS];
    if (a.e[VY] != b.e[VY]) return a.e[VY] < b.e[VY];
    return a.e[VX] < b.e[VX];
  }
};

// Pure lex, same precedence s > y > x.
struct MonoLex {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.e[VS] != b.e[VS]) return a.e[VS] < b.e[VS];
    if (a.e[VY] != b.e[VY]) return a.e[VY] < b.e[VY];
    return a.e[VX] < b.e[VX];
  }
};

// Graded lex with x most significant; governs printing and the sign of
// normalized polynomials (matches the usual printed shapes, e.g. the
// positive-x' convention of the trace coordinates).
struct MonoPrintOrder {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = a.deg(), db = b.deg();
    if (da != db) return da < db;
    if (a.e[VX] != b.e[VX]) return a.e[VX] < b.e[VX];
    if (a.e[VY] != b.e[VY]) return a.e[VY] < b.e[VY];
    return a.e[VS] < b.e[VS];
  }
};

enum class TermOrder { GrLex, Lex };

inline bool mono_less(const Mono& a, const Mono& b, TermOrder ord) {
  return ord == TermOrder::GrLex ? MonoGrlex{}(a, b) : MonoLex{}(a, b);
}

// Sparse polynomial with exact coefficients; C is mpz_class or mpq_class.
template <class C>
class PolyT {
public:
  using Terms = std::map<Mono, C, MonoGrlex>;

  PolyT() = default;
  explicit PolyT(Terms t) : terms_(std::move(t)) { strip_zeros(); }

  static PolyT constant(C c) {
    PolyT p;
    if (sgn(c) != 0) p.terms_[Mono{}] = std::move(c);
    return p;
  }
  static PolyT var(Var v, int exp = 1) {
    PolyT p;
    Mono m;
    m.e[v] = exp;
    p.terms_[m] = C(1);
    return p;
  }
  static PolyT term(C c, Mono m) {
    PolyT p;
    if (sgn(c) != 0) p.terms_[m] = std::move(c);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const PolyT&) const = default;

  int total_degree() const {
    return terms_.empty() ? -1 : terms_.rbegin()->first.deg();
  }
  int degree_in(Var v) const {
    int d = 0;
    for (auto& [m, c] : terms_) d = std::max(d, m.e[v]);
    return d;
  }
  bool uses(Var v) const { return degree_in(v) > 0; }

  // Leading term under the given computation order.
  std::pair<Mono, C> leading(TermOrder ord = TermOrder::GrLex) const {
    if (terms_.empty()) throw ZeroPolynomial("leading term of zero polynomial");
    if (ord == TermOrder::GrLex) return *terms_.rbegin();
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (MonoLex{}(best->first, it->first)) best = it;
    return *best;
  }

  PolyT operator-() const {
    PolyT r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }
  friend PolyT operator+(const PolyT& a, const PolyT& b) {
    PolyT r = a;
    for (auto& [m, c] : b.terms_) {
      auto [it, inserted] = r.terms_.emplace(m, c);
      if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) r.terms_.erase(it);
      }
    }
    return r;
  }
  friend PolyT operator-(const PolyT& a, const PolyT& b) { return a + (-b); }
  friend PolyT operator*(const PolyT& a, const PolyT& b) {
    PolyT r;
    for (auto& [ma, ca] : a.terms_)
      for (auto& [mb, cb] : b.terms_) {
        Mono m = ma * mb;
        auto [it, inserted] = r.terms_.emplace(m, ca * cb);
        if (!inserted) it->second += ca * cb;
      }
    r.strip_zeros();
    return r;
  }
  PolyT& operator+=(const PolyT& o) { return *this = *this + o; }
  PolyT& operator-=(const PolyT& o) { return *this = *this - o; }
  PolyT& operator*=(const PolyT& o) { return *this = *this * o; }

  friend PolyT operator*(const PolyT& a, const C& c) {
    if (sgn(c) == 0) return PolyT{};
    PolyT r = a;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
  }

  PolyT pow(int n) const {
    PolyT r = constant(C(1));
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  template <class F>
  auto map_coeffs(F&& f) const {
    using D = decltype(f(std::declval<C>()));
    PolyT<D> r;
    for (auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  void add_term(const Mono& m, C c) {
    if (sgn(c) == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, std::move(c));
    } else {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

private:
  void strip_zeros() {
    for (auto it = terms_.begin(); it != terms_.end();)
      it = sgn(it->second) == 0 ? terms_.erase(it) : std::next(it);
  }

  Terms terms_;
};

using Poly = PolyT<mpz_class>;   // integer coefficients (the default ring)
using QPoly = PolyT<mpq_class>;  // rational coefficients (Groebner / evaluation)

inline QPoly to_qpoly(const Poly& p) {
  return p.map_coeffs([](const mpz_class& z) { return mpq_class(z); });
}

// Exact evaluation point; must cover every variable of the polynomial.
struct RationalPoint {
  std::array<std::optional<mpq_class>, 3> coords;

  static RationalPoint xy(mpq_class x, mpq_class y) {
    x.canonicalize();
    y.canonicalize();
    RationalPoint p;
    p.coords[VX] = std::move(x);
    p.coords[VY] = std::move(y);
    return p;
  }
  static RationalPoint xys(mpq_class x, mpq_class y, mpq_class s) {
    s.canonicalize();
    RationalPoint p = xy(std::move(x), std::move(y));
    p.coords[VS] = std::move(s);
    return p;
  }
};

mpq_class evaluate(const Poly& p, const RationalPoint& pt);  // MissingVariable
double evaluate(const Poly& p, double x, double y, double s = 0.0);

inline QPoly scale(const Poly& p, const mpq_class& c) { return to_qpoly(p) * c; }

// Splits p != 0 as content * primitive where the primitive part has coprime
// coefficients and positive leading coefficient (grlex); the content carries
// the sign. Throws ZeroPolynomial.
std::pair<mpz_class, Poly> content_primitive(const Poly& p);

// Primitive part with positive leading coefficient (identity on 0).
Poly sign_normalized_primitive(const Poly& p);

// Clears denominators: smallest integer multiple, then sign-normalized.
Poly primitive_from_rational(const QPoly& p);

// Substitutes an exact rational for one variable.
QPoly substitute(const QPoly& p, Var v, const mpq_class& value);

// p restricted to a single variable -> dense coefficient vector (index =
// exponent). Throws ArgumentError if another variable appears.
std::vector<mpz_class> dense_univariate(const Poly& p, Var v);

// Human-readable form, terms ordered by grlex with x most significant
// (matches the usual printed shapes, e.g. "4*x^2+4*s*x-3").
std::string to_string(const Poly& p,
                      const std::array<std::string, 3>& names = {"x", "y", "s"},
                      bool spaced = false);

} // namespace qknot
