#include "qknot/roots.hpp"

#include <algorithm>

#include "qknot/errors.hpp"

namespace qknot {

namespace {

using QVec = std::vector<mpq_class>; // dense, index = exponent

void normalize(QVec& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int deg(const QVec& p) { return static_cast<int>(p.size()) - 1; }

QVec derivative(const QVec& p) {
  QVec d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * static_cast<long>(k));
  normalize(d);
  return d;
}

mpq_class eval(const QVec& p, const mpq_class& t) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * t + *it;
  return acc;
}

// Remainder of a by b over Q.
QVec rem(QVec a, const QVec& b) {
  normalize(a);
  while (deg(a) >= deg(b)) {
    mpq_class q = a.back() / b.back();
    int shift = deg(a) - deg(b);
    for (std::size_t k = 0; k < b.size(); ++k)
      a[static_cast<std::size_t>(shift) + k] -= q * b[k];
    a.pop_back();
    normalize(a);
    if (a.empty()) break;
  }
  return a;
}

QVec gcd(QVec a, QVec b) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    QVec r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

// Quotient of exact division a / b.
QVec exact_div(QVec a, const QVec& b) {
  normalize(a);
  QVec q(a.size(), mpq_class(0));
  while (!a.empty() && deg(a) >= deg(b)) {
    mpq_class c = a.back() / b.back();
    int shift = deg(a) - deg(b);
    q[static_cast<std::size_t>(shift)] = c;
    for (std::size_t k = 0; k < b.size(); ++k)
      a[static_cast<std::size_t>(shift) + k] -= c * b[k];
    normalize(a);
  }
  normalize(q);
  return q;
}

std::vector<QVec> sturm_chain(const QVec& p) {
  std::vector<QVec> chain;
  chain.push_back(p);
  QVec d = derivative(p);
  if (!d.empty()) chain.push_back(d);
  while (chain.back().size() > 1) {
    QVec r = rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  return chain;
}

int variations(const std::vector<QVec>& chain, const mpq_class& t) {
  int var = 0, prev = 0;
  for (const auto& p : chain) {
    int s = sgn(eval(p, t));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++var;
    prev = s;
  }
  return var;
}

struct Isolator {
  QVec p;                       // square-free
  std::vector<QVec> chain;
  mpq_class eps;
  std::vector<RootInterval> out;

  int count(const mpq_class& a, const mpq_class& b) const {
    return variations(chain, a) - variations(chain, b); // roots in (a, b]
  }

  // (a, b] is known to contain exactly one root; shrink it below eps.
  void refine(mpq_class a, mpq_class b) {
    while (b - a >= eps) {
      mpq_class m = (a + b) / 2;
      m.canonicalize();
      if (sgn(eval(p, m)) == 0) {
        out.push_back({m, m});
        return;
      }
      if (count(a, m) == 1)
        b = m;
      else
        a = m;
    }
    out.push_back({a, b});
  }

  void isolate(const mpq_class& a, const mpq_class& b) {
    int n = count(a, b);
    if (n == 0) return;
    if (n == 1) {
      refine(a, b);
      return;
    }
    mpq_class m = (a + b) / 2;
    m.canonicalize();
    isolate(a, m);
    isolate(m, b);
  }
};

} // namespace

std::vector<RootInterval> isolate_real_roots(const std::vector<mpz_class>& coeffs,
                                             const mpq_class& lo, const mpq_class& hi,
                                             const mpq_class& eps) {
  QVec p;
  for (const auto& c : coeffs) p.emplace_back(c);
  normalize(p);
  if (p.empty()) throw ZeroPolynomial("root isolation of zero polynomial");
  if (deg(p) == 0) return {};

  QVec g = gcd(p, derivative(p));
  QVec sf = deg(g) > 0 ? exact_div(p, g) : p;

  Isolator iso;
  iso.p = sf;
  iso.chain = sturm_chain(sf);
  iso.eps = eps;

  if (sgn(eval(sf, lo)) == 0) iso.out.push_back({lo, lo}); // (lo, hi] misses a root at lo
  iso.isolate(lo, hi);

  std::sort(iso.out.begin(), iso.out.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return iso.out;
}

std::vector<RootInterval> univariate_real_roots(const Poly& p, Var v,
                                                const mpq_class& lo, const mpq_class& hi,
                                                const mpq_class& eps) {
  return isolate_real_roots(dense_univariate(p, v), lo, hi, eps);
}

int sturm_variations(const std::vector<mpz_class>& coeffs, const mpq_class& t) {
  QVec p;
  for (const auto& c : coeffs) p.emplace_back(c);
  normalize(p);
  if (p.empty()) throw ZeroPolynomial("Sturm chain of zero polynomial");
  QVec g = gcd(p, derivative(p));
  QVec sf = deg(g) > 0 ? exact_div(p, g) : p;
  return variations(sturm_chain(sf), t);
}

} // namespace qknot
