#include "qknot/groebner.hpp"

#include <algorithm>
#include <optional>

namespace qknot {

namespace {

Mono lcm(const Mono& a, const Mono& b) {
  Mono m;
  for (int v = 0; v < 3; ++v) m.e[v] = std::max(a.e[v], b.e[v]);
  return m;
}

bool coprime(const Mono& a, const Mono& b) {
  for (int v = 0; v < 3; ++v)
    if (a.e[v] > 0 && b.e[v] > 0) return false;
  return true;
}

QPoly monic(QPoly p, TermOrder ord) {
  if (p.is_zero()) return p;
  mpq_class inv = 1 / p.leading(ord).second;
  return p * inv;
}

bool poly_less(const Poly& a, const Poly& b) {
  MonoGrlex less;
  auto ita = a.terms().begin();
  auto itb = b.terms().begin();
  for (; ita != a.terms().end() && itb != b.terms().end(); ++ita, ++itb) {
    if (less(ita->first, itb->first)) return true;
    if (less(itb->first, ita->first)) return false;
    if (ita->second != itb->second) return ita->second < itb->second;
  }
  return a.terms().size() < b.terms().size();
}

QPoly spoly(const QPoly& f, const QPoly& g, TermOrder ord) {
  auto [mf, cf] = f.leading(ord);
  auto [mg, cg] = g.leading(ord);
  Mono l = lcm(mf, mg);
  Mono uf, ug;
  for (int v = 0; v < 3; ++v) {
    uf.e[v] = l.e[v] - mf.e[v];
    ug.e[v] = l.e[v] - mg.e[v];
  }
  return f * QPoly::term(1 / cf, uf) - g * QPoly::term(1 / cg, ug);
}

} // namespace

QPoly reduce_mod(const QPoly& p, const std::vector<QPoly>& G, TermOrder ord) {
  QPoly rem;
  QPoly work = p;
  while (!work.is_zero()) {
    auto [m, c] = work.leading(ord);
    bool reduced = false;
    for (const QPoly& g : G) {
      auto [mg, cg] = g.leading(ord);
      if (mg.divides(m)) {
        Mono u;
        for (int v = 0; v < 3; ++v) u.e[v] = m.e[v] - mg.e[v];
        work -= g * QPoly::term(c / cg, u);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.add_term(m, c);
      work.add_term(m, -c);
    }
  }
  return rem;
}

Ideal normalize_ideal(std::vector<Poly> gens) {
  std::vector<Poly> out;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Poly p = sign_normalized_primitive(g);
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), poly_less);
  return Ideal{std::move(out)};
}

Ideal groebner(const Ideal& I, TermOrder ord) {
  std::vector<QPoly> G;
  for (const Poly& g : I.gens)
    if (!g.is_zero()) G.push_back(monic(to_qpoly(g), ord));
  if (G.empty()) return Ideal{};

  // Buchberger with the coprime-lcm and chain criteria.
  struct Pair {
    std::size_t i, j;
    Mono l;
  };
  std::vector<Pair> pairs;
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i)
      pairs.push_back({i, j, lcm(G[i].leading(ord).first, G[j].leading(ord).first)});
  };
  for (std::size_t j = 0; j < G.size(); ++j) add_pairs_for(j);

  while (!pairs.empty()) {
    // smallest lcm first keeps intermediate results small
    auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      return mono_less(a.l, b.l, ord);
    });
    Pair pr = *it;
    pairs.erase(it);

    const Mono mi = G[pr.i].leading(ord).first;
    const Mono mj = G[pr.j].leading(ord).first;
    if (coprime(mi, mj)) continue; // Buchberger's first criterion
    bool chained = false;          // chain criterion
    for (std::size_t k = 0; k < G.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      const Mono mk = G[k].leading(ord).first;
      if (!mk.divides(pr.l)) continue;
      auto done = [&](std::size_t a, std::size_t b) {
        for (const Pair& q : pairs)
          if ((q.i == std::min(a, b)) && (q.j == std::max(a, b))) return false;
        return true;
      };
      if (done(pr.i, k) && done(pr.j, k)) chained = true;
    }
    if (chained) continue;

    QPoly r = reduce_mod(spoly(G[pr.i], G[pr.j], ord), G, ord);
    if (!r.is_zero()) {
      G.push_back(monic(std::move(r), ord));
      add_pairs_for(G.size() - 1);
    }
  }

  // Minimalize: drop any element whose leading monomial another divides.
  std::vector<QPoly> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    const Mono mi = G[i].leading(ord).first;
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const Mono mj = G[j].leading(ord).first;
      if (mj.divides(mi) && !(mi == mj && j > i)) redundant = true;
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // Reduce each element against the others.
  std::vector<QPoly> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<QPoly> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    QPoly r = reduce_mod(minimal[i], others, ord);
    if (!r.is_zero()) reduced.push_back(monic(std::move(r), ord));
  }

  std::vector<Poly> out;
  for (const QPoly& g : reduced) out.push_back(primitive_from_rational(g));
  std::sort(out.begin(), out.end(), poly_less);
  return Ideal{std::move(out)};
}

bool ideal_equal(const Ideal& I, const Ideal& J, TermOrder ord) {
  return groebner(I, ord) == groebner(J, ord);
}

bool ideal_contains(const Ideal& I, const Poly& p, TermOrder ord) {
  if (p.is_zero()) return true;
  Ideal G = groebner(I, ord);
  if (G.gens.empty()) return false;
  std::vector<QPoly> basis;
  for (const Poly& g : G.gens) basis.push_back(to_qpoly(g));
  return reduce_mod(to_qpoly(p), basis, ord).is_zero();
}

} // namespace qknot
