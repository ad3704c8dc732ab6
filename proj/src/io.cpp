#include "qknot/io.hpp"


#include <algorithm>
#include <cmath>
#include <cstdio>

namespace qknot {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

json complex_to_json(const cplx& z) {
  if (z.imag() == 0.0) return z.real();
  return json{{"re", z.real()}, {"im", z.imag()}};
}

json poly_to_json(const Poly& p) {
  std::vector<std::pair<Mono, mpz_class>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    int da = a.first.deg(), db = b.first.deg();
    if (da != db) return da > db;
    if (a.first.e[VX] != b.first.e[VX]) return a.first.e[VX] > b.first.e[VX];
    if (a.first.e[VY] != b.first.e[VY]) return a.first.e[VY] > b.first.e[VY];
    return a.first.e[VS] > b.first.e[VS];
  });
  json arr = json::array();
  for (auto& [m, c] : terms)
    arr.push_back(json{{"e", {m.e[0], m.e[1], m.e[2]}}, {"c", c.get_str()}});
  return arr;
}

json presentation_to_json(const Presentation& pres) {
  if (pres.balanced) return json{{"lhs", pres.lhs.str()}, {"rhs", pres.rhs.str()}};
  return json{{"relator", pres.lhs.str()}};
}

Presentation presentation_from_json(const json& j) {
  if (j.contains("relator")) return Presentation::relator(Word::parse(j.at("relator")));
  return Presentation::equation(Word::parse(j.at("lhs")), Word::parse(j.at("rhs")));
}

json cideal_to_json(const CIdeal& ci, bool with_trace_coords) {
  json raw = json::array();
  for (const Poly& p : ci.raw) raw.push_back(poly_to_json(p));
  json ideal = json::array();
  for (const Poly& p : ci.simplified.gens) ideal.push_back(poly_to_json(p));
  json out{{"presentation", presentation_to_json(ci.pres)}, {"raw", raw}, {"ideal", ideal}};
  if (!ci.warning.empty()) out["warning"] = ci.warning;
  if (with_trace_coords) {
    json tc = json::array();
    for (const Poly& p : ci.simplified.gens) tc.push_back(poly_to_json(to_trace_coords(p)));
    out["trace_coords"] = tc;
  }
  return out;
}

namespace {

json quat_to_json(const NumQuaternion& q) {
  return json::array({complex_to_json(q.alpha), complex_to_json(q.beta),
                      complex_to_json(q.gamma), complex_to_json(q.delta)});
}

json mat2_to_json(const Mat2& m) {
  return json::array({json::array({complex_to_json(m[0]), complex_to_json(m[1])}),
                      json::array({complex_to_json(m[2]), complex_to_json(m[3])})});
}

json mat3_to_json(const Mat3& m) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r)
    rows.push_back(json::array({complex_to_json(m[static_cast<std::size_t>(3 * r)]),
                                complex_to_json(m[static_cast<std::size_t>(3 * r + 1)]),
                                complex_to_json(m[static_cast<std::size_t>(3 * r + 2)])}));
  return rows;
}

} // namespace

json classified_to_json(const ClassifiedPoint& cp) {
  json out{{"x", cp.x}, {"y", cp.y}, {"region", region_tag(cp.region)}};
  out["reducibility"] = pair_class_tag(cp.reducibility);
  if (cp.pair) {
    const auto& pc = *cp.pair;
    out["algebra"] = {pc.A.par.mu, pc.A.par.nu};
    out["field"] = pc.field_desc;
    out["scalar_field"] = pc.complex_field ? "C" : "R";
    out["A"] = quat_to_json(pc.A);
    out["B"] = quat_to_json(pc.B);
    out["mat2"] = {{"A", mat2_to_json(embed_2x2(pc.A))}, {"B", mat2_to_json(embed_2x2(pc.B))}};
    auto [ma, mb] = so_matrix_pair(pc, 1e-6);
    out["mat3"] = {{"A", mat3_to_json(ma)}, {"B", mat3_to_json(mb)}};
  }
  if (cp.invariant) out["invariant"] = {{"kind", cp.invariant->kind}, {"value", cp.invariant->value}};
  if (cp.residual) out["residual"] = *cp.residual;
  return out;
}

json affine_to_json(const AffineIdeal& ai) {
  json p = json::array(), q = json::array(), g = json::array();
  for (const Poly& e : ai.p_gens) p.push_back(poly_to_json(e));
  for (const Poly& e : ai.q_gens) q.push_back(poly_to_json(e));
  for (const Poly& e : groebner(ai.combined).gens) g.push_back(poly_to_json(e));
  return json{{"p", p}, {"q", q}, {"groebner", g}};
}

json samples_to_json(const std::vector<CurveSample>& samples) {
  json arr = json::array();
  for (const auto& cs : samples)
    for (const auto& b : cs.branches) {
      json row{{"x", cs.x}, {"y", b.y}, {"branch", b.branch}, {"region", region_tag(b.region)}};
      if (b.profile) row["profile"] = *b.profile;
      arr.push_back(std::move(row));
    }
  return arr;
}

} // namespace qknot
