#include "qknot/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "qknot/errors.hpp"
#include "qknot/roots.hpp"

namespace qknot {

namespace {

// Exact y-roots of one generator at rational x0, refined to width < eps.
std::vector<double> roots_at(const Poly& gen, const mpq_class& x0, const mpq_class& eps) {
  QPoly sub = substitute(to_qpoly(gen), VX, x0);
  Poly uni = primitive_from_rational(sub);
  if (uni.is_zero()) return {std::numeric_limits<double>::quiet_NaN()}; // no constraint
  if (uni.degree_in(VY) == 0) return {};                                 // nonzero constant

  // Cauchy bound on |roots|
  auto coeffs = dense_univariate(uni, VY);
  mpq_class bound = 1;
  mpz_class lead = coeffs.back();
  for (const auto& c : coeffs) {
    mpq_class r = mpq_class(abs(c)) / mpq_class(abs(lead));
    if (r > bound) bound = r;
  }
  bound += 1;

  std::vector<double> ys;
  for (const auto& iv : isolate_real_roots(coeffs, -bound, bound, eps)) ys.push_back(iv.mid());
  return ys;
}

std::vector<double> intersect_roots(const CIdeal& ideal, const mpq_class& x0,
                                    const mpq_class& eps) {
  bool first = true;
  std::vector<double> acc;
  const double match = std::max(mpq_class(eps * 16).get_d(), 1e-11);
  for (const Poly& gen : ideal.simplified.gens) {
    std::vector<double> ys = roots_at(gen, x0, eps);
    if (!ys.empty() && std::isnan(ys.front())) continue; // generator vanishes identically here
    if (first) {
      acc = std::move(ys);
      first = false;
      continue;
    }
    std::vector<double> kept;
    for (double v : acc)
      for (double w : ys)
        if (std::abs(v - w) < match) {
          kept.push_back(v);
          break;
        }
    acc = std::move(kept);
  }
  if (first) return {}; // all generators identically zero: nothing finite to emit
  std::sort(acc.begin(), acc.end());
  return acc;
}

} // namespace

std::vector<CurveSample> sample_variety(const CIdeal& ideal, const mpq_class& x_min,
                                        const mpq_class& x_max, const mpq_class& step,
                                        double eps, double boundary_tol) {
  if (sgn(step) <= 0) throw ArgumentError("sample_variety: step must be positive");
  for (const Poly& gen : ideal.simplified.gens)
    if (gen.uses(VS)) throw UnsupportedIdeal("sample_variety: generator involves s");

  mpq_class eps_q(eps);
  std::vector<CurveSample> out;
  std::vector<double> prev_y;
  std::vector<int> prev_id;
  int next_id = 0;

  for (mpq_class x0 = x_min; x0 <= x_max; x0 += step) {
    CurveSample cs;
    cs.x = x0.get_d();
    std::vector<double> ys = intersect_roots(ideal, x0, eps_q);

    // nearest-y continuation of branch ids
    std::vector<int> ids(ys.size(), -1);
    std::vector<bool> used(prev_y.size(), false);
    const double chain_limit = std::max(0.25, 5.0 * step.get_d());
    for (std::size_t i = 0; i < ys.size(); ++i) {
      double best = chain_limit; // do not chain across jumps
      int pick = -1;
      for (std::size_t j = 0; j < prev_y.size(); ++j) {
        if (used[j]) continue;
        double d = std::abs(ys[i] - prev_y[j]);
        if (d < best) {
          best = d;
          pick = static_cast<int>(j);
        }
      }
      if (pick >= 0) {
        ids[i] = prev_id[static_cast<std::size_t>(pick)];
        used[static_cast<std::size_t>(pick)] = true;
      }
    }
    for (auto& id : ids)
      if (id < 0) id = next_id++;

    const double u = 1.0 - cs.x * cs.x;
    for (std::size_t i = 0; i < ys.size(); ++i) {
      BranchSample b;
      b.y = ys[i];
      b.branch = ids[i];
      b.region = classify_point(cs.x, b.y, boundary_tol);
      if (std::abs(u) >= 1e-9) b.profile = b.y / u;
      cs.branches.push_back(b);
    }
    prev_y = ys;
    prev_id = ids;
    out.push_back(std::move(cs));
  }
  return out;
}

std::vector<double> branches_at(const CIdeal& ideal, double x, double tol, double eps) {
  for (const Poly& gen : ideal.simplified.gens)
    if (gen.uses(VS)) throw UnsupportedIdeal("branches_at: generator involves s");

  mpq_class x0(x); // exact binary rational of the double
  mpq_class eps_q(eps);
  std::vector<double> ys = intersect_roots(ideal, x0, eps_q);

  // near-tangent branches: critical points in y where every generator is
  // within tol (catches double roots just off the grid, e.g. case 2.4)
  for (const Poly& gen : ideal.simplified.gens) {
    QPoly sub = substitute(to_qpoly(gen), VX, x0);
    Poly uni = primitive_from_rational(sub);
    if (uni.is_zero() || uni.degree_in(VY) < 2) continue;
    auto coeffs = dense_univariate(uni, VY);
    std::vector<mpz_class> dcoeffs;
    for (std::size_t k = 1; k < coeffs.size(); ++k)
      dcoeffs.push_back(coeffs[k] * static_cast<long>(k));
    mpq_class bound = 1;
    for (const auto& c : coeffs) {
      mpq_class r = mpq_class(abs(c)) / mpq_class(abs(coeffs.back()));
      if (r > bound) bound = r;
    }
    bound += 1;
    for (const auto& iv : isolate_real_roots(dcoeffs, -bound, bound, eps_q)) {
      double yc = iv.mid();
      bool on_all = true;
      for (const Poly& g : ideal.simplified.gens)
        if (std::abs(evaluate(g, x, yc)) > tol) {
          on_all = false;
          break;
        }
      if (!on_all) continue;
      bool fresh = true;
      for (double v : ys)
        if (std::abs(v - yc) < 1e-7) fresh = false;
      if (fresh) ys.push_back(yc);
    }
  }
  std::sort(ys.begin(), ys.end());
  return ys;
}

std::vector<ProfileRow> region_profile(const std::vector<CurveSample>& samples,
                                       double boundary_tol) {
  std::vector<ProfileRow> rows;
  for (const auto& cs : samples)
    for (const auto& b : cs.branches) {
      ProfileRow r;
      r.x = cs.x;
      r.branch = b.branch;
      r.profile = b.profile;
      r.region = b.region;
      r.unit_x = std::abs(1.0 - cs.x * cs.x) < boundary_tol;
      if (b.profile) r.parabola_boundary = std::abs(std::abs(*b.profile) - 1.0) < boundary_tol;
      rows.push_back(r);
    }
  return rows;
}

namespace {

std::string fmt12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

} // namespace

void emit_csv(const std::vector<CurveSample>& samples, std::ostream& os) {
  os << "x,y,branch,region,profile\n";
  for (const auto& cs : samples)
    for (const auto& b : cs.branches) {
      os << fmt12(cs.x) << ',' << fmt12(b.y) << ',' << b.branch << ',' << region_tag(b.region)
         << ',';
      if (b.profile) os << fmt12(*b.profile);
      os << '\n';
    }
}

void emit_csv(const std::vector<CurveSample>& samples, const std::string& path) {
  std::ofstream f(path);
  if (!f) throw IoError("cannot open " + path + " for writing");
  emit_csv(samples, f);
  if (!f.good()) throw IoError("write failure on " + path);
}

} // namespace qknot
