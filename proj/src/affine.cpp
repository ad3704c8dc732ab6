#include "qknot/affine.hpp"

#include <algorithm>
#include <cmath>

#include "qknot/errors.hpp"
#include "qknot/variety.hpp"

namespace qknot {

SymCocycle operator+(const SymCocycle& a, const SymCocycle& b) {
  SymCocycle r;
  for (int i = 0; i < 4; ++i)
    r.coords[static_cast<std::size_t>(i)] =
        a.coords[static_cast<std::size_t>(i)] + b.coords[static_cast<std::size_t>(i)];
  return r;
}

SymCocycle operator-(const SymCocycle& a, const SymCocycle& b) {
  SymCocycle r;
  for (int i = 0; i < 4; ++i)
    r.coords[static_cast<std::size_t>(i)] =
        a.coords[static_cast<std::size_t>(i)] - b.coords[static_cast<std::size_t>(i)];
  return r;
}

SymCocycle cocycle_va() {
  SymCocycle v;
  v.coords[1] = Poly::var(VS);
  return v;
}

SymCocycle cocycle_vb(bool minus_sign) {
  SymCocycle v;
  v.coords[2] = Poly::var(VS);
  v.coords[3] = Poly::constant(minus_sign ? -1 : 1);
  return v;
}

namespace {

SymCocycle apply_mat(const SymMat4& m, const SymCocycle& v) {
  SymCocycle r;
  r.coords = m.apply(v.coords);
  return r;
}

SymCocycle letter_cocycle(Letter l, const SymCocycle& va, const SymCocycle& vb) {
  const SymCocycle& v = std::abs(l) == 1 ? va : vb;
  if (l > 0) return v;
  // v(g^-1) = -c(g^-1) v(g)
  SymCocycle r = apply_mat(conj_action(l), v);
  for (auto& p : r.coords) p = -p;
  return r;
}

} // namespace

SymCocycle cocycle_of_word(const Word& w, const SymCocycle& va, const SymCocycle& vb) {
  SymCocycle acc;
  SymMat4 act = SymMat4::identity();
  for (Letter l : w.letters()) {
    acc = acc + apply_mat(act, letter_cocycle(l, va, vb));
    act = act * conj_action(l);
  }
  return acc;
}

std::pair<WordCombo, WordCombo> fox_derivatives(const Word& w) {
  // d(uv) = du + u dv; d(a)/da = 1, d(a^-1)/da = -a^-1, d(b^+-1)/da = 0.
  WordCombo da, db;
  Word prefix;
  auto add = [](WordCombo& combo, const Word& word, long c) {
    auto [it, inserted] = combo.emplace(word, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) combo.erase(it);
    }
  };
  for (Letter l : w.letters()) {
    WordCombo& target = std::abs(l) == 1 ? da : db;
    if (l > 0) {
      add(target, prefix, 1);
    } else {
      Word p = concat(prefix, Word{{l}});
      add(target, p, -1);
    }
    prefix = concat(prefix, Word{{l}});
  }
  return {std::move(da), std::move(db)};
}

SymCocycle apply_fox(const WordCombo& combo, const SymCocycle& v) {
  SymCocycle acc;
  for (const auto& [word, coeff] : combo) {
    SymCocycle t = apply_mat(conj_action_word(word), v);
    for (auto& p : t.coords) p = p * mpz_class(coeff);
    acc = acc + t;
  }
  return acc;
}

AffineIdeal affine_ideal(const Presentation& pres, bool minus_sign) {
  AffineIdeal out;

  CIdeal ci = c_ideal(pres);
  out.p_gens = ci.simplified.gens;

  const SymCocycle va = cocycle_va();
  const SymCocycle vb = cocycle_vb(minus_sign);
  SymCocycle rel;
  if (pres.balanced)
    rel = cocycle_of_word(pres.lhs, va, vb) - cocycle_of_word(pres.rhs, va, vb);
  else
    rel = cocycle_of_word(pres.lhs, va, vb);

  std::vector<Poly> q;
  for (const Poly& p : rel.coords)
    if (!p.is_zero()) q.push_back(sign_normalized_primitive(p));
  for (const Poly& p : q)
    if (std::find(out.q_gens.begin(), out.q_gens.end(), p) == out.q_gens.end())
      out.q_gens.push_back(p);

  std::vector<Poly> all = out.p_gens;
  all.insert(all.end(), out.q_gens.begin(), out.q_gens.end());
  out.combined = normalize_ideal(std::move(all));
  return out;
}

namespace {

double dot_eta(const Vec3& a, const Vec3& b, const std::array<double, 3>& eta) {
  return eta[0] * a[0] * b[0] + eta[1] * a[1] * b[1] + eta[2] * a[2] * b[2];
}

Vec3 real_xyz(const NumQuaternion& q) {
  auto c = xyz_coords(q);
  return {c[0].real(), c[1].real(), c[2].real()};
}

} // namespace

AxisShiftResult axis_shift(const AffineElement& e, double tol) {
  const Vec3 axis_dir = real_xyz(e.A);
  double amax = std::max({std::abs(axis_dir[0]), std::abs(axis_dir[1]), std::abs(axis_dir[2])});
  if (amax < tol) throw ZeroAxisDirection("axis_shift: A- vanishes");

  const auto eta = eta_diag(e.A.par);
  Mat3 cA = rotation_matrix(e.A, tol);
  double C[3][3];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) C[i][j] = cA[static_cast<std::size_t>(3 * i + j)].real();

  AxisShiftResult out;
  const double n = dot_eta(axis_dir, axis_dir, eta);

  if (std::abs(n) < tol * amax * amax) {
    // Null direction (parabolic linear part): no orthogonal decomposition.
    // An axis exists only if (Id - c(A)) u = v is consistent.
    out.null_direction = true;
    out.v_perp = e.v;
    double aug[3][4];
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) aug[i][j] = (i == j ? 1.0 : 0.0) - C[i][j];
      aug[i][3] = e.v[static_cast<std::size_t>(i)];
    }
    double scale = 1.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) scale = std::max(scale, std::abs(aug[i][j]));
    int pivot_col[3] = {-1, -1, -1};
    int row = 0;
    for (int col = 0; col < 3 && row < 3; ++col) {
      int piv = row;
      for (int i = row + 1; i < 3; ++i)
        if (std::abs(aug[i][col]) > std::abs(aug[piv][col])) piv = i;
      if (std::abs(aug[piv][col]) < tol * scale) continue;
      for (int j = 0; j < 4; ++j) std::swap(aug[piv][j], aug[row][j]);
      for (int i = 0; i < 3; ++i) {
        if (i == row) continue;
        double f = aug[i][col] / aug[row][col];
        for (int j = col; j < 4; ++j) aug[i][j] -= f * aug[row][j];
      }
      pivot_col[row] = col;
      ++row;
    }
    for (int i = row; i < 3; ++i)
      if (std::abs(aug[i][3]) > tol * std::max(scale, 1.0)) return out; // inconsistent: NoAxis
    Vec3 u{}; // free variables at 0
    for (int i = 0; i < row; ++i)
      u[static_cast<std::size_t>(pivot_col[i])] = aug[i][3] / aug[i][pivot_col[i]];
    out.axis_point = u;
    return out;
  }

  out.shift = dot_eta(e.v, axis_dir, eta) / n;
  for (int i = 0; i < 3; ++i) {
    out.vector_shift[static_cast<std::size_t>(i)] = out.shift * axis_dir[static_cast<std::size_t>(i)];
    out.v_perp[static_cast<std::size_t>(i)] =
        e.v[static_cast<std::size_t>(i)] - out.vector_shift[static_cast<std::size_t>(i)];
  }

  // Basis of the eta-orthogonal complement of A-.
  Vec3 b1{}, b2{};
  {
    // two independent vectors eta-orthogonal to axis_dir
    Vec3 cand[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    int found = 0;
    for (auto& cvec : cand) {
      Vec3 w = cvec;
      double f = dot_eta(w, axis_dir, eta) / n;
      for (int i = 0; i < 3; ++i) w[static_cast<std::size_t>(i)] -= f * axis_dir[static_cast<std::size_t>(i)];
      double wmax = std::max({std::abs(w[0]), std::abs(w[1]), std::abs(w[2])});
      if (wmax < 1e-12 * std::max(1.0, amax)) continue;
      if (found == 0) {
        b1 = w;
        ++found;
      } else {
        // make independent from b1 (classical cross product works here)
        Vec3 cr = {b1[1] * w[2] - b1[2] * w[1], b1[2] * w[0] - b1[0] * w[2],
                   b1[0] * w[1] - b1[1] * w[0]};
        double crmax = std::max({std::abs(cr[0]), std::abs(cr[1]), std::abs(cr[2])});
        if (crmax < 1e-12) continue;
        b2 = w;
        ++found;
        break;
      }
    }
    if (found < 2) throw DomainError("axis_shift: failed to build complement basis");
  }

  // Restricted 2x2 system (Id - c(A)) (p b1 + q b2) = v_perp, projected back
  // onto span{b1, b2} via eta inner products.
  auto apply_IminusC = [&](const Vec3& w) {
    Vec3 r{};
    for (int i = 0; i < 3; ++i) {
      double acc = w[static_cast<std::size_t>(i)];
      for (int j = 0; j < 3; ++j) acc -= C[i][j] * w[static_cast<std::size_t>(j)];
      r[static_cast<std::size_t>(i)] = acc;
    }
    return r;
  };
  Vec3 c1 = apply_IminusC(b1), c2 = apply_IminusC(b2);
  // Gram system: [<ci,bj>_eta] [p q]^T = [<v_perp,bj>_eta]
  double G[2][2] = {{dot_eta(c1, b1, eta), dot_eta(c2, b1, eta)},
                    {dot_eta(c1, b2, eta), dot_eta(c2, b2, eta)}};
  double rhs[2] = {dot_eta(out.v_perp, b1, eta), dot_eta(out.v_perp, b2, eta)};
  double det = G[0][0] * G[1][1] - G[0][1] * G[1][0];
  double gmax = std::max({std::abs(G[0][0]), std::abs(G[0][1]), std::abs(G[1][0]),
                          std::abs(G[1][1]), 1e-300});
  if (std::abs(det) < tol * gmax * gmax) return out; // NoAxis
  double pcoef = (rhs[0] * G[1][1] - rhs[1] * G[0][1]) / det;
  double qcoef = (G[0][0] * rhs[1] - G[1][0] * rhs[0]) / det;
  Vec3 u{};
  for (int i = 0; i < 3; ++i)
    u[static_cast<std::size_t>(i)] = pcoef * b1[static_cast<std::size_t>(i)] + qcoef * b2[static_cast<std::size_t>(i)];
  out.axis_point = u;
  return out;
}

} // namespace qknot
