#include "core/oracle.hpp"

#include <cmath>

namespace pinchflow {

namespace {

struct Curve3 {
  double c[3];
};

Curve3 reduced_curve(const AxisymmetricImmersion& imm, double t) {
  const double p = imm.profile(t);
  if (imm.family == AxisymmetricImmersion::Family::SphereClass) {
    if (!(p > 0.0 && p < M_PI)) throw std::domain_error("profile value out of (0, pi)");
    return {{std::cos(p), std::sin(p) * std::cos(t), std::sin(p) * std::sin(t)}};
  }
  if (!(p > 0.0 && p < M_PI / 2.0)) throw std::domain_error("profile value out of (0, pi/2)");
  return {{std::cos(p) * std::cos(t), std::cos(p) * std::sin(t), std::sin(p)}};
}

// analytic d/d(profile value) of the embedding, used only to orient the normal
Curve3 orientation_ref(const AxisymmetricImmersion& imm, double t) {
  const double p = imm.profile(t);
  if (imm.family == AxisymmetricImmersion::Family::SphereClass)
    return {{std::sin(p), -std::cos(p) * std::cos(t), -std::cos(p) * std::sin(t)}};
  return {{-std::sin(p) * std::cos(t), -std::sin(p) * std::sin(t), std::cos(p)}};
}

std::vector<double> lift(const Curve3& g, const std::vector<double>& zeta) {
  std::vector<double> out(2 + zeta.size());
  out[0] = g.c[0];
  out[1] = g.c[1];
  for (size_t k = 0; k < zeta.size(); ++k) out[2 + k] = g.c[2] * zeta[k];
  return out;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void axpy(std::vector<double>& y, double a, const std::vector<double>& x) {
  for (size_t i = 0; i < y.size(); ++i) y[i] += a * x[i];
}

double norm(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

std::vector<double> default_zeta(int n) {
  std::vector<double> z(n, 0.0);
  z[0] = 1.0;
  return z;
}

// orthonormal tangent basis of the zeta-sphere at zeta
std::vector<std::vector<double>> zeta_tangent_basis(const std::vector<double>& zeta) {
  const int n = static_cast<int>(zeta.size());
  std::vector<std::vector<double>> basis;
  basis.reserve(n - 1);
  std::vector<std::vector<double>> frame{zeta};
  for (int i = 0; i < n && static_cast<int>(basis.size()) < n - 1; ++i) {
    std::vector<double> cand(n, 0.0);
    cand[i] = 1.0;
    for (const auto& f : frame) axpy(cand, -dot(cand, f), f);
    const double r = norm(cand);
    if (r > 1e-8) {
      for (auto& v : cand) v /= r;
      frame.push_back(cand);
      basis.push_back(cand);
    }
  }
  return basis;
}

struct OracleFrame {
  std::vector<double> pos, t_prof, normal;  // unit vectors in unit-sphere coords
  std::vector<std::vector<double>> orbit;   // unit orbit directions
  double g_tt = 0.0;                        // |dF/dt|^2 before normalization
  std::vector<double> d2_prof;              // d^2 F / dt^2
  double g3 = 0.0;                          // zeta-block weight
};

OracleFrame build_frame(const AxisymmetricImmersion& imm, double t, double h,
                        const std::vector<double>& zeta) {
  OracleFrame fr;
  const Curve3 g0 = reduced_curve(imm, t);
  const Curve3 gp = reduced_curve(imm, t + h);
  const Curve3 gm = reduced_curve(imm, t - h);
  fr.pos = lift(g0, zeta);

  Curve3 d1{}, d2{};
  for (int i = 0; i < 3; ++i) {
    d1.c[i] = (gp.c[i] - gm.c[i]) / (2.0 * h);
    d2.c[i] = (gp.c[i] - 2.0 * g0.c[i] + gm.c[i]) / (h * h);
  }
  fr.t_prof = lift(d1, zeta);
  fr.d2_prof = lift(d2, zeta);
  fr.g_tt = dot(fr.t_prof, fr.t_prof);
  if (fr.g_tt < 1e-16) throw std::domain_error("degenerate profile tangent");
  fr.g3 = g0.c[2];
  if (std::fabs(fr.g3) < 1e-8)
    throw std::domain_error("singular parametrization: orbit radius ~ 0");

  for (const auto& e : zeta_tangent_basis(zeta)) {
    std::vector<double> dir(fr.pos.size(), 0.0);
    for (size_t k = 0; k < e.size(); ++k) dir[2 + k] = e[k];
    fr.orbit.push_back(dir);
  }

  std::vector<std::vector<double>> span;
  span.push_back(fr.pos);
  {
    auto tp = fr.t_prof;
    const double r = norm(tp);
    for (auto& v : tp) v /= r;
    span.push_back(tp);
    fr.t_prof = tp;
  }
  for (const auto& o : fr.orbit) span.push_back(o);

  // normal = orthogonal complement of the span, from the best-conditioned seed
  std::vector<double> best;
  double best_r = -1.0;
  const size_t dim = fr.pos.size();
  for (size_t i = 0; i < dim; ++i) {
    std::vector<double> cand(dim, 0.0);
    cand[i] = 1.0;
    for (const auto& f : span) axpy(cand, -dot(cand, f), f);
    const double r = norm(cand);
    if (r > best_r) {
      best_r = r;
      best = cand;
    }
  }
  if (best_r < 1e-8) throw std::domain_error("degenerate frame");
  for (auto& v : best) v /= best_r;
  for (const auto& f : span) axpy(best, -dot(best, f), f);  // one re-orthogonalization
  {
    const double r = norm(best);
    for (auto& v : best) v /= r;
  }
  const auto ref = lift(orientation_ref(imm, t), zeta);
  double sgn = dot(best, ref);
  if (imm.family == AxisymmetricImmersion::Family::SphereClass) sgn = -sgn;
  if (sgn < 0.0)
    for (auto& v : best) v = -v;
  fr.normal = best;
  return fr;
}

}  // namespace

double AxisymmetricImmersion::param_hi() const {
  return family == Family::SphereClass ? M_PI : 2.0 * M_PI;
}

AxisymmetricImmersion AxisymmetricImmersion::sphere_profile(int n, double kbar,
                                                            std::function<double(double)> u,
                                                            int grid_nodes) {
  AxisymmetricImmersion imm;
  imm.family = Family::SphereClass;
  imm.n = n;
  imm.kbar = kbar;
  imm.profile = std::move(u);
  imm.grid.resize(grid_nodes);
  for (int i = 0; i < grid_nodes; ++i) imm.grid[i] = imm.profile(M_PI * i / (grid_nodes - 1));
  return imm;
}

AxisymmetricImmersion AxisymmetricImmersion::torus_profile(int n, double kbar,
                                                           std::function<double(double)> psi,
                                                           int grid_nodes) {
  AxisymmetricImmersion imm;
  imm.family = Family::TorusClass;
  imm.n = n;
  imm.kbar = kbar;
  imm.profile = std::move(psi);
  imm.grid.resize(grid_nodes);
  for (int i = 0; i < grid_nodes; ++i) imm.grid[i] = imm.profile(2.0 * M_PI * i / grid_nodes);
  return imm;
}

AxisymmetricImmersion AxisymmetricImmersion::sphere_constant(int n, double kbar,
                                                             double rho_angle) {
  return sphere_profile(n, kbar, [rho_angle](double) { return rho_angle; });
}

AxisymmetricImmersion AxisymmetricImmersion::torus_constant(int n, double kbar, double psi) {
  return torus_profile(n, kbar, [psi](double) { return psi; });
}

std::vector<double> embed(const AxisymmetricImmersion& imm, double t,
                          const std::vector<double>& zeta) {
  if (static_cast<int>(zeta.size()) != imm.n)
    throw std::invalid_argument("zeta must live in R^n");
  if (std::fabs(norm(zeta) - 1.0) > 1e-9)
    throw std::invalid_argument("zeta must be a unit vector");
  auto out = lift(reduced_curve(imm, t), zeta);
  const double scale = 1.0 / std::sqrt(imm.kbar);
  for (auto& v : out) v *= scale;
  return out;
}

CurvatureSummary oracle_curvature(const AxisymmetricImmersion& imm, double t, double h,
                                  const std::vector<double>* zeta_opt) {
  const std::vector<double> zeta = zeta_opt ? *zeta_opt : default_zeta(imm.n);
  const OracleFrame fr = build_frame(imm, t, h, zeta);

  const double kp = dot(fr.d2_prof, fr.normal) / fr.g_tt;
  // second derivative along a zeta great circle is (0, 0, -g3 zeta), speed |g3|
  std::vector<double> d2_orb(fr.pos.size(), 0.0);
  for (size_t k = 0; k < zeta.size(); ++k) d2_orb[2 + k] = -fr.g3 * zeta[k];
  const double ko = dot(d2_orb, fr.normal) / (fr.g3 * fr.g3);

  const double rk = std::sqrt(imm.kbar);  // curvatures scale like sqrt(kbar)
  return summary_from_principal({{rk * kp, 1}, {rk * ko, imm.n - 1}});
}

double oracle_frame_residual(const AxisymmetricImmersion& imm, double t, double h,
                             const std::vector<double>* zeta_opt) {
  const std::vector<double> zeta = zeta_opt ? *zeta_opt : default_zeta(imm.n);
  const OracleFrame fr = build_frame(imm, t, h, zeta);
  std::vector<std::vector<double>> vecs{fr.pos, fr.t_prof, fr.normal};
  for (const auto& o : fr.orbit) vecs.push_back(o);
  double worst = 0.0;
  for (size_t i = 0; i < vecs.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      const double want = i == j ? 1.0 : 0.0;
      worst = std::max(worst, std::fabs(dot(vecs[i], vecs[j]) - want));
    }
  return worst;
}

}  // namespace pinchflow
