#pragma once

#include <functional>
#include <vector>

#include "core/models.hpp"

namespace pinchflow {

// Axisymmetric immersion into the round sphere of radius 1/sqrt(kbar),
// realized in R^(n+2) as F = (g1(t), g2(t), g3(t) * zeta) with zeta in the
// unit sphere of R^n and (g1, g2, g3) a curve on S^2:
//   SphereClass: t = v in [0, pi],    (cos u(v), sin u(v) cos v, sin u(v) sin v)
//   TorusClass:  t = alpha in [0,2pi), (cos psi cos a, cos psi sin a, sin psi)
struct AxisymmetricImmersion {
  enum class Family { SphereClass, TorusClass };

  Family family = Family::SphereClass;
  int n = 2;
  double kbar = 1.0;
  std::function<double(double)> profile;  // u(v) or psi(alpha)
  std::vector<double> grid;               // sampled profile values (uniform nodes)

  static AxisymmetricImmersion sphere_profile(int n, double kbar,
                                              std::function<double(double)> u,
                                              int grid_nodes = 257);
  static AxisymmetricImmersion torus_profile(int n, double kbar,
                                             std::function<double(double)> psi,
                                             int grid_nodes = 257);
  static AxisymmetricImmersion sphere_constant(int n, double kbar, double rho_angle);
  static AxisymmetricImmersion torus_constant(int n, double kbar, double psi);

  double param_lo() const { return 0.0; }
  double param_hi() const;
};

// Ambient point of the immersion; zeta must be a unit vector in R^n.
std::vector<double> embed(const AxisymmetricImmersion& imm, double t,
                          const std::vector<double>& zeta);

// Finite-difference curvature at parameter t: numeric differentiation along
// the profile coordinate (step h), analytic great-circle derivatives along
// the orbit directions, unit normal by orthogonalization inside the ambient
// sphere's tangent space.  Second-order accurate in h.
CurvatureSummary oracle_curvature(const AxisymmetricImmersion& imm, double t, double h = 1e-4,
                                  const std::vector<double>* zeta = nullptr);

// Max deviation of the constructed (frame + normal + position) Gram matrix
// from the identity; diagnostic used by the validation tests.
double oracle_frame_residual(const AxisymmetricImmersion& imm, double t, double h = 1e-4,
                             const std::vector<double>* zeta = nullptr);

}  // namespace pinchflow
