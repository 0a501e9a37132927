#include "core/models.hpp"

#include <cmath>

namespace pinchflow {

CurvatureSummary summary_from_principal(const std::vector<CurvatureSummary::Principal>& ks,
                                        double r1_factor) {
  CurvatureSummary s;
  s.principal = ks;
  int n = 0;
  double sum1 = 0.0, sum2 = 0.0, sum3 = 0.0;
  for (const auto& k : ks) {
    n += k.multiplicity;
    sum1 += k.value * k.multiplicity;
    sum2 += k.value * k.value * k.multiplicity;
    sum3 += k.value * k.value * k.value * k.multiplicity;
  }
  s.H = sum1;
  s.normH2 = sum1 * sum1;
  s.normA2 = sum2;
  s.normAring2 = std::max(0.0, sum2 - sum1 * sum1 / n);
  s.R1 = r1_factor * sum2 * sum2;  // plus |Rm_perp|^2 = 0 in codimension 1
  s.R2 = s.normH2 * s.normA2;
  s.R3 = sum1 * sum3;
  s.P2 = 0.0;
  s.normRmPerp2 = 0.0;
  return s;
}

CurvatureSummary curvature_of(const ModelSubmanifold& model, const SphereContext& ctx,
                              double r1_factor) {
  const double rk = std::sqrt(ctx.kbar);
  if (const auto* gs = std::get_if<GeodesicSphere>(&model)) {
    if (!(gs->rho > 0.0 && gs->rho < M_PI / rk))
      throw std::domain_error("geodesic sphere radius out of range");
    const double kappa = rk / std::tan(rk * gs->rho);
    return summary_from_principal({{kappa, gs->n}}, r1_factor);
  }
  if (const auto* ct = std::get_if<CliffordTorus>(&model)) {
    if (!(ct->psi > 0.0 && ct->psi < M_PI / 2.0))
      throw std::domain_error("clifford torus angle out of range");
    // unit-sphere values scaled by sqrt(kbar)
    const double k1 = rk * std::tan(ct->psi);
    const double k2 = -rk / std::tan(ct->psi);
    return summary_from_principal({{k1, 1}, {k2, ct->n - 1}}, r1_factor);
  }
  const auto& eq = std::get<Equator>(model);
  return summary_from_principal({{0.0, eq.n}}, r1_factor);
}

SharpnessGap sharpness_gap(const CliffordTorus& torus, const SphereContext& ctx) {
  if (ctx.kbar != 1.0) throw std::domain_error("sharpness_gap is stated in the unit sphere");
  const CurvatureSummary s = curvature_of(torus, ctx);
  const int n = torus.n;
  const double L = s.normH2 / (n - 1.0) + 2.0;
  const double lhs = s.normA2 * s.normA2 - L * L - (2.0 * n - 4.0);
  const double r = std::cos(torus.psi), q = std::sin(torus.psi);
  const double rhs = (double((n - 1) * (n - 1)) - 1.0) / double((n - 1) * (n - 1)) *
                     (q * q * q * q) / (r * r * r * r);
  return {lhs, rhs};
}

PinchClass classify(const CurvatureSummary& s, const ThresholdProfile& profile,
                    const SphereContext& ctx) {
  const double thr = threshold_value(profile, ctx, s.normH2);
  const double tol = 1e-12 * (1.0 + thr);
  if (s.normA2 < thr - tol) return PinchClass::StrictlyInside;
  if (s.normA2 > thr + tol) return PinchClass::Outside;
  return PinchClass::Boundary;
}

PinchingMargin pinching_margin(const CurvatureSummary& s, const ThresholdProfile& profile,
                               const SphereContext& ctx, double eps, double sigma) {
  const double ring = ring_value(profile, ctx, s.normH2);
  PinchingMargin out;
  out.U = s.normAring2 - ring + eps * omega(ctx, s.normH2);
  out.f_sigma = s.normAring2 / std::pow(ring, 1.0 - sigma);
  return out;
}

double ricci_lower_bound(const CurvatureSummary& s, const SphereContext& ctx) {
  const double n = ctx.n;
  const double aring = std::sqrt(s.normAring2);
  const double habs = std::sqrt(s.normH2);
  return (n - 1.0) / n *
         (n * ctx.kbar + s.normH2 / n - s.normAring2 -
          (n - 2.0) / std::sqrt(n * (n - 1.0)) * habs * aring);
}

EstimateChecks estimate_checks(const CurvatureSummary& s, const SphereContext& ctx, double eps) {
  const double n = ctx.n, k = ctx.kbar;
  EstimateChecks out;
  const double core = n * k * s.normAring2 - s.R1 + s.R3;
  out.gradient_core_sqrt2n =
      core - 0.5 * n * s.normAring2 * (eps * s.normA2 - std::sqrt(2.0 * n) * k);
  out.gradient_core_4k = core - 0.5 * n * s.normAring2 * (eps * s.normA2 - 4.0 * k);
  const double r1_upper = s.normAring2 * s.normAring2 + s.normAring2 * s.normH2 / n +
                          2.0 * s.P2 * s.normAring2 - 1.5 * s.P2 * s.P2 -
                          s.P2 * s.normH2 / n;
  out.r1_minus_r2_over_n = r1_upper - (s.R1 - s.R2 / n);
  const double d = s.normAring2 - s.P2;
  const double r3_lower = s.normAring2 * s.normH2 / (2.0 * (n - 1.0)) - 0.5 * n * d * d -
                          std::max(4.0, (n + 2.0) / 2.0) * d * s.P2 - 1.5 * s.P2 * s.P2;
  out.r3_minus_r1 = (s.R3 - s.R1) - r3_lower;
  return out;
}

}  // namespace pinchflow
