#pragma once

#include <variant>
#include <vector>

#include "core/thresholds.hpp"

namespace pinchflow {

// Closed-form model submanifolds of the round sphere.
struct GeodesicSphere {
  int n;
  double rho;  // geodesic radius in (0, pi/sqrt(kbar))
};

struct CliffordTorus {
  int n;
  double psi;  // in (0, pi/2); r = cos psi, s = sin psi
};

struct Equator {
  int n;
};

using ModelSubmanifold = std::variant<GeodesicSphere, CliffordTorus, Equator>;

// Pointwise extrinsic invariants.  P2 and normRmPerp2 are carried as data
// fields; they vanish identically for every codimension-1 model here.
struct CurvatureSummary {
  struct Principal {
    double value;
    int multiplicity;
  };
  std::vector<Principal> principal;
  double H = 0.0;  // scalar mean curvature under the fixed normal convention
  double normH2 = 0.0;
  double normA2 = 0.0;
  double normAring2 = 0.0;
  double R1 = 0.0;  // sum over principal pairs, no leading factor 2
  double R2 = 0.0;
  double R3 = 0.0;
  double P2 = 0.0;
  double normRmPerp2 = 0.0;
};

// Weight applied to the pair-sum part of R1; the homogeneous-flow
// consistency check fixes it to 1, the factor-2 variant is exposed so the
// discrepancy can be demonstrated.
CurvatureSummary curvature_of(const ModelSubmanifold& model, const SphereContext& ctx,
                              double r1_factor = 1.0);

// Builds the summary from an explicit principal-curvature list (codimension
// one), using the same aggregate definitions as curvature_of.
CurvatureSummary summary_from_principal(const std::vector<CurvatureSummary::Principal>& ks,
                                        double r1_factor = 1.0);

// Both sides of the product-torus identity
//   |A|^4 - (|H|^2/(n-1) + 2)^2 - (2n-4) = ((n-1)^2-1)/(n-1)^2 * s^4/r^4
// in the unit sphere.
struct SharpnessGap {
  double lhs;
  double rhs;
};
SharpnessGap sharpness_gap(const CliffordTorus& torus, const SphereContext& ctx);

enum class PinchClass { StrictlyInside, Boundary, Outside };

PinchClass classify(const CurvatureSummary& s, const ThresholdProfile& profile,
                    const SphereContext& ctx);

struct PinchingMargin {
  double U;        // |Aring|^2 - ring + eps * omega
  double f_sigma;  // |Aring|^2 / ring^(1-sigma)
};
PinchingMargin pinching_margin(const CurvatureSummary& s, const ThresholdProfile& profile,
                               const SphereContext& ctx, double eps, double sigma);

// (n-1)/n (n kbar + |H|^2/n - |Aring|^2 - (n-2)/sqrt(n(n-1)) |H||Aring|)
double ricci_lower_bound(const CurvatureSummary& s, const SphereContext& ctx);

// Slack (lhs - rhs) of the pointwise curvature estimates; nonnegative slack
// means the estimate holds at this summary.
struct EstimateChecks {
  double gradient_core_sqrt2n;  // n kbar|Aring|^2 - R1 + R3 vs (n/2)|Aring|^2(eps|A|^2 - sqrt(2n) kbar)
  double gradient_core_4k;      // same with 4 kbar
  double r1_minus_r2_over_n;    // upper estimate for R1 - R2/n
  double r3_minus_r1;           // lower estimate for R3 - R1
};
EstimateChecks estimate_checks(const CurvatureSummary& s, const SphereContext& ctx, double eps);

}  // namespace pinchflow
