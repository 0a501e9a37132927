#pragma once

#include <stdexcept>
#include <string>

namespace pinchflow {

// Ambient data shared by every formula: submanifold dimension n and the
// sectional curvature kbar of the round ambient sphere (radius 1/sqrt(kbar)).
struct SphereContext {
  int n;
  double kbar;

  SphereContext(int n_, double kbar_) : n(n_), kbar(kbar_) {
    if (n < 2) throw std::domain_error("SphereContext: n must be >= 2");
    if (!(kbar > 0.0)) throw std::domain_error("SphereContext: kbar must be > 0");
  }
};

enum class ProfileKind { LinearHuisken, LinearBaker, Alpha, Gamma, SqrtA, B };
enum class DeltaConvention { Intro, Section5 };

const char* profile_name(ProfileKind k);
ProfileKind profile_from_name(const std::string& name);

// A named pinching threshold curve x = |H|^2 -> bound on |A|^2.
struct ThresholdProfile {
  ProfileKind kind = ProfileKind::SqrtA;
  DeltaConvention delta = DeltaConvention::Section5;

  ThresholdProfile() = default;
  explicit ThresholdProfile(ProfileKind k, DeltaConvention d = DeltaConvention::Section5)
      : kind(k), delta(d) {}

  // Throws std::domain_error when the profile is not defined at dimension n.
  void require_valid(int n) const;
};

// delta in (0,1) blending the linear curve with alpha inside b.
//   Intro:    (sqrt(12n+9)-7)/(2(n-2)), n >= 4
//   Section5: same for 4 <= n <= 12, 2(2n-5)/(n^2-2) for n >= 13
double delta_coefficient(int n, DeltaConvention conv);

// Threshold value at x = |H|^2 (x >= 0).
double threshold_value(const ThresholdProfile& p, const SphereContext& ctx, double x);

// Traceless form profile(x) - x/n. Defined for SqrtA, Alpha and B.
double ring_value(const ThresholdProfile& p, const SphereContext& ctx, double x);

struct RingDerivatives {
  double first;
  double second;
};

// Closed-form first/second derivatives of the traceless profile.
// Alpha and B have an infinite one-sided derivative at x = 0, so x > 0 is
// required there; SqrtA is smooth at 0.
RingDerivatives ring_derivatives(const ThresholdProfile& p, const SphereContext& ctx, double x);

// omega(x) = x/(n-1) + 2 n kbar; strictly dominates the SqrtA curve.
double omega(const SphereContext& ctx, double x);

struct SigmaBound {
  double sigma;    // min of the three admissible branches at the given p
  double p_floor;  // n^3/(32 eps) + 1
};

// Admissible decay exponent sigma and the integrability floor for p.
// Requires eps in (0, 1/n^2) and p > 1.
SigmaBound admissible_sigma(int n, double eps, double p);

// Individual building blocks, shared with the certification registry and
// the geometry modules.
double alpha_value(const SphereContext& ctx, double x);
double alpha_d1(const SphereContext& ctx, double x);  // x > 0
double alpha_d2(const SphereContext& ctx, double x);  // x > 0
double sqrt_a_value(const SphereContext& ctx, double x);
double gamma_x0(const SphereContext& ctx);  // Taylor base point of the gamma blend

}  // namespace pinchflow
