#include "core/thresholds.hpp"

#include <cmath>

namespace pinchflow {

const char* profile_name(ProfileKind k) {
  switch (k) {
    case ProfileKind::LinearHuisken: return "huisken";
    case ProfileKind::LinearBaker: return "baker";
    case ProfileKind::Alpha: return "alpha";
    case ProfileKind::Gamma: return "gamma";
    case ProfileKind::SqrtA: return "sqrt";
    case ProfileKind::B: return "b";
  }
  return "?";
}

ProfileKind profile_from_name(const std::string& name) {
  if (name == "huisken") return ProfileKind::LinearHuisken;
  if (name == "baker") return ProfileKind::LinearBaker;
  if (name == "alpha") return ProfileKind::Alpha;
  if (name == "gamma") return ProfileKind::Gamma;
  if (name == "sqrt" || name == "sqrta") return ProfileKind::SqrtA;
  if (name == "b" || name == "b-section5") return ProfileKind::B;
  throw std::invalid_argument("unknown profile name: " + name);
}

void ThresholdProfile::require_valid(int n) const {
  switch (kind) {
    case ProfileKind::LinearHuisken:
    case ProfileKind::LinearBaker:
    case ProfileKind::Alpha:
    case ProfileKind::SqrtA:
      if (n < 2) throw std::domain_error("profile requires n >= 2");
      return;
    case ProfileKind::Gamma:
      if (n < 6) throw std::domain_error("gamma profile requires n >= 6");
      return;
    case ProfileKind::B:
      if (delta == DeltaConvention::Intro) {
        if (n < 4 || n > 6) throw std::domain_error("b (intro convention) requires 4 <= n <= 6");
      } else {
        if (n < 4) throw std::domain_error("b (section5 convention) requires n >= 4");
      }
      return;
  }
}

double delta_coefficient(int n, DeltaConvention conv) {
  if (n < 4) throw std::domain_error("delta_coefficient requires n >= 4");
  const double nn = static_cast<double>(n);
  if (conv == DeltaConvention::Section5 && n >= 13)
    return 2.0 * (2.0 * nn - 5.0) / (nn * nn - 2.0);
  return (std::sqrt(12.0 * nn + 9.0) - 7.0) / (2.0 * (nn - 2.0));
}

namespace {

void check_x(double x) {
  if (!(x >= 0.0)) throw std::domain_error("threshold argument x must be >= 0");
}

double linear_value(const SphereContext& ctx, double x) {
  return x / (ctx.n - 1.0) + 2.0 * ctx.kbar;
}

}  // namespace

double sqrt_a_value(const SphereContext& ctx, double x) {
  const double L = linear_value(ctx, x);
  return std::sqrt(L * L + (2.0 * ctx.n - 4.0) * ctx.kbar * ctx.kbar);
}

double alpha_value(const SphereContext& ctx, double x) {
  const double n = ctx.n, k = ctx.kbar;
  const double rad = std::sqrt(x * x + 4.0 * (n - 1.0) * k * x);
  return n * k + n / (2.0 * (n - 1.0)) * x - (n - 2.0) / (2.0 * (n - 1.0)) * rad;
}

double alpha_d1(const SphereContext& ctx, double x) {
  if (!(x > 0.0)) throw std::domain_error("alpha derivative undefined at x = 0");
  const double n = ctx.n, k = ctx.kbar;
  const double rad = std::sqrt(x * x + 4.0 * (n - 1.0) * k * x);
  return n / (2.0 * (n - 1.0)) -
         (n - 2.0) / (2.0 * (n - 1.0)) * (x + 2.0 * (n - 1.0) * k) / rad;
}

double alpha_d2(const SphereContext& ctx, double x) {
  if (!(x > 0.0)) throw std::domain_error("alpha derivative undefined at x = 0");
  const double n = ctx.n, k = ctx.kbar;
  const double r2 = x * x + 4.0 * (n - 1.0) * k * x;
  return 2.0 * (n - 2.0) * (n - 1.0) * k * k / (r2 * std::sqrt(r2));
}

double gamma_x0(const SphereContext& ctx) {
  const double n = ctx.n;
  const double sm = std::sqrt(n - 1.0);
  const double c = (n - 4.0) / (2.0 * n + 2.0);
  return (2.0 * n + 2.0) / (n - 4.0) * sm * (sm - c) * (sm - c) * ctx.kbar;
}

double threshold_value(const ThresholdProfile& p, const SphereContext& ctx, double x) {
  check_x(x);
  p.require_valid(ctx.n);
  const double n = ctx.n, k = ctx.kbar;
  switch (p.kind) {
    case ProfileKind::LinearHuisken:
      if (ctx.n == 2) return 0.75 * x + (4.0 / 3.0) * k;
      return linear_value(ctx, x);
    case ProfileKind::LinearBaker:
      if (ctx.n <= 3) return 4.0 / (3.0 * n) * x + 2.0 * (n - 1.0) / 3.0 * k;
      return linear_value(ctx, x);
    case ProfileKind::Alpha:
      return alpha_value(ctx, x);
    case ProfileKind::Gamma: {
      const double x0 = gamma_x0(ctx);
      const double d = x - x0;
      const double beta = alpha_value(ctx, x0) + alpha_d1(ctx, x0) * d +
                          0.5 * alpha_d2(ctx, x0) * d * d;
      return std::min(alpha_value(ctx, x), beta);
    }
    case ProfileKind::SqrtA:
      return sqrt_a_value(ctx, x);
    case ProfileKind::B: {
      const double delta = delta_coefficient(ctx.n, p.delta);
      return (1.0 - delta) * linear_value(ctx, x) + delta * alpha_value(ctx, x);
    }
  }
  throw std::logic_error("unreachable profile kind");
}

double ring_value(const ThresholdProfile& p, const SphereContext& ctx, double x) {
  if (p.kind != ProfileKind::SqrtA && p.kind != ProfileKind::Alpha && p.kind != ProfileKind::B)
    throw std::domain_error("ring_value defined only for sqrt, alpha and b profiles");
  return threshold_value(p, ctx, x) - x / ctx.n;
}

RingDerivatives ring_derivatives(const ThresholdProfile& p, const SphereContext& ctx, double x) {
  check_x(x);
  p.require_valid(ctx.n);
  const double n = ctx.n, k = ctx.kbar;
  switch (p.kind) {
    case ProfileKind::SqrtA: {
      const double L = linear_value(ctx, x);
      const double a = sqrt_a_value(ctx, x);
      const double first = L / ((n - 1.0) * a) - 1.0 / n;
      const double second = 2.0 * (n - 2.0) * k * k / ((n - 1.0) * (n - 1.0) * a * a * a);
      return {first, second};
    }
    case ProfileKind::Alpha: {
      return {alpha_d1(ctx, x) - 1.0 / n, alpha_d2(ctx, x)};
    }
    case ProfileKind::B: {
      const double delta = delta_coefficient(ctx.n, p.delta);
      if (!(x > 0.0)) throw std::domain_error("b derivative undefined at x = 0");
      const double rad = std::sqrt(x * x + 4.0 * (n - 1.0) * k * x);
      const double first = (delta * n * n - 2.0 * delta * n + 2.0) / (2.0 * (n - 1.0) * n) -
                           delta * (n - 2.0) / (2.0 * (n - 1.0)) *
                               (x + 2.0 * (n - 1.0) * k) / rad;
      const double second = 2.0 * delta * (n - 1.0) * (n - 2.0) * k * k / (rad * rad * rad);
      return {first, second};
    }
    default:
      throw std::domain_error("ring_derivatives defined only for sqrt, alpha and b profiles");
  }
}

double omega(const SphereContext& ctx, double x) {
  check_x(x);
  return x / (ctx.n - 1.0) + 2.0 * ctx.n * ctx.kbar;
}

SigmaBound admissible_sigma(int n, double eps, double p) {
  if (n < 2) throw std::domain_error("admissible_sigma requires n >= 2");
  const double nn = n;
  if (!(eps > 0.0 && eps < 1.0 / (nn * nn)))
    throw std::domain_error("admissible_sigma requires eps in (0, 1/n^2)");
  if (!(p > 1.0)) throw std::domain_error("admissible_sigma requires p > 1");
  const double b1 = eps * eps / (3.0 * std::sqrt(2.0 * nn));
  const double b2 = nn * eps * eps / 60.0;
  const double b3 = nn * eps * std::sqrt(eps) / (24.0 * std::sqrt(p - 1.0));
  return {std::min(b1, std::min(b2, b3)), nn * nn * nn / (32.0 * eps) + 1.0};
}

}  // namespace pinchflow
