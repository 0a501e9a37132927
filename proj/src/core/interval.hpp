#pragma once

#include <cmath>
#include <stdexcept>

namespace pinchflow {

// Raised when an interval operation leaves its domain (division through
// zero, square root of a negative interval).
struct IntervalDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Closed interval [lo, hi] with outward rounding by eps-inflation: every
// arithmetic result is widened by 4 units in the last place per endpoint,
// so the exact image set is contained in the returned interval.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double v) : lo(v), hi(v) {}  // point interval, exact
  Interval(double l, double h) : lo(l), hi(h) {
    if (!(l <= h)) throw IntervalDomainError("Interval: lo > hi");
  }

  double width() const { return hi - lo; }
  double mid() const { return 0.5 * (lo + hi); }
  bool contains(double v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }

  // Enclosure of a decimal constant that is not exactly representable.
  static Interval decimal(double v) {
    return Interval(std::nextafter(v, -INFINITY), std::nextafter(v, INFINITY));
  }
};

namespace detail {
inline double down4(double v) {
  for (int i = 0; i < 4; ++i) v = std::nextafter(v, -INFINITY);
  return v;
}
inline double up4(double v) {
  for (int i = 0; i < 4; ++i) v = std::nextafter(v, INFINITY);
  return v;
}
inline Interval inflate(double lo, double hi) { return Interval(down4(lo), up4(hi)); }
}  // namespace detail

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator/(const Interval& a, const Interval& b);  // throws if 0 in b

Interval sqrt(const Interval& a);  // throws if a.hi < 0; clamps tiny negative lo
Interval sqr(const Interval& a);
Interval pow_int(const Interval& a, int k);  // k >= 0
Interval min(const Interval& a, const Interval& b);
Interval max(const Interval& a, const Interval& b);
Interval abs(const Interval& a);
Interval hull(const Interval& a, const Interval& b);

// double helpers so the same generic code instantiates at double
inline double sqr(double v) { return v * v; }
inline double pow_int(double v, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= v;
  return r;
}
inline double sqrt(double v) { return std::sqrt(v); }
inline double min(double a, double b) { return a < b ? a : b; }
inline double max(double a, double b) { return a > b ? a : b; }
inline double abs(double v) { return std::fabs(v); }

}  // namespace pinchflow
