#include "core/interval.hpp"

#include <algorithm>

namespace pinchflow {

using detail::inflate;

Interval operator+(const Interval& a, const Interval& b) {
  return inflate(a.lo + b.lo, a.hi + b.hi);
}

Interval operator-(const Interval& a, const Interval& b) {
  return inflate(a.lo - b.hi, a.hi - b.lo);
}

Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

Interval operator*(const Interval& a, const Interval& b) {
  const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  const double lo = std::min(std::min(p1, p2), std::min(p3, p4));
  const double hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return inflate(lo, hi);
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw IntervalDomainError("interval division through zero");
  const double p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
  const double lo = std::min(std::min(p1, p2), std::min(p3, p4));
  const double hi = std::max(std::max(p1, p2), std::max(p3, p4));
  return inflate(lo, hi);
}

Interval sqrt(const Interval& a) {
  if (a.hi < 0.0) throw IntervalDomainError("interval sqrt of negative interval");
  // a.lo < 0 only arises from inflation noise on exactly-nonnegative
  // radicands; the image over the true domain starts at 0.
  const double lo = a.lo <= 0.0 ? 0.0 : detail::down4(std::sqrt(a.lo));
  const double hi = detail::up4(std::sqrt(a.hi));
  return Interval(lo, hi);
}

Interval sqr(const Interval& a) {
  if (a.contains_zero()) return inflate(0.0, std::max(a.lo * a.lo, a.hi * a.hi));
  const double p1 = a.lo * a.lo, p2 = a.hi * a.hi;
  return inflate(std::min(p1, p2), std::max(p1, p2));
}

Interval pow_int(const Interval& a, int k) {
  if (k < 0) throw IntervalDomainError("pow_int: negative exponent");
  if (k == 0) return Interval(1.0);
  Interval r = (k % 2 == 0) ? sqr(a) : a;
  int consumed = (k % 2 == 0) ? 2 : 1;
  while (consumed < k) {
    if (k - consumed >= 2) {
      r = r * sqr(a);
      consumed += 2;
    } else {
      r = r * a;
      consumed += 1;
    }
  }
  return r;
}

Interval min(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::min(a.hi, b.hi));
}

Interval max(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo, b.lo), std::max(a.hi, b.hi));
}

Interval abs(const Interval& a) {
  if (a.lo >= 0.0) return a;
  if (a.hi <= 0.0) return Interval(-a.hi, -a.lo);
  return Interval(0.0, std::max(-a.lo, a.hi));
}

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

}  // namespace pinchflow
