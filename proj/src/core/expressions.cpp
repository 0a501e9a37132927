#include "core/expressions.hpp"

#include <cmath>

// Inequality catalog, kbar normalized to 1 throughout.  Notation shared by
// the forms below (m = n-1):
//   L  = x/m + 2                         the linear curve
//   a  = sqrt(L^2 + 2n-4)                the sqrt threshold
//   aring = a - x/n, with derivatives aring', aring''
//   Ar = (n-1) a = sqrt(x^2 + 4mx + 2nm^2)
//   N  = x^2 + 3mx + nm^2
//   Q  = 3x^2 + 10mx + 4nm^2
//   Rr = sqrt(x^2 + 4mx)                 radical of the alpha family
//   b  = (1-delta) L + delta alpha, bring = b - x/n
// Tail variables carry a leading u-power so that every factor stays finite
// at u = 0:  uL = u L(1/u), ua = u a(1/u), uAr = u Ar(1/u), uR = u Rr(1/u),
// uuN = u^2 N(1/u), uuQ = u^2 Q(1/u).

namespace pinchflow {
namespace {

template <class T>
T f_L(int n, const T& x) {
  return x / T(n - 1) + T(2);
}

template <class T>
T f_a(int n, const T& x) {
  return sqrt(sqr(f_L(n, x)) + T(2 * n - 4));
}

template <class T>
T f_aring(int n, const T& x) {
  return f_a(n, x) - x / T(n);
}

template <class T>
T f_aring_d1(int n, const T& x) {
  return f_L(n, x) / (T(n - 1) * f_a(n, x)) - T(1) / T(n);
}

template <class T>
T f_aring_d2(int n, const T& x) {
  const T a = f_a(n, x);
  return T(2 * (n - 2)) / (T((n - 1) * (n - 1)) * a * sqr(a));
}

template <class T>
T f_Ar(int n, const T& x) {
  const int m = n - 1;
  return sqrt(sqr(x) + T(4 * m) * x + T(2 * n * m * m));
}

template <class T>
T f_N(int n, const T& x) {
  const int m = n - 1;
  return sqr(x) + T(3 * m) * x + T(n * m * m);
}

template <class T>
T f_Q(int n, const T& x) {
  const int m = n - 1;
  return T(3) * sqr(x) + T(10 * m) * x + T(4 * n * m * m);
}

template <class T>
T f_Rr(int n, const T& x) {
  const int m = n - 1;
  return sqrt(sqr(x) + T(4 * m) * x);
}

template <class T>
T f_delta(int n, DeltaConvention conv) {
  if (conv == DeltaConvention::Section5 && n >= 13) return T(2 * (2 * n - 5)) / T(n * n - 2);
  return (sqrt(T(12 * n + 9)) - T(7)) / T(2 * (n - 2));
}

// tail building blocks
template <class T>
T f_uL(int n, const T& u) {
  return T(1) / T(n - 1) + T(2) * u;
}

template <class T>
T f_ua(int n, const T& u) {
  return sqrt(sqr(f_uL(n, u)) + T(2 * n - 4) * sqr(u));
}

template <class T>
T f_uAr(int n, const T& u) {
  const int m = n - 1;
  return sqrt(T(1) + T(4 * m) * u + T(2 * n * m * m) * sqr(u));
}

template <class T>
T f_uR(int n, const T& u) {
  const int m = n - 1;
  return sqrt(T(1) + T(4 * m) * u);
}

template <class T>
T f_uuN(int n, const T& u) {
  const int m = n - 1;
  return T(1) + T(3 * m) * u + T(n * m * m) * sqr(u);
}

template <class T>
T f_uuQ(int n, const T& u) {
  const int m = n - 1;
  return T(3) + T(10 * m) * u + T(4 * n * m * m) * sqr(u);
}

// V = 2 aring - x/n + x aring' = Q/(m Ar) - 4x/n, in direct and tail form
template <class T>
T f_V(int n, const T& x) {
  return f_Q(n, x) / (T(n - 1) * f_Ar(n, x)) - T(4) * x / T(n);
}

template <class T>
T f_uV(int n, const T& u) {
  return f_uuQ(n, u) / (T(n - 1) * f_uAr(n, u)) - T(4) / T(n);
}

// -6W = 6(n(aring + x aring') - a(aring - x aring')) rationalized:
//   12 n (n-2) m^2 (2x + nm) / (Ar N + (x+m) Ar^2)
template <class T>
T f_neg6W(int n, const T& x) {
  const int m = n - 1;
  const T Ar = f_Ar(n, x);
  const T D = Ar * f_N(n, x) + (x + T(m)) * sqr(Ar);
  return T(12 * n * (n - 2) * m * m) * (T(2) * x + T(n * m)) / D;
}

template <class T>
T f_W(int n, const T& x) {
  return -f_neg6W(n, x) / T(6);
}

struct Registrar {
  LemmaExpression e;

  template <class F>
  void curve(F f) {
    e.has_curve = true;
    e.main_i = [f](const Interval& x) { return f(x); };
    e.main_d = [f](double x) { return f(x); };
  }
  template <class F>
  void tail(F f) {
    e.tail_i = [f](const Interval& u) { return f(u); };
    e.tail_d = [f](double u) { return f(u); };
  }
  template <class F>
  void box(double x_hi, double p_hi, F f) {
    e.has_box = true;
    e.arity = 2;
    e.box_x_hi = x_hi;
    e.box_p_hi = p_hi;
    e.box_i = [f](const Interval& x, const Interval& p) { return f(x, p); };
    e.box_d = [f](double x, double p) { return f(x, p); };
  }
  template <class F>
  void scalar(const std::string& label, GoalKind g, double tol, F f) {
    ScalarGoal s;
    s.label = label;
    s.goal = g;
    s.tol = tol;
    s.eval_i = [f]() { return f(Interval(0.0)); };
    s.eval_d = [f]() { return f(0.0); };
    e.scalars.push_back(std::move(s));
  }
};

}  // namespace

bool expression_exists(const std::string& id) {
  for (const auto& s : expression_ids())
    if (s == id) return true;
  return false;
}

std::vector<std::string> expression_ids() {
  return {
      "L2.3.i",   "L2.3.ii",     "L2.3.iii",     "L2.3.iv",      "L2.3.v",  "L2.3.vi",
      "L3.1.delta", "L3.1.reduced", "L3.1.n8cubic", "L3.1.band9_12", "L3.1.band13_65",
      "L3.1.case66", "L3.1.disc",  "L3.1.full",    "L3.1.vertexbound",
      "L4.3.core", "L5.4.core",   "L5.4.deltabound",
      "L5.2.i",   "L5.2.ii",     "L5.2.iii",     "L5.2.iv",      "L5.2.v",  "L5.2.vi",
      "P5.3.discriminant",
  };
}

LemmaExpression make_expression(const std::string& id, int n, DeltaConvention conv) {
  Registrar r;
  LemmaExpression& e = r.e;
  e.id = id;
  e.n = n;
  e.conv = conv;
  const int m = n - 1;
  e.x_split = 36.0 * m;  // t = 0.9 under x = 4m t/(1-t)
  e.u0 = 1.0 / e.x_split;
  const SphereContext ctx(n < 2 ? 2 : n, 1.0);
  const ThresholdProfile bprof(ProfileKind::B, conv);

  auto finish = [&](int n_min, int n_max = (1 << 28)) {
    e.n_min = n_min;
    e.n_max = n_max;
    if (n < n_min || n > n_max)
      throw std::domain_error("expression " + id + " not valid at n = " + std::to_string(n));
    if (!e.display && e.literal) e.display = e.literal;
    if (!e.display && e.main_d) e.display = e.main_d;
    return e;
  };

  if (id == "L2.3.i") {
    // 4x (aring')^2 / aring < 1
    r.curve([n](auto x) { return decltype(x)(4) * x * sqr(f_aring_d1(n, x)) - f_aring(n, x); });
    r.tail([n](auto u) {
      using T = decltype(u);
      const T ua = f_ua(n, u);
      const T d1 = f_uL(n, u) / (T(n - 1) * ua) - T(1) / T(n);
      return T(4) * sqr(d1) - (ua - T(1) / T(n));
    });
    e.literal = [n](double x) {
      return 4.0 * x * sqr(f_aring_d1(n, x)) / f_aring(n, x) - 1.0;
    };
    e.main_scale = [n](double x) { return f_aring(n, x); };
    e.tail_scale = [n](double u) { return u * f_aring(n, 1.0 / u); };
    return finish(3);
  }

  if (id == "L2.3.ii") {
    // 2x aring'' + aring' < 2(n-1)/(n(n+2))
    r.curve([n](auto x) {
      using T = decltype(x);
      return T(2) * x * f_aring_d2(n, x) + f_aring_d1(n, x) -
             T(2 * (n - 1)) / T(n * (n + 2));
    });
    r.tail([n, m](auto u) {
      using T = decltype(u);
      const T ua = f_ua(n, u);
      const T d1 = f_uL(n, u) / (T(m) * ua) - T(1) / T(n);
      return T(4 * (n - 2)) * sqr(u) / (T(m * m) * ua * sqr(ua)) + d1 -
             T(2 * m) / T(n * (n + 2));
    });
    e.literal = e.main_d;
    e.main_scale = [](double) { return 1.0; };
    e.tail_scale = [](double) { return 1.0; };
    return finish(3);
  }

  if (id == "L2.3.iii") {
    // c3 sqrt(x aring) + aring < x/n + n, c3 = (n-2)/sqrt(n(n-1)).
    // Certified via the negated positive factor A + B,
    // A = c3 sqrt(x aring), B = 2x/n + n - a;  the claim itself equals
    // -2n(n-2)^2 / ((a+L)^2 (A+B)).
    r.curve([n](auto x) {
      using T = decltype(x);
      const T c3 = T(n - 2) / sqrt(T(n * (n - 1)));
      return -(c3 * sqrt(x * f_aring(n, x)) + T(2) * x / T(n) + T(n) - f_a(n, x));
    });
    r.tail([n](auto u) {
      using T = decltype(u);
      const T c3 = T(n - 2) / sqrt(T(n * (n - 1)));
      const T ua = f_ua(n, u);
      return -(c3 * sqrt(ua - T(1) / T(n)) + T(2) / T(n) + T(n) * u - ua);
    });
    e.literal = [n](double x) {
      const double c3 = (n - 2) / std::sqrt(double(n) * (n - 1));
      return c3 * std::sqrt(x * f_aring(n, x)) + f_aring(n, x) - x / n - n;
    };
    e.main_scale = [n](double x) {
      const double c3 = (n - 2) / std::sqrt(double(n) * (n - 1));
      const double A = c3 * std::sqrt(x * f_aring(n, x));
      const double B = 2.0 * x / n + n - f_a(n, x);
      const double aL = f_a(n, x) + f_L(n, x);
      return aL * aL * (A + B) * (A + B) / (2.0 * n * (n - 2) * (n - 2));
    };
    e.tail_scale = [ms = e.main_scale](double u) { return u * ms(1.0 / u); };
    return finish(3);
  }

  if (id == "L2.3.iv") {
    // n(aring + x aring') - a(aring - x aring') >= 2n(n-2)(n-1)^2/(x + c4(n-1))^2,
    // c4 = sqrt(2 + sqrt(2n)); equality exactly at x = 0.  Certified through
    // NUM = P24(x) + 2(n-2)m N/(a+L) <= 0 where P24 collects the polynomial
    // part after clearing both denominators.
    // normalized by n m^3 so the acceptance tolerance is relative to O(1)
    const double norm = double(n) * m * m * m;
    auto num = [n, m](auto x) {
      using T = decltype(x);
      const T c5 = sqrt(T(2 * n));
      const T c4 = sqrt(T(2) + c5);
      const T w = T(n) * T(m * m * m);
      const T p2 = (T(10 - n) - T(4) * c4) * T(m) / w;
      const T p1 = (T(3 * n + 6) - T(2) * c5 - T(2 * n) * c4) * T(m * m) / w;
      const T p0 = T(2) - c5;
      const T poly = p2 * sqr(x) + p1 * x + p0;
      return poly + T(2 * (n - 2)) * f_N(n, x) / (T(n * m * m) * (f_a(n, x) + f_L(n, x)));
    };
    r.curve(num);
    r.tail([n, m](auto u) {
      using T = decltype(u);
      const T c5 = sqrt(T(2 * n));
      const T c4 = sqrt(T(2) + c5);
      const T w = T(n) * T(m * m * m);
      const T p2 = (T(10 - n) - T(4) * c4) * T(m) / w;
      const T p1 = (T(3 * n + 6) - T(2) * c5 - T(2 * n) * c4) * T(m * m) / w;
      const T p0 = T(2) - c5;
      const T poly = p2 + p1 * u + p0 * sqr(u);
      const T rat =
          T(2 * (n - 2)) * f_uuN(n, u) * u / (T(n * m * m) * (f_ua(n, u) + f_uL(n, u)));
      return poly + rat;
    });
    e.goal = GoalKind::NonPosWithTol;
    e.tol = 1e-9;
    e.literal = [n, m](double x) {
      const double c4 = std::sqrt(2.0 + std::sqrt(2.0 * n));
      const double rhs = 2.0 * n * (n - 2) * m * m / sqr(x + c4 * m);
      const double ar = f_aring(n, x), d1 = f_aring_d1(n, x), a = f_a(n, x);
      const double lhs = n * (ar + x * d1) - a * (ar - x * d1);
      return rhs - lhs;
    };
    e.main_scale = [n, m, norm](double x) {
      const double c4 = std::sqrt(2.0 + std::sqrt(2.0 * n));
      const double a = f_a(n, x);
      const double D = a * f_N(n, x) + (x + m) * m * a * a;
      return sqr(x + c4 * m) * D / (2.0 * n * (n - 2) * m) / norm;
    };
    e.tail_scale = [ms = e.main_scale](double u) { return u * u * ms(1.0 / u); };
    // exact equality of both sides at x = 0: n(sqrt(2n)-2) on each side
    r.scalar("eq_at_zero", GoalKind::NonPosWithTol, 1e-12, [n](auto z) {
      using T = decltype(z);
      const T c5 = sqrt(T(2 * n));
      const T lhs0 = T(n) * (c5 - T(2));
      const T rhs0 = T(2 * n * (n - 2)) / (T(2) + c5);
      return abs(lhs0 - rhs0) + z;
    });
    return finish(3);
  }

  if (id == "L2.3.v") {
    // 2 aring - x/n + x aring' <= 2 sqrt(2n) - (n-4)x/(n(n-1))
    //                             - 6(sqrt(2n)-2)x/(3x + 2 sqrt(2n)(n-1)),
    // equality at x = 0.  After factoring x^2 the claim is the strictly
    // negative -POS below.
    auto pos = [n, m](auto x) {
      using T = decltype(x);
      const T c5 = sqrt(T(2 * n));
      const T Ar = f_Ar(n, x);
      const T lin = T(3) * x + T(2) * c5 * T(m);
      const T BR = T(12 * m) * (c5 - T(2)) * sqr(Ar) + T(2 * (n - 2) * m * m) * x;
      const T DD = Ar * lin + f_Q(n, x);
      return -(T(6 * m) * (c5 - T(2)) * Ar * BR / DD + T(2 * (n - 2) * m * m) * lin);
    };
    r.curve(pos);
    r.tail([n, m](auto u) {
      using T = decltype(u);
      const T c5 = sqrt(T(2 * n));
      const T uAr = f_uAr(n, u);
      const T ulin = T(3) + T(2) * c5 * T(m) * u;
      const T uuBR = T(12 * m) * (c5 - T(2)) * sqr(uAr) + T(2 * (n - 2) * m * m) * u;
      const T uuDD = uAr * ulin + f_uuQ(n, u);
      return -(T(6 * m) * (c5 - T(2)) * uAr * uuBR / uuDD + T(2 * (n - 2) * m * m) * ulin);
    });
    e.literal = [n, m](double x) {
      const double c5 = std::sqrt(2.0 * n);
      const double lhs = 2.0 * f_aring(n, x) - x / n + x * f_aring_d1(n, x);
      const double rhs = 2.0 * c5 - (n - 4.0) * x / (double(n) * m) -
                         6.0 * (c5 - 2.0) * x / (3.0 * x + 2.0 * c5 * m);
      return lhs - rhs;
    };
    e.main_scale = [n, m](double x) {
      const double c5 = std::sqrt(2.0 * n);
      const double Ar = f_Ar(n, x);
      const double lin = 3.0 * x + 2.0 * c5 * m;
      const double DD = Ar * lin + f_Q(n, x);
      return m * Ar * DD * lin / (x * x);
    };
    e.tail_scale = [ms = e.main_scale](double u) { return u * ms(1.0 / u); };
    return finish(3);
  }

  if (id == "L2.3.vi") {
    // (x/m)(a+n) - (x/m + 2n)(aring + a - n - x aring') < -2x/m + 2n(n-4).
    // Multiplied by a and with a = L + (2n-4)/(a+L) substituted, the claim
    // collapses to the rational form below.
    r.curve([n, m](auto x) {
      using T = decltype(x);
      const T rat = T(2 * (2 * n - 4)) * (T(n + 1) * x / T(m) + T(4 * n)) /
                    (f_a(n, x) + f_L(n, x));
      return -T(2 * (n - 2)) * x / T(m) - T(8 * n * (n - 2)) + rat;
    });
    r.tail([n, m](auto u) {
      using T = decltype(u);
      const T rat = T(2 * (2 * n - 4)) * (T(n + 1) / T(m) + T(4 * n) * u) * u /
                    (f_ua(n, u) + f_uL(n, u));
      return -T(2 * (n - 2)) / T(m) - T(8 * n * (n - 2)) * u + rat;
    });
    e.literal = [n, m](double x) {
      const double a = f_a(n, x), ar = f_aring(n, x), d1 = f_aring_d1(n, x);
      return (x / m) * (a + n) - (x / m + 2.0 * n) * (ar + a - n - x * d1) +
             2.0 * x / m - 2.0 * n * (n - 4.0);
    };
    e.main_scale = [n](double x) { return f_a(n, x); };
    e.tail_scale = [n](double u) { return u * f_a(n, 1.0 / u); };
    return finish(3);
  }

  if (id == "L3.1.delta") {
    // Delta = (2 aring - x/n + x aring') - sqrt(6(n(aring + x aring')
    //          - a(aring - x aring'))) < 0 for all x >= 0.
    r.curve([n](auto x) { return f_V(n, x) - sqrt(f_neg6W(n, x)); });
    r.tail([n, m](auto u) {
      using T = decltype(u);
      const T uAr = f_uAr(n, u);
      const T dd = uAr * f_uuN(n, u) + (T(1) + T(m) * u) * sqr(uAr);
      const T arg = T(12 * n * (n - 2) * m * m) *
                    (T(2) * pow_int(u, 4) + T(n * m) * pow_int(u, 5)) / dd;
      return f_uV(n, u) - sqrt(arg);
    });
    e.literal = [n](double x) {
      const double ar = f_aring(n, x), d1 = f_aring_d1(n, x), a = f_a(n, x);
      const double V = 2.0 * ar - x / n + x * d1;
      return V - std::sqrt(6.0 * (n * (ar + x * d1) - a * (ar - x * d1)));
    };
    e.display = e.main_d;
    e.main_scale = [](double) { return 1.0; };
    e.tail_scale = [](double u) { return u; };
    return finish(7);
  }

  if (id == "L3.1.reduced") {
    // (x + c4 m)(2 c5 - (n-4)x/(nm) - 6(c5-2)x/(3x + 2 c5 m)) < 2 sqrt(3n(n-2)) m
    r.curve([n, m](auto x) {
      using T = decltype(x);
      const T c5 = sqrt(T(2 * n));
      const T c4 = sqrt(T(2) + c5);
      const T W = T(2) * c5 - T(n - 4) * x / T(n * m) -
                  T(6) * (c5 - T(2)) * x / (T(3) * x + T(2) * c5 * T(m));
      return (x + c4 * T(m)) * W - T(2) * sqrt(T(3 * n * (n - 2))) * T(m);
    });
    r.tail([n, m](auto u) {
      using T = decltype(u);
      const T c5 = sqrt(T(2 * n));
      const T c4 = sqrt(T(2) + c5);
      const T uW = T(2) * c5 * u - T(n - 4) / T(n * m) -
                   T(6) * (c5 - T(2)) * u / (T(3) + T(2) * c5 * T(m) * u);
      return (T(1) + c4 * T(m) * u) * uW - T(2) * sqrt(T(3 * n * (n - 2))) * T(m) * sqr(u);
    });
    e.literal = e.main_d;
    e.main_scale = [](double) { return 1.0; };
    e.tail_scale = [](double u) { return u * u; };
    return finish(8);
  }

  if (id == "L3.1.n8cubic") {
    // (3/14)x^3 - (8 - 3 sqrt(6)/2)x^2 - 56(sqrt(6)-1)x + 3136(3-sqrt(6)) > 0
    auto cubic = [](auto x) {
      using T = decltype(x);
      const T s6 = sqrt(T(6));
      return T(3) / T(14) * pow_int(x, 3) - (T(8) - T(3) / T(2) * s6) * sqr(x) -
             T(56) * (s6 - T(1)) * x + T(3136) * (T(3) - s6);
    };
    r.curve([cubic](auto x) { return -cubic(x); });
    r.tail([](auto u) {
      using T = decltype(u);
      const T s6 = sqrt(T(6));
      return -(T(3) / T(14) - (T(8) - T(3) / T(2) * s6) * u -
               T(56) * (s6 - T(1)) * sqr(u) + T(3136) * (T(3) - s6) * pow_int(u, 3));
    });
    e.display = [cubic](double x) { return cubic(x); };
    e.literal = e.main_d;
    e.main_scale = [](double) { return 1.0; };
    e.tail_scale = [](double u) { return u * u * u; };
    return finish(8, 8);
  }

  auto cA = [n](auto z) {
    using T = decltype(z);
    const T c5 = sqrt(T(2 * n));
    return T(1) - (T(2) - T(2) / T(n) - T(3) / c5) * sqrt((T(2) + c5) / T(2 * n)) + z;
  };
  auto cB = [n](auto z) {
    using T = decltype(z);
    const T c5 = sqrt(T(2 * n));
    return T(n - 4) / (T(n) * sqrt(T(n))) * (sqrt(T(3 * (n - 2))) - sqrt(T(4) + T(2) * c5)) + z;
  };

  if (id == "L3.1.band9_12" || id == "L3.1.band13_65") {
    const bool low = id == "L3.1.band9_12";
    const double band = low ? 0.1814 : 0.3555;
    r.scalar("cA_below_band", GoalKind::StrictNeg, 0.0, [cA, band](auto z) {
      return cA(z) - sqrt(decltype(z)(band) + z);
    });
    r.scalar("band_below_cB", GoalKind::StrictNeg, 0.0, [cB, band](auto z) {
      return decltype(z)(band) + z - cB(z);
    });
    return low ? finish(9, 12) : finish(13, 65);
  }

  if (id == "L3.1.case66") {
    r.scalar("case66", GoalKind::StrictNeg, 0.0, [n](auto z) {
      using T = decltype(z);
      const T c5 = sqrt(T(2 * n));
      return T(1) + T(4) / T(n - 4) + sqrt((T(4) + T(2) * c5) / T(n)) -
             sqrt(T(3) * (T(1) - T(2) / T(n))) + z;
    });
    return finish(66);
  }

  if (id == "L3.1.disc") {
    r.scalar("discriminant", GoalKind::StrictNeg, 0.0,
             [cA, cB](auto z) { return cA(z) - sqrt(cB(z)); });
    return finish(9);
  }

  if (id == "L3.1.full") {
    // two-variable form W + p V - (3/2) p^2 < 0 on [0, x_split] x [0, 2 sqrt(2n)]
    r.box(e.x_split, 2.0 * std::sqrt(2.0 * n), [n](auto x, auto p) {
      using T = decltype(x);
      return f_W(n, x) + p * f_V(n, x) - T(3) / T(2) * sqr(p);
    });
    e.literal = nullptr;
    return finish(7);
  }

  if (id == "L3.1.vertexbound") {
    // vertex of the concave quadratic in p stays below the box height:
    // V(x)/3 < 2 sqrt(2n), certified as V - 6 sqrt(2n) < 0
    r.curve([n](auto x) {
      using T = decltype(x);
      return f_V(n, x) - T(6) * sqrt(T(2 * n));
    });
    r.tail([n](auto u) {
      using T = decltype(u);
      return f_uV(n, u) - T(6) * sqrt(T(2 * n)) * u;
    });
    e.literal = e.main_d;
    e.main_scale = [](double) { return 1.0; };
    e.tail_scale = [](double u) { return u; };
    return finish(7);
  }

  if (id == "L4.3.core") {
    // a - L <= (sqrt(2n) - 2), equality at x = 0
    r.curve([n](auto x) {
      using T = decltype(x);
      return T(2 * n - 4) / (f_a(n, x) + f_L(n, x)) - (sqrt(T(2 * n)) - T(2));
    });
    r.tail([n](auto u) {
      using T = decltype(u);
      return T(2 * n - 4) * u / (f_ua(n, u) + f_uL(n, u)) - (sqrt(T(2 * n)) - T(2));
    });
    e.goal = GoalKind::NonPosWithTol;
    e.tol = 1e-9;
    e.literal = [n](double x) {
      return f_a(n, x) - f_L(n, x) - (std::sqrt(2.0 * n) - 2.0);
    };
    e.main_scale = [](double) { return 1.0; };
    e.tail_scale = [](double) { return 1.0; };
    r.scalar("eq_at_zero", GoalKind::NonPosWithTol, 1e-12, [n](auto z) {
      using T = decltype(z);
      return abs(T(2 * n - 4) / (sqrt(T(2 * n)) + T(2)) - (sqrt(T(2 * n)) - T(2))) + z;
    });
    return finish(3);
  }

  if (id == "L5.4.core") {
    // alpha - L <= (n-2), equality at x = 0
    r.curve([n, m](auto x) {
      using T = decltype(x);
      const T t0 = sqrt(x + T(4 * m));
      return -T(2 * (n - 2)) * sqrt(x) / (sqrt(x) + t0);
    });
    r.tail([n, m](auto u) {
      using T = decltype(u);
      return -T(2 * (n - 2)) / (T(1) + f_uR(n, u));
    });
    e.goal = GoalKind::NonPosWithTol;
    e.tol = 1e-9;
    e.literal = [ctx, n](double x) {
      return alpha_value(ctx, x) - f_L(n, x) - (n - 2.0);
    };
    e.main_scale = [](double) { return 1.0; };
    e.tail_scale = [](double) { return 1.0; };
    r.scalar("eq_at_zero", GoalKind::NonPosWithTol, 1e-12, [n, ctx](auto z) {
      using T = decltype(z);
      return abs(T(alpha_value(ctx, 0.0)) - T(2) - T(n - 2)) + z;
    });
    return finish(3);
  }

  if (id == "L5.4.deltabound") {
    r.scalar("delta_n2_below_4", GoalKind::StrictNeg, 0.0, [n, conv](auto z) {
      using T = decltype(z);
      return f_delta<T>(n, conv) * T(n - 2) - T(4) + z;
    });
    return finish(4);
  }

  // ---- b-profile items -------------------------------------------------
  // e0 = 2 + delta(n-2), cb = (delta n^2 - 2 delta n + 2)/(2mn),
  // db = delta(n-2)/(2m), bring = e0 + cb x - db Rr

  if (id == "L5.2.i") {
    r.curve([n, m, conv](auto x) {
      using T = decltype(x);
      const T dl = f_delta<T>(n, conv);
      const T e0 = T(2) + dl * T(n - 2);
      const T cb = (dl * T(n * n - 2 * n) + T(2)) / T(2 * m * n);
      const T db = dl * T(n - 2) / T(2 * m);
      const T Rr = f_Rr(n, x);
      const T bring = e0 + cb * x - db * Rr;
      return T(4) * sqr(cb * Rr - db * (x + T(2 * m))) / (x + T(4 * m)) - bring;
    });
    r.tail([n, m, conv](auto u) {
      using T = decltype(u);
      const T dl = f_delta<T>(n, conv);
      const T e0 = T(2) + dl * T(n - 2);
      const T cb = (dl * T(n * n - 2 * n) + T(2)) / T(2 * m * n);
      const T db = dl * T(n - 2) / T(2 * m);
      const T uR = f_uR(n, u);
      return T(4) * sqr(cb * uR - db * (T(1) + T(2 * m) * u)) / (T(1) + T(4 * m) * u) -
             (e0 * u + cb - db * uR);
    });
    e.literal = [ctx, bprof](double x) {
      const double br = ring_value(bprof, ctx, x);
      const double d1 = ring_derivatives(bprof, ctx, x).first;
      return 4.0 * x * d1 * d1 / br - 1.0;
    };
    e.main_scale = [ctx, bprof](double x) { return ring_value(bprof, ctx, x); };
    e.tail_scale = [ctx, bprof](double u) { return u * ring_value(bprof, ctx, 1.0 / u); };
    return finish(4);
  }

  if (id == "L5.2.ii") {
    // 2x bring'' + bring' < 2(n-1)/(n(n+2)) under delta <= 2(2n-5)/(n^2-4);
    // cleared by Rr^3 / x^(3/2).
    r.curve([n, m, conv](auto x) {
      using T = decltype(x);
      const T dl = f_delta<T>(n, conv);
      const T cb = (dl * T(n * n - 2 * n) + T(2)) / T(2 * m * n);
      const T db = dl * T(n - 2) / T(2 * m);
      const T Kc = T(2 * m) / T(n * (n + 2));
      const T t0 = sqrt(x + T(4 * m));
      return (cb - Kc) * (x + T(4 * m)) * t0 - db * sqrt(x) * (x + T(6 * m));
    });
    r.tail([n, m, conv](auto u) {
      using T = decltype(u);
      const T dl = f_delta<T>(n, conv);
      const T cb = (dl * T(n * n - 2 * n) + T(2)) / T(2 * m * n);
      const T db = dl * T(n - 2) / T(2 * m);
      const T Kc = T(2 * m) / T(n * (n + 2));
      const T w = T(1) + T(4 * m) * u;
      return (cb - Kc) * w * sqrt(w) - db * (T(1) + T(6 * m) * u);
    });
    e.literal = [ctx, bprof, n, m](double x) {
      const auto d = ring_derivatives(bprof, ctx, x);
      return 2.0 * x * d.second + d.first - 2.0 * m / (double(n) * (n + 2));
    };
    e.main_scale = [m](double x) {
      return (x + 4.0 * m) * std::sqrt(x + 4.0 * m);
    };
    e.tail_scale = [m](double u) {
      const double w = 1.0 + 4.0 * m * u;
      return w * std::sqrt(w);
    };
    r.scalar("delta_hypothesis", GoalKind::StrictNeg, 0.0, [n, conv](auto z) {
      using T = decltype(z);
      return f_delta<T>(n, conv) - T(2 * (2 * n - 5)) / T(n * n - 4) + z;
    });
    return finish(4);
  }

  if (id == "L5.2.iii") {
    // c3 sqrt(x bring) + bring < x/n + n.  Exact product with (A+B):
    // q0 + rho (s1 x + s0), rho = -4m^2/(Rr + x + 2m).
    r.curve([n, m, conv](auto x) {
      using T = decltype(x);
      const T dl = f_delta<T>(n, conv);
      const T db = dl * T(n - 2) / T(2 * m);
      const T g0 = T(n - 2) * (T(1) - dl);
      const T s1 = -db * T(n - 2) * (T(1) - dl) / T(m);
      const T s0 = -T(2) * db * g0;
      const T q0 = -sqr(g0) - T(4 * m) * db * g0;
      const T rho = -T(4 * m * m) / (f_Rr(n, x) + x + T(2 * m));
      return q0 + rho * (s1 * x + s0);
    });
    r.tail([n, m, conv](auto u) {
      using T = decltype(u);
      const T dl = f_delta<T>(n, conv);
      const T db = dl * T(n - 2) / T(2 * m);
      const T g0 = T(n - 2) * (T(1) - dl);
      const T s1 = -db * T(n - 2) * (T(1) - dl) / T(m);
      const T s0 = -T(2) * db * g0;
      const T q0 = -sqr(g0) - T(4 * m) * db * g0;
      const T den = f_uR(n, u) + T(1) + T(2 * m) * u;
      return q0 + s1 * (-T(4 * m * m) / den) + (-T(4 * m * m) * u / den) * s0;
    });
    e.literal = [ctx, bprof, n](double x) {
      const double c3 = (n - 2) / std::sqrt(double(n) * (n - 1));
      const double br = ring_value(bprof, ctx, x);
      return c3 * std::sqrt(x * br) + br - x / n - n;
    };
    e.main_scale = [ctx, bprof, n](double x) {
      const double c3 = (n - 2) / std::sqrt(double(n) * (n - 1));
      const double br = ring_value(bprof, ctx, x);
      return c3 * std::sqrt(x * br) + x / n + n - br;
    };
    e.tail_scale = [ms = e.main_scale](double u) { return ms(1.0 / u); };
    return finish(4);
  }

  if (id == "L5.2.iv") {
    // bring (b - n) - x bring' (b + n) < -2(1-delta)(n-2); exact rewriting
    r.curve([n, m, conv](auto x) {
      using T = decltype(x);
      const T dl = f_delta<T>(n, conv);
      const T c = T(4) * dl * (T(1) - dl) * T((n - 2) * (n - 2) * m * m);
      const T den = (x + T(4 * m)) * (x + T(m)) + f_Rr(n, x) * (x + T(3 * m));
      return -c / den;
    });
    r.tail([n, m, conv](auto u) {
      using T = decltype(u);
      const T dl = f_delta<T>(n, conv);
      const T c = T(4) * dl * (T(1) - dl) * T((n - 2) * (n - 2) * m * m);
      const T den = (T(1) + T(4 * m) * u) * (T(1) + T(m) * u) + f_uR(n, u) * (T(1) + T(3 * m) * u);
      return -c / den;
    });
    e.literal = [ctx, bprof, n, conv](double x) {
      const double dl = delta_coefficient(n, conv);
      const double br = ring_value(bprof, ctx, x);
      const double d1 = ring_derivatives(bprof, ctx, x).first;
      const double b = br + x / n;
      return br * (b - n) - x * d1 * (b + n) + 2.0 * (1.0 - dl) * (n - 2.0);
    };
    e.main_scale = [](double) { return 1.0; };
    e.tail_scale = [](double u) { return 1.0 / (u * u); };
    return finish(4);
  }

  if (id == "L5.2.v") {
    // (x/m)(b+n) - (x/m + 2n)(bring + b - n - x bring') < -2x/m + 2n(n-4)
    r.curve([n, m, conv](auto x) {
      using T = decltype(x);
      const T dl = f_delta<T>(n, conv);
      const T db = dl * T(n - 2) / T(2 * m);
      const T Rr = f_Rr(n, x);
      const T t1 = x / (Rr + x + T(4 * m));
      const T t2 = T(n * m) * (T(3) * x + T(16 * m)) / (Rr * (x + T(6 * m)) + sqr(x + T(4 * m)));
      return -T(8 * m) * db * (t1 + t2);
    });
    r.tail([n, m, conv](auto u) {
      using T = decltype(u);
      const T dl = f_delta<T>(n, conv);
      const T db = dl * T(n - 2) / T(2 * m);
      const T uR = f_uR(n, u);
      const T t1 = T(1) / (uR + T(1) + T(4 * m) * u);
      const T t2 = T(n * m) * (T(3) * u + T(16 * m) * sqr(u)) /
                   (uR * (T(1) + T(6 * m) * u) + sqr(T(1) + T(4 * m) * u));
      return -T(8 * m) * db * (t1 + t2);
    });
    e.literal = [ctx, bprof, n, m](double x) {
      const double br = ring_value(bprof, ctx, x);
      const double d1 = ring_derivatives(bprof, ctx, x).first;
      const double b = br + x / n;
      return (x / m) * (b + n) - (x / m + 2.0 * n) * (br + b - n - x * d1) + 2.0 * x / m -
             2.0 * n * (n - 4.0);
    };
    e.main_scale = [](double) { return 1.0; };
    e.tail_scale = [](double) { return 1.0; };
    return finish(4);
  }

  if (id == "L5.2.vi") {
    // 2 bring - x/n + x bring' < 2(delta(n-2) + 2); cleared by Rr/x
    r.curve([n, m, conv](auto x) {
      using T = decltype(x);
      const T dl = f_delta<T>(n, conv);
      const T sx = sqrt(x);
      const T t0 = sqrt(x + T(4 * m));
      return -T(n - 4) * sx * t0 / T(n * m) - dl * T(n - 2) * (T(5) * t0 - sx) / (sx + t0);
    });
    if (n >= 5) {
      r.tail([n, m, conv](auto u) {
        using T = decltype(u);
        const T dl = f_delta<T>(n, conv);
        const T uR = f_uR(n, u);
        return -T(n - 4) * uR / T(n * m) - u * dl * T(n - 2) * (T(5) * uR - T(1)) / (T(1) + uR);
      });
      e.tail_scale = [n](double u) { return u * u * f_Rr(n, 1.0 / u); };
    } else {
      r.tail([n, m, conv](auto u) {
        using T = decltype(u);
        const T dl = f_delta<T>(n, conv);
        const T uR = f_uR(n, u);
        return -dl * T(n - 2) * (T(5) * uR - T(1)) / (T(1) + uR);
      });
      e.tail_scale = [n](double u) { return u * f_Rr(n, 1.0 / u); };
    }
    e.literal = [ctx, bprof, n, conv](double x) {
      const double dl = delta_coefficient(n, conv);
      const double br = ring_value(bprof, ctx, x);
      const double d1 = ring_derivatives(bprof, ctx, x).first;
      return 2.0 * br - x / n + x * d1 - 2.0 * (dl * (n - 2.0) + 2.0);
    };
    e.main_scale = [n](double x) { return f_Rr(n, x) / x; };
    return finish(4);
  }

  if (id == "P5.3.discriminant") {
    // y^2 + 7y + 4 - 3(n-2) <= 0 with y = delta(n-2); exact root for the
    // closed-form branch, strictly negative for the rational n >= 13 branch
    const bool rational_branch = (conv == DeltaConvention::Section5 && n >= 13);
    auto disc = [n, conv](auto z) {
      using T = decltype(z);
      const T y = f_delta<T>(n, conv) * T(n - 2);
      return sqr(y) + T(7) * y + T(4) - T(3 * (n - 2)) + z;
    };
    if (rational_branch) {
      r.scalar("discriminant_strict", GoalKind::StrictNeg, 0.0, disc);
    } else {
      r.scalar("discriminant_nonpos", GoalKind::NonPosWithTol, 1e-9, disc);
      r.scalar("discriminant_root", GoalKind::NonPosWithTol, 1e-9,
               [disc](auto z) { return -disc(z); });
    }
    return finish(4);
  }

  throw std::invalid_argument("unknown expression id: " + id);
}

}  // namespace pinchflow
