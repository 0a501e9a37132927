#include "core/prover.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace pinchflow {

namespace {

struct Cell {
  double lo, hi;
};

struct Cell2 {
  double xlo, xhi, plo, phi;
};

// Adaptive bisection of [lo0, hi0].  `map` sends the bisected coordinate to
// the expression's x-domain interval, `eval` bounds the expression there.
// Cells are processed in a fixed DFS order (left child first), so the result
// and the cell count are deterministic.
void prove_1d(const std::function<Interval(const Interval&)>& eval,
              const std::function<Interval(const Cell&)>& map, double lo0, double hi0,
              bool strict, double tol, const ProveBudget& budget, ProofResult& out) {
  std::vector<Cell> stack;
  stack.push_back({lo0, hi0});
  while (!stack.empty()) {
    if (out.cells_explored >= budget.max_cells) {
      out.verified = false;
      out.inconclusive = true;
      return;
    }
    Cell c = stack.back();
    stack.pop_back();
    ++out.cells_explored;
    const double w = c.hi - c.lo;
    out.min_cell_width = std::min(out.min_cell_width, w);

    bool eval_ok = true;
    Interval F(0.0);
    try {
      F = eval(map(c));
    } catch (const IntervalDomainError&) {
      eval_ok = false;
    }

    if (eval_ok && (strict ? F.hi < 0.0 : F.hi <= tol)) {
      out.max_upper_bound = std::max(out.max_upper_bound, F.hi);
      continue;
    }
    if (eval_ok && F.lo > tol) {
      // definite violation somewhere in this cell; narrow it for the report
      Cell bad = c;
      for (int i = 0; i < 60 && bad.hi - bad.lo > 1e-9; ++i) {
        const double mid = 0.5 * (bad.lo + bad.hi);
        bool taken = false;
        for (const Cell& half : {Cell{bad.lo, mid}, Cell{mid, bad.hi}}) {
          try {
            if (eval(map(half)).lo > tol) {
              bad = half;
              taken = true;
              break;
            }
          } catch (const IntervalDomainError&) {
          }
        }
        if (!taken) break;
      }
      out.verified = false;
      out.counterexample_box = map(bad);
      return;
    }
    if (w <= budget.min_width) {
      out.verified = false;
      out.inconclusive = true;
      return;
    }
    const double mid = 0.5 * (c.lo + c.hi);
    stack.push_back({mid, c.hi});
    stack.push_back({c.lo, mid});
  }
}

}  // namespace

ProofResult prove_nonpositive(const LemmaExpression& expr, const ProveBudget& budget) {
  ProofResult out;
  out.verified = true;
  const bool strict = expr.goal == GoalKind::StrictNeg;
  const double tol = strict ? 0.0 : expr.tol;

  for (const auto& s : expr.scalars) {
    ++out.cells_explored;
    Interval v(0.0);
    bool ok = true;
    try {
      v = s.eval_i();
    } catch (const IntervalDomainError&) {
      ok = false;
    }
    const double lim = s.goal == GoalKind::NonPosWithTol ? s.tol : 0.0;
    const bool pass = ok && (s.goal == GoalKind::StrictNeg ? v.hi < 0.0 : v.hi <= lim);
    if (!pass) {
      out.verified = false;
      if (ok && v.lo > lim)
        out.counterexample_box = v;
      else
        out.inconclusive = true;
      return out;
    }
    out.max_upper_bound = std::max(out.max_upper_bound, v.hi);
  }

  if (expr.has_curve && out.verified) {
    const double scale = 4.0 * (expr.n - 1);
    const double t1 = expr.x_split / (scale + expr.x_split);
    auto map_main = [&](const Cell& c) {
      return Interval(scale * c.lo / (1.0 - c.lo), scale * c.hi / (1.0 - c.hi));
    };
    prove_1d([&](const Interval& x) { return expr.main_i(x); }, map_main, 0.0, t1, strict,
             tol, budget, out);
    if (!out.verified) return out;

    auto map_tail = [](const Cell& c) { return Interval(c.lo, c.hi); };
    prove_1d([&](const Interval& u) { return expr.tail_i(u); }, map_tail, 0.0, expr.u0,
             strict, tol, budget, out);
    if (!out.verified) {
      if (out.counterexample_box) {
        const Interval u = *out.counterexample_box;
        const double xhi = u.lo > 0.0 ? 1.0 / u.lo : 1e300;
        const double xlo = u.hi > 0.0 ? 1.0 / u.hi : 1e300;
        out.counterexample_box = Interval(std::min(xlo, xhi), std::max(xlo, xhi));
      }
      return out;
    }
  }

  if (expr.has_box && out.verified) {
    std::vector<Cell2> stack;
    stack.push_back({0.0, expr.box_x_hi, 0.0, expr.box_p_hi});
    const double aspect = expr.box_x_hi / std::max(expr.box_p_hi, 1e-300);
    while (!stack.empty()) {
      if (out.cells_explored >= budget.max_cells) {
        out.verified = false;
        out.inconclusive = true;
        return out;
      }
      Cell2 c = stack.back();
      stack.pop_back();
      ++out.cells_explored;
      const double wx = c.xhi - c.xlo, wp = c.phi - c.plo;
      out.min_cell_width = std::min(out.min_cell_width, std::max(wx, wp));
      bool ok = true;
      Interval F(0.0);
      try {
        F = expr.box_i(Interval(c.xlo, c.xhi), Interval(c.plo, c.phi));
      } catch (const IntervalDomainError&) {
        ok = false;
      }
      if (ok && (strict ? F.hi < 0.0 : F.hi <= tol)) {
        out.max_upper_bound = std::max(out.max_upper_bound, F.hi);
        continue;
      }
      if (ok && F.lo > tol) {
        out.verified = false;
        out.counterexample_box = Interval(c.xlo, c.xhi);
        return out;
      }
      if (std::max(wx, wp) <= budget.min_width) {
        out.verified = false;
        out.inconclusive = true;
        return out;
      }
      if (wx >= wp * aspect) {
        const double mid = 0.5 * (c.xlo + c.xhi);
        stack.push_back({mid, c.xhi, c.plo, c.phi});
        stack.push_back({c.xlo, mid, c.plo, c.phi});
      } else {
        const double mid = 0.5 * (c.plo + c.phi);
        stack.push_back({c.xlo, c.xhi, mid, c.phi});
        stack.push_back({c.xlo, c.xhi, c.plo, mid});
      }
    }
  }

  return out;
}

ProofResult prove_nonpositive(const std::string& id, int n, DeltaConvention conv,
                              const ProveBudget& budget) {
  return prove_nonpositive(make_expression(id, n, conv), budget);
}

ExtremumReport find_extremum(const std::function<double(double)>& f, ExtremumMode mode,
                             const Interval& domain, double tol) {
  if (!(domain.lo <= domain.hi)) throw std::invalid_argument("find_extremum: empty domain");
  if (!(tol > 0.0)) throw std::invalid_argument("find_extremum: tol must be > 0");
  const double sign = mode == ExtremumMode::Max ? -1.0 : 1.0;
  auto g = [&](double x) { return sign * f(x); };

  const int grid = 4096;
  double best_x = domain.lo, best_v = g(domain.lo);
  for (int i = 1; i <= grid; ++i) {
    const double x = domain.lo + (domain.hi - domain.lo) * i / grid;
    const double v = g(x);
    if (v < best_v) {
      best_v = v;
      best_x = x;
    }
  }
  const double h = (domain.hi - domain.lo) / grid;
  double lo = std::max(domain.lo, best_x - h);
  double hi = std::min(domain.hi, best_x + h);

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - invphi * (hi - lo), x2 = lo + invphi * (hi - lo);
  double f1 = g(x1), f2 = g(x2);
  while (hi - lo > tol * 1e-3 + 1e-15 * (1.0 + std::fabs(lo))) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - invphi * (hi - lo);
      f1 = g(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + invphi * (hi - lo);
      f2 = g(x2);
    }
  }
  const double xs = 0.5 * (lo + hi);
  ExtremumReport rep;
  rep.x_star = xs;
  rep.f_star = f(xs);
  rep.mode = mode;
  rep.refinement_tolerance = tol;
  return rep;
}

ExtremumReport find_extremum(const std::string& expr_id, int n, ExtremumMode mode,
                             const Interval& domain, double tol, DeltaConvention conv) {
  const LemmaExpression e = make_expression(expr_id, n, conv);
  if (!e.display) throw std::invalid_argument("expression has no point-evaluable form: " + expr_id);
  return find_extremum(e.display, mode, domain, tol);
}

}  // namespace pinchflow
