#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "core/interval.hpp"
#include "core/thresholds.hpp"

namespace pinchflow {

enum class GoalKind {
  StrictNeg,     // certified as: interval upper bound < 0 on every cell
  NonPosWithTol  // certified as: interval upper bound <= tol (goals with an
                 // exact equality point, e.g. at x = 0)
};

// A 0-dimensional sub-goal: a single constant inequality evaluated once.
struct ScalarGoal {
  std::string label;
  GoalKind goal = GoalKind::StrictNeg;
  double tol = 0.0;
  std::function<Interval()> eval_i;
  std::function<double()> eval_d;
};

// One entry of the inequality catalog, instantiated at a dimension n.
//
// The curve content represents a claim f(x) <= 0 (or < 0) for all x >= 0,
// with kbar normalized to 1.  `main` covers x in [0, x_split] (bisected in
// the compactified coordinate t, x = 4(n-1) t/(1-t)); `tail` is the same
// claim rewritten in u = 1/x, valid on [0, u0], u0 = 1/x_split, finite and
// negative at u = 0.  `literal` is the naive transcription of the claim;
// main/tail equal literal times the positive weights main_scale/tail_scale,
// which the transcription tests check pointwise.
struct LemmaExpression {
  std::string id;
  int n = 0;
  DeltaConvention conv = DeltaConvention::Section5;
  int arity = 1;
  int n_min = 2;
  int n_max = 1 << 28;

  GoalKind goal = GoalKind::StrictNeg;
  double tol = 0.0;

  bool has_curve = false;
  double x_split = 0.0;
  double u0 = 0.0;
  std::function<Interval(const Interval&)> main_i, tail_i;
  std::function<double(double)> main_d, tail_d;

  bool has_box = false;  // 2-variable form on [0, box_x_hi] x [0, box_p_hi]
  double box_x_hi = 0.0, box_p_hi = 0.0;
  std::function<Interval(const Interval&, const Interval&)> box_i;
  std::function<double(double, double)> box_d;

  std::vector<ScalarGoal> scalars;

  std::function<double(double)> display;  // the quantity whose extrema are reported
  std::function<double(double)> literal;
  std::function<double(double)> main_scale;
  std::function<double(double)> tail_scale;
};

// Build the registered expression `id` at dimension n.  Throws
// std::invalid_argument for unknown ids and std::domain_error when n is
// outside the expression's validity range.
LemmaExpression make_expression(const std::string& id, int n,
                                DeltaConvention conv = DeltaConvention::Section5);

bool expression_exists(const std::string& id);
std::vector<std::string> expression_ids();

}  // namespace pinchflow
