#pragma once

#include <functional>
#include <optional>
#include <string>

#include "core/expressions.hpp"
#include "core/interval.hpp"

namespace pinchflow {

struct ProveBudget {
  long max_cells = 400000;     // per sub-domain (main curve, tail, box)
  double min_width = 1e-12;    // in the bisected coordinate (t or u)
};

struct ProofResult {
  bool verified = false;
  long cells_explored = 0;
  double min_cell_width = INFINITY;
  std::optional<Interval> counterexample_box;  // in the x (or u-mapped x) domain
  double max_upper_bound = -INFINITY;          // largest upper bound over accepted cells
  bool inconclusive = false;                   // budget exhausted, not refuted
};

// Certify that the registered expression is nonpositive (strictly negative,
// or <= tol for goals with an exact equality point) over its whole domain.
// The main curve is bisected adaptively in the compactified coordinate
// t with x = 4(n-1) t/(1-t); the tail is certified separately in u = 1/x.
ProofResult prove_nonpositive(const LemmaExpression& expr, const ProveBudget& budget = {});

ProofResult prove_nonpositive(const std::string& id, int n,
                              DeltaConvention conv = DeltaConvention::Section5,
                              const ProveBudget& budget = {});

enum class ExtremumMode { Min, Max };

struct ExtremumReport {
  double x_star = 0.0;
  double f_star = 0.0;
  ExtremumMode mode = ExtremumMode::Min;
  double refinement_tolerance = 0.0;
};

// Coarse grid scan followed by golden-section refinement.
ExtremumReport find_extremum(const std::function<double(double)>& f, ExtremumMode mode,
                             const Interval& domain, double tol);

ExtremumReport find_extremum(const std::string& expr_id, int n, ExtremumMode mode,
                             const Interval& domain, double tol,
                             DeltaConvention conv = DeltaConvention::Section5);

}  // namespace pinchflow
