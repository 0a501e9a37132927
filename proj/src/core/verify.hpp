#pragma once

#include <string>
#include <vector>

#include "core/prover.hpp"

namespace pinchflow {

struct VerifyItem {
  std::string id;
  ProofResult result;
};

struct VerifyReport {
  std::string lemma;
  int n = 0;
  DeltaConvention conv = DeltaConvention::Section5;
  std::vector<VerifyItem> items;
  double wall_time_ms = 0.0;

  bool all_verified() const {
    for (const auto& it : items)
      if (!it.result.verified) return false;
    return !items.empty();
  }
};

// Run every registered sub-inequality of `lemma_id` at dimension n.  Accepts
// both aggregate ids ("L2.3", "L3.1", "L5.2", "L4.3", "L5.4", "P5.3") and
// individual catalog ids ("L2.3.iv", "L3.1.delta", ...).
VerifyReport verify_lemma(const std::string& lemma_id, int n,
                          DeltaConvention conv = DeltaConvention::Section5,
                          const ProveBudget& budget = {});

// { lemma, n, items: [{id, verified, cells, max_upper_bound, counterexample?}],
//   wall_time_ms }
std::string report_to_json(const VerifyReport& report);

}  // namespace pinchflow
