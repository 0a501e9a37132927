#include "core/verify.hpp"

#include <chrono>

#include <json.hpp>

namespace pinchflow {

namespace {

std::vector<std::string> items_for(const std::string& lemma_id, int n, DeltaConvention conv) {
  if (lemma_id == "L2.3")
    return {"L2.3.i", "L2.3.ii", "L2.3.iii", "L2.3.iv", "L2.3.v", "L2.3.vi"};
  if (lemma_id == "L5.2")
    return {"L5.2.i", "L5.2.ii", "L5.2.iii", "L5.2.iv", "L5.2.v", "L5.2.vi"};
  if (lemma_id == "L3.1") {
    std::vector<std::string> ids = {"L3.1.delta", "L3.1.vertexbound", "L3.1.full"};
    if (n >= 8) ids.push_back("L3.1.reduced");
    if (n == 8) ids.push_back("L3.1.n8cubic");
    if (n >= 9 && n <= 12) ids.push_back("L3.1.band9_12");
    if (n >= 13 && n <= 65) ids.push_back("L3.1.band13_65");
    if (n >= 66) ids.push_back("L3.1.case66");
    if (n >= 9) ids.push_back("L3.1.disc");
    return ids;
  }
  if (lemma_id == "L4.3") return {"L4.3.core"};
  if (lemma_id == "L5.4") return {"L5.4.core", "L5.4.deltabound"};
  if (lemma_id == "P5.3") return {"P5.3.discriminant"};
  if (expression_exists(lemma_id)) return {lemma_id};
  (void)conv;
  throw std::invalid_argument("unknown lemma id: " + lemma_id);
}

}  // namespace

VerifyReport verify_lemma(const std::string& lemma_id, int n, DeltaConvention conv,
                          const ProveBudget& budget) {
  const auto t0 = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.lemma = lemma_id;
  rep.n = n;
  rep.conv = conv;
  for (const auto& id : items_for(lemma_id, n, conv)) {
    VerifyItem item;
    item.id = id;
    item.result = prove_nonpositive(id, n, conv, budget);
    rep.items.push_back(std::move(item));
  }
  const auto t1 = std::chrono::steady_clock::now();
  rep.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return rep;
}

std::string report_to_json(const VerifyReport& report) {
  nlohmann::json j;
  j["lemma"] = report.lemma;
  j["n"] = report.n;
  j["delta_convention"] = report.conv == DeltaConvention::Intro ? "intro" : "section5";
  j["items"] = nlohmann::json::array();
  for (const auto& it : report.items) {
    nlohmann::json ji;
    ji["id"] = it.id;
    ji["verified"] = it.result.verified;
    ji["cells"] = it.result.cells_explored;
    ji["max_upper_bound"] = it.result.max_upper_bound;
    if (it.result.counterexample_box) {
      ji["counterexample"] = {it.result.counterexample_box->lo, it.result.counterexample_box->hi};
    }
    if (it.result.inconclusive) ji["inconclusive"] = true;
    j["items"].push_back(ji);
  }
  j["wall_time_ms"] = report.wall_time_ms;
  return j.dump(2);
}

}  // namespace pinchflow
