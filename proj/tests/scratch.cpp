#include <cstdio>
#include <string>
#include "core/prover.hpp"
#include "core/verify.hpp"
using namespace pinchflow;
int main() {
  // all L2.3 and L5.2 items over their acceptance ranges + L3.1 for n=7..50
  long total_cells = 0;
  int fails = 0;
  for (int n = 3; n <= 30; ++n) {
    auto rep = verify_lemma("L2.3", n);
    total_cells += 0;
    for (auto& it : rep.items) {
      total_cells += it.result.cells_explored;
      if (!it.result.verified) { printf("FAIL L2.3 n=%d %s (inconcl=%d minw=%.2e)\n", n, it.id.c_str(), (int)it.result.inconclusive, it.result.min_cell_width); ++fails; }
    }
  }
  for (int n = 4; n <= 30; ++n) {
    auto rep = verify_lemma("L5.2", n, DeltaConvention::Section5);
    for (auto& it : rep.items) {
      total_cells += it.result.cells_explored;
      if (!it.result.verified) { printf("FAIL L5.2 n=%d %s (inconcl=%d)\n", n, it.id.c_str(), (int)it.result.inconclusive); ++fails; }
    }
  }
  for (int n = 7; n <= 50; ++n) {
    auto rep = verify_lemma("L3.1", n);
    for (auto& it : rep.items) {
      total_cells += it.result.cells_explored;
      if (!it.result.verified) { printf("FAIL L3.1 n=%d %s (inconcl=%d maxub=%.3g)\n", n, it.id.c_str(), (int)it.result.inconclusive, it.result.max_upper_bound); ++fails; }
    }
  }
  for (int n = 4; n <= 30; ++n) {
    for (auto conv : {DeltaConvention::Intro, DeltaConvention::Section5}) {
      auto pr = prove_nonpositive("P5.3.discriminant", n, conv);
      total_cells += pr.cells_explored;
      if (!pr.verified) { printf("FAIL P5.3 n=%d conv=%d\n", n, (int)conv); ++fails; }
    }
    auto r43 = verify_lemma("L4.3", n); auto r54 = verify_lemma("L5.4", n);
    for (auto* r : {&r43, &r54}) for (auto& it : r->items) {
      total_cells += it.result.cells_explored;
      if (!it.result.verified) { printf("FAIL %s n=%d %s\n", r->lemma.c_str(), n, it.id.c_str()); ++fails; }
    }
  }
  printf("total cells=%ld fails=%d\n", total_cells, fails);
  return fails != 0;
}
