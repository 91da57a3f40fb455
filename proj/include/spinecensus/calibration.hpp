#pragma once

#include <string>
#include <vector>

#include "spinecensus/convention.hpp"

namespace spinecensus {

// Result of the convention search.  `chosen` is the lexicographically least
// member of the unique surviving behaviour class.
struct CalibrationReport {
  Convention chosen;
  int structural_survivors = 0;  // (table, endpoint-order) pairs whose machine has the right shape
  int full_survivors = 0;        // pairs passing every criterion
  int behavior_classes = 0;      // distinct trace behaviours among full survivors
  int rotation_candidates = 0;   // colour actions of chain reversal that preserve face counts
  int mirror_candidates = 0;     // port reflections realizing orientation reversal
};

// Searches the candidate tables (crossed with the 16 endpoint-order choices)
// for conventions under which
//   * the derived word machine has the expected 3-state shape: 6/4/6 class
//     transitions, an XXYY self-loop, accepts {XXYY, XYXY}, absorbing FAIL;
//   * machine acceptance equals single-facedness by full tracing, and end
//     colours 2 always force extra faces (exhaustive over short chains);
//   * every single-face chain has the expected relation vector (entries in
//     {-3,-1,1,3}, some +-1, gcd 1);
//   * the beta/gamma swap, chain reversal (for some colour action) and the
//     mirror reflection all preserve face counts;
// and requires all survivors to behave identically on the trace battery.
//
// Throws std::runtime_error("no consistent convention") when nothing
// survives and ("ambiguous convention") when survivors disagree.
CalibrationReport calibrate(const std::vector<VertexModel>& candidates);

// Same over all 1296 structurally valid tables.
CalibrationReport calibrate();

// Re-checks every criterion for the frozen active convention; throws on any
// violation.  Cheap enough for the test suite.
void verify_active_convention();

// C++ initializer text for a convention (used to freeze the search result).
std::string convention_source(const Convention& conv);

}  // namespace spinecensus
