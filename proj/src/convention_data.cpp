#include "spinecensus/convention.hpp"

namespace spinecensus {

// Frozen result of the convention search (see calibration.hpp); regenerated
// and cross-checked by the calibration tests.
const Convention& active_convention() {
  // Germ structure: slot s of port p pairs with slot 2-s of port p+1+s
  // (ports mod 4).  The endpoint orders and the rotation/mirror choices are
  // the survivors of the search; see tests/test_calibration.cpp.
  static const Convention conv = Convention{
      VertexModel{
          {{{{1, 2, 3}}, {{2, 3, 0}}, {{3, 0, 1}}, {{0, 1, 2}}}},
          {{{{2, 1, 0}}, {{2, 1, 0}}, {{2, 1, 0}}, {{2, 1, 0}}}},
      },
      ChainDirs{true, false, false, true},
      0,
      RotationAction{true, AffineZ3{1, 0}, AffineZ3{1, 0}},
  };
  return conv;
}

}  // namespace spinecensus
