// Development helper: runs the full convention search and prints the frozen
// initializer plus the derived machine.
#include <iostream>

#include "spinecensus/automaton.hpp"
#include "spinecensus/calibration.hpp"

int main() {
  using namespace spinecensus;
  try {
    const CalibrationReport r = calibrate();
    std::cout << "structural survivors: " << r.structural_survivors << "\n"
              << "full survivors:       " << r.full_survivors << "\n"
              << "behavior classes:     " << r.behavior_classes << "\n"
              << "rotation candidates:  " << r.rotation_candidates << "\n"
              << "mirror candidates:    " << r.mirror_candidates << "\n\n"
              << convention_source(r.chosen) << "\n\n"
              << derive_fsa(r.chosen).format();
  } catch (const std::exception& e) {
    std::cout << "calibration failed: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
