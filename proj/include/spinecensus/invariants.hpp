#pragma once

#include <map>
#include <vector>

#include "spinecensus/convention.hpp"
#include "spinecensus/ograph.hpp"
#include "spinecensus/tracer.hpp"

namespace spinecensus {

// Everything the classical invariants say about a census member.  All of it
// depends on n alone except that h1 is recomputed from the actual o-graph
// and cross-checked.
struct InvariantReport {
  int n = 0;
  double volume = 0.0;
  int h1_rank = 0;
  std::vector<long long> h1_torsion;
  int boundary_genus = 0;   // n
  int heegaard_genus = 0;   // n + 1
  int complexity = 0;       // n
  std::map<int, double> tv;  // level r -> invariant at q0 = exp(i pi / r)
};

// Assembles the report for a single-face open-chain member.  Throws
// std::runtime_error if the computed homology is not Z^n torsion-free (that
// signals a tracer or convention bug, not bad input).
InvariantReport invariant_report(const OpenChainParams& params,
                                 const std::vector<int>& tv_levels,
                                 const Convention& conv = active_convention());

// The level-r invariant evaluated from traced spine data (vertex count and
// the per-edge incidence of the single face) instead of from n directly.
// Requires a one-faced trace.
double turaev_viro_from_trace(const TraceResult& t, int r);

}  // namespace spinecensus
