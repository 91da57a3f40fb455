#include "spinecensus/invariants.hpp"

#include <cmath>
#include <stdexcept>

#include "spinecensus/homology.hpp"
#include "spinecensus/quantum.hpp"
#include "spinecensus/volume.hpp"

namespace spinecensus {

InvariantReport invariant_report(const OpenChainParams& params, const std::vector<int>& tv_levels,
                                 const Convention& conv) {
  const int n = params.n();
  const OGraph g = make_open_chain(params, conv);
  const AbelianGroup h1 = homology_h1(g, conv);
  if (h1.rank != n || !h1.torsion.empty())
    throw std::runtime_error("invariant_report: first homology is not Z^n; tracer inconsistency");

  InvariantReport rep;
  rep.n = n;
  rep.volume = manifold_volume(n);
  rep.h1_rank = h1.rank;
  rep.h1_torsion = h1.torsion;
  rep.boundary_genus = n;
  rep.heegaard_genus = n + 1;
  rep.complexity = n;
  for (const int r : tv_levels) rep.tv[r] = turaev_viro(n, QuantumContext::make(r));
  return rep;
}

double turaev_viro_from_trace(const TraceResult& t, int r) {
  if (t.face_count != 1)
    throw std::domain_error("turaev_viro_from_trace: needs a one-faced polyhedron");
  const QuantumContext ctx = QuantumContext::make(r);
  // One face, so a colouring is a single colour h; it is admissible around an
  // edge iff the triple (h,h,h) is, i.e. 3h <= r-2.  Each edge must indeed
  // see the single face three times.
  for (const auto& inc : t.incidence)
    for (const auto& entry : inc)
      if (entry.face != 0)
        throw std::domain_error("turaev_viro_from_trace: edge not incident to the single face");
  double total = 0.0;
  for (int h = 0; 3 * h <= ctx.r - 2; ++h) {
    const double sixj = quantum_6j_all(h, ctx);
    const double dim = quantum_integer(2 * h + 1, ctx);
    // one factor 6j * [2h+1]^-1 per vertex, one factor [2h+1] for the face
    total += std::pow(sixj, t.vertex_count) * std::pow(dim, 1 - t.vertex_count);
  }
  return total;
}

}  // namespace spinecensus
