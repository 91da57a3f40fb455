#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "spinecensus/convention.hpp"
#include "spinecensus/ograph.hpp"

namespace spinecensus {

// One of the three parallel strands on an edge, seen from one endpoint.
// Slot ends are numbered edge*6 + end*3 + slot; an o-graph with n vertices
// has 2n edges and therefore 12n slot ends.
struct StrandSlot {
  std::int32_t edge = 0;
  std::int32_t end = 0;   // 0 = endpoint a, 1 = endpoint b
  std::int32_t slot = 0;  // 0..2

  static StrandSlot from_id(int id) { return {id / 6, (id % 6) / 3, id % 3}; }
  int id() const { return edge * 6 + end * 3 + slot; }

  friend bool operator==(const StrandSlot&, const StrandSlot&) = default;
};

// One directed strand traversal in a face walk: departs from `from` and
// arrives at the strand's other end.  sign is +1 when the edge is run from
// endpoint a to endpoint b, -1 the other way.
struct WalkStep {
  StrandSlot from;
  int sign = 1;

  friend bool operator==(const WalkStep&, const WalkStep&) = default;
};

// The faces of the polyhedron defined by an o-graph.  Faces are the cycles
// of the pairing that joins slot ends across edges (slot j at end a meets
// slot j+colour at end b) and within vertices (the germ table of the
// convention).  Each strand is traversed exactly once over all walks, so the
// walks carry 3 * edge_count steps in total.
struct TraceResult {
  int vertex_count = 0;
  int face_count = 0;
  int euler_characteristic = 0;  // face_count - vertex_count
  std::vector<std::vector<WalkStep>> faces;

  // incidence[e] lists, per traversal of edge e, the face index and sign;
  // always exactly three entries per edge.
  struct Incidence {
    std::int32_t face = 0;
    std::int32_t sign = 0;
  };
  std::vector<std::array<Incidence, 3>> incidence;
};

TraceResult trace_faces(const OGraph& g, const Convention& conv = active_convention());

bool is_single_face(const OGraph& g, const Convention& conv = active_convention());

// Face relations over a cotree of the 4-valent graph.  The spanning tree is
// breadth-first from vertex 0 with edges taken in index order; for every
// remaining edge each face contributes the signed count of its traversals.
// For a single-face o-graph on the open chain this is the relation vector
// r = (r_1, ..., r_{n+1}).  Throws on disconnected graphs.
struct BoundaryData {
  std::vector<int> cotree_edges;
  std::vector<std::vector<long long>> relations;  // one row per face
};

BoundaryData boundary_word(const TraceResult& t, const OGraph& g);

// ---------------------------------------------------------------------------
// Partial tracing across a chain cut.
//
// Cutting a chain between consecutive vertices severs the two parallel edges
// there; six strand slots cross the cut (three per edge, measured at the
// out-ports 0 and 3 of the left vertex: point s = slot s of the upper edge,
// point 3+s = slot s of the lower edge).  The part of the polyhedron on one
// side pairs those six points by partial face arcs, and any face that closed
// up strictly inside is counted in `closed`.  This matching is the whole
// interface between the two sides, which is what makes the single-face
// condition a finite-state property of the colour word.
// ---------------------------------------------------------------------------
struct CutState {
  std::array<std::uint8_t, 6> match{};  // involution on 0..5
  std::uint8_t closed = 0;              // faces closed on the traced side

  std::uint32_t key() const {
    std::uint32_t k = closed;
    for (int i = 0; i < 6; ++i) k = k * 8 + match[static_cast<std::size_t>(i)];
    return k;
  }
  friend bool operator==(const CutState&, const CutState&) = default;
};

// State at the cut just right of the first vertex and its loop.
CutState initial_cut_state(ColorZ3 alpha, const Convention& conv = active_convention());

// Extends the traced side across one letter (the two coloured edges) and the
// next vertex; the new cut sits just right of that vertex.
CutState transfer(const CutState& state, Letter letter,
                  const Convention& conv = active_convention());

// Faces created when the final loop (colour delta) closes the chain off from
// the given cut state, *excluding* faces already closed (state.closed).
int closing_cycles(const CutState& state, ColorZ3 delta,
                   const Convention& conv = active_convention());

// Total face count of the open chain evaluated through the cut machinery;
// must agree with trace_faces(make_open_chain(params)).face_count.
int open_chain_face_count_via_cuts(const OpenChainParams& params,
                                   const Convention& conv = active_convention());

}  // namespace spinecensus
