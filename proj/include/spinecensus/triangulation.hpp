#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "spinecensus/convention.hpp"
#include "spinecensus/ograph.hpp"

namespace spinecensus {

// Ideal triangulation dual to the polyhedron of an o-graph: one tetrahedron
// per vertex, faces labelled by ports, one face pairing per edge.  Corners
// of face f are the other three vertex labels of the tetrahedron, listed in
// increasing order and reindexed 0..2; a gluing maps corner i of face_a to
// corner perm[i] of face_b.
struct GluingTable {
  struct Gluing {
    std::int32_t tet_a = 0;
    std::int32_t face_a = 0;
    std::int32_t tet_b = 0;
    std::int32_t face_b = 0;
    std::array<std::uint8_t, 3> perm{};

    friend bool operator==(const Gluing&, const Gluing&) = default;
  };

  int tet_count = 0;
  std::vector<Gluing> gluings;

  friend bool operator==(const GluingTable&, const GluingTable&) = default;
};

// Dual triangulation of the o-graph's polyhedron.  The gluing permutations
// are read off the strand slots; a side of a face triangle is the side
// opposite the corner its germ points at.  Checks that the edge orbit count
// of the result equals the face count of the traced polyhedron and throws
// std::runtime_error otherwise.
GluingTable export_gluing_table(const OGraph& g, const Convention& conv = active_convention());

// Text form:
//   triangulation <n>
//   glue <tet_a> <face_a> <tet_b> <face_b> <perm>
// with perm written as three digits (image of corner 0, 1, 2).
std::string serialize_gluing_table(const GluingTable& t);
GluingTable parse_gluing_table(std::istream& in);
GluingTable parse_gluing_table(const std::string& text);

// Number of tetrahedron-edge orbits under the face gluings; this equals the
// face count of the dual polyhedron.
int edge_orbit_count(const GluingTable& t);

// Canonical encoding of the triangulation up to orientation-preserving
// combinatorial isomorphism (even relabelings of every tetrahedron): the
// least breadth-first encoding over all even-labelled starts.  Two o-graphs
// define the same oriented polyhedron exactly when their exports have equal
// signatures.
std::string triangulation_signature(const GluingTable& t);

}  // namespace spinecensus
