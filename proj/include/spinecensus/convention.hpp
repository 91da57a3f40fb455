#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spinecensus/color.hpp"

namespace spinecensus {

// Pairing table of the twelve strand slots incident to an o-graph vertex.
//
// A vertex has four ports (0..3, counterclockwise, overstrand on {0,2}) and
// each port carries three strand slots.  The dual tetrahedron picture pairs
// the twelve (port, slot) ends into six face germs, one per unordered pair of
// ports, and each port's three slots go to the three other ports.  The table
// below is exactly that pairing:
//
//   germ_port[p][s] = the port paired with slot s of port p
//   germ_slot[p][s] = the slot used at that port
//
// The structural shape is forced; the particular slot assignment is a
// convention of the encoding and is fixed by calibrate() in calibration.hpp.
struct VertexModel {
  std::array<std::array<std::uint8_t, 3>, 4> germ_port{};
  std::array<std::array<std::uint8_t, 3>, 4> germ_slot{};

  // Builds the table from four row permutations: row_perm[p][s] is the port
  // that slot s of port p pairs with.  Returns nothing if any row is not a
  // bijection onto the three other ports.
  static std::optional<VertexModel> from_row_perms(
      const std::array<std::array<std::uint8_t, 3>, 4>& row_perm);

  // Structural invariants: an involution on the 12 slot ends, realizing each
  // unordered port pair exactly once.
  bool valid() const;

  // All 1296 structurally valid tables (6^4 row-permutation choices).
  static std::vector<VertexModel> all_models();

  // 12-character encoding of the row permutations, for freezing and reports.
  std::string encode() const;

  friend bool operator==(const VertexModel& a, const VertexModel& b) {
    return a.germ_port == b.germ_port && a.germ_slot == b.germ_slot;
  }
};

// Endpoint-order conventions used by the chain constructors.  The strand
// twist of an edge is directed (slot j at the first endpoint meets slot j+c
// at the second), so which endpoint is listed first matters.
struct ChainDirs {
  bool first_loop_fwd = true;  // loop at the first vertex: (v0,1) then (v0,2)
  bool last_loop_fwd = true;   // loop at the last vertex: (v,0) then (v,3)
  bool upper_fwd = true;       // upper chain edges listed left-to-right
  bool lower_fwd = true;       // lower chain edges listed left-to-right

  std::uint8_t bits() const {
    return static_cast<std::uint8_t>(first_loop_fwd | (last_loop_fwd << 1) |
                                     (upper_fwd << 2) | (lower_fwd << 3));
  }

  friend bool operator==(const ChainDirs&, const ChainDirs&) = default;
};

// Action of the 180-degree chain rotation on colour data: the word is
// reversed, the end loops trade places, and each letter is transformed by
// an affine colour map with an optional beta/gamma swap.
struct RotationAction {
  bool swap_pair = true;
  AffineZ3 letter_map{};  // applied to both components of each letter
  AffineZ3 loop_map{};    // applied to the two loop colours

  Letter apply(Letter l) const {
    Letter m = swap_pair ? l.swapped() : l;
    return Letter(letter_map.apply(m.beta), letter_map.apply(m.gamma));
  }

  friend bool operator==(const RotationAction&, const RotationAction&) = default;
};

// The full encoding convention: vertex pairing table, constructor endpoint
// orders, the port reflection realizing orientation reversal, and the colour
// action of chain rotation.  One calibrated instance is frozen in
// convention_data.cpp and used everywhere by default.
struct Convention {
  VertexModel model;
  ChainDirs dirs;
  int mirror_reflection = 0;  // 0: ports 0<->2 swapped, 1: ports 1<->3 swapped
  RotationAction rotation;
};

// The frozen calibrated convention.
const Convention& active_convention();

}  // namespace spinecensus
