#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "spinecensus/color.hpp"
#include "spinecensus/convention.hpp"

namespace spinecensus {

// One endpoint of an o-graph edge: a vertex together with one of its four
// ports (0..3 counterclockwise; the overstrand occupies ports 0 and 2).
struct PortRef {
  std::int32_t vertex = 0;
  std::int32_t port = 0;

  friend bool operator==(const PortRef&, const PortRef&) = default;
  friend auto operator<=>(const PortRef&, const PortRef&) = default;
};

struct OEdge {
  PortRef a;
  PortRef b;
  ColorZ3 color;

  friend bool operator==(const OEdge&, const OEdge&) = default;
};

// An o-graph: a 4-valent graph with a planar crossing structure at each
// vertex and a Z/3 colour on each edge.  It encodes an oriented standard
// polyhedron (spine); the tracer reconstructs the polyhedron's faces.
//
// Values are immutable after construction and exactly 4-valent: every
// (vertex, port) pair is used by exactly one edge endpoint.
class OGraph {
 public:
  // Which edge end occupies a port.
  struct EndRef {
    std::int32_t edge = -1;
    std::int32_t end = 0;  // 0 = endpoint a, 1 = endpoint b
  };

  // Validates 4-valence and index ranges; throws std::invalid_argument.
  static OGraph from_edges(int vertex_count, std::vector<OEdge> edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const OEdge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }
  const std::vector<OEdge>& edges() const { return edges_; }

  EndRef at_port(int vertex, int port) const {
    return port_map_[static_cast<std::size_t>(vertex) * 4 + static_cast<std::size_t>(port)];
  }

  PortRef endpoint(int edge, int end) const {
    const OEdge& e = edges_[static_cast<std::size_t>(edge)];
    return end == 0 ? e.a : e.b;
  }

  bool connected() const;

  friend bool operator==(const OGraph& x, const OGraph& y) {
    return x.vertex_count_ == y.vertex_count_ && x.edges_ == y.edges_;
  }

 private:
  OGraph() = default;

  int vertex_count_ = 0;
  std::vector<OEdge> edges_;
  std::vector<EndRef> port_map_;
};

// Colour data of an o-graph based on the open chain G_n: n vertices in a
// row, a loop at each end (colours alpha and delta) and a double edge
// between consecutive vertices (colours beta_k, gamma_k = word[k-1]).
struct OpenChainParams {
  ColorZ3 alpha;
  ColorZ3 delta;
  std::vector<Letter> word;

  int n() const { return static_cast<int>(word.size()) + 1; }

  friend bool operator==(const OpenChainParams&, const OpenChainParams&) = default;

  // Lexicographic on (alpha, delta, word flattened to residues).
  friend bool operator<(const OpenChainParams& a, const OpenChainParams& b);
};

// Colour data of an o-graph based on the closed chain: n vertices in a
// cycle, double edges between consecutive ones, colours (alpha_i, beta_i).
struct ClosedChainParams {
  struct Pair {
    ColorZ3 alpha;
    ColorZ3 beta;
    friend bool operator==(const Pair&, const Pair&) = default;
  };
  std::vector<Pair> pairs;

  int n() const { return static_cast<int>(pairs.size()); }

  friend bool operator==(const ClosedChainParams&, const ClosedChainParams&) = default;
};

// Builds the open-chain o-graph.  Requires n >= 2 (word nonempty).
// Port layout: interior vertex v has the upper edge from v leaving at port 0
// and arriving at port 1 of v+1, the lower edge leaving at port 3 and
// arriving at port 2; the first loop sits on ports (1,2) of v0, the last on
// ports (0,3) of v_{n-1}.  Endpoint order per the convention's ChainDirs.
OGraph make_open_chain(const OpenChainParams& params,
                       const Convention& conv = active_convention());

// Builds the closed-chain o-graph.  Requires n >= 1.  The double edge from
// v_i to v_{i+1 mod n} carries (alpha_{i+1}, beta_{i+1}) on its upper and
// lower strand edges, with the same interior port layout as the open chain.
OGraph make_closed_chain(const ClosedChainParams& params,
                         const Convention& conv = active_convention());

// The o-graph of the orientation-reversed polyhedron: every colour is
// negated and the crossing at each vertex is flipped, re-normalized to the
// overstrand-on-{0,2} convention by the port reflection fixed during
// calibration.  Involution on OGraph values.
OGraph mirror(const OGraph& g, const Convention& conv = active_convention());

// Open-chain colours of the orientation-reversed polyhedron, in open-chain
// normal form (1-based letter positions):
//   alpha' = 1-alpha, delta' = 1-delta,
//   odd k:  beta'_k = 1-gamma_k, gamma'_k = 1-beta_k,
//   even k: beta'_k = 1-beta_k,  gamma'_k = 1-gamma_k.
OpenChainParams mirror_open_chain(const OpenChainParams& params);

// Orbit of the params under the group generated by the beta/gamma swap and
// the 180-degree chain rotation (at most four members).
std::set<OpenChainParams> open_chain_orbit(const OpenChainParams& params,
                                           const Convention& conv = active_convention());

// Least orbit member; the census keeps exactly the self-canonical tuples.
OpenChainParams canonical_form(const OpenChainParams& params,
                               const Convention& conv = active_convention());

// Line-based text format:
//   ograph 1
//   vertices <n>
//   edge <v_a> <p_a> <v_b> <p_b> <color>
// '#' starts a comment.  Endpoint order is semantic (it orients the strand
// twist), so serialization preserves it; canonical output sorts edge lines.
std::string serialize_ograph(const OGraph& g, bool canonical = false);
OGraph parse_ograph(const std::string& text);
OGraph parse_ograph(std::istream& in);

}  // namespace spinecensus
