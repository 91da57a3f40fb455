#include "spinecensus/tracer.hpp"

#include <numeric>
#include <stdexcept>

namespace spinecensus {

namespace {

// Germ partner of a slot end: the slot end paired with it inside the vertex
// it touches.
int germ_partner(const OGraph& g, const VertexModel& m, int id) {
  const StrandSlot ss = StrandSlot::from_id(id);
  const PortRef here = g.endpoint(ss.edge, ss.end);
  const auto p = static_cast<std::size_t>(here.port);
  const auto s = static_cast<std::size_t>(ss.slot);
  const int q = m.germ_port[p][s];
  const int t = m.germ_slot[p][s];
  const OGraph::EndRef other = g.at_port(here.vertex, q);
  return other.edge * 6 + other.end * 3 + t;
}

// Strand partner: the same strand seen from the other end of its edge.
int strand_partner(const OGraph& g, int id) {
  const StrandSlot ss = StrandSlot::from_id(id);
  const int c = g.edge(ss.edge).color.value();
  // slot j at end a meets slot j+c at end b
  const int slot = ss.end == 0 ? (ss.slot + c) % 3 : (ss.slot + 3 - c) % 3;
  return ss.edge * 6 + (1 - ss.end) * 3 + slot;
}

}  // namespace

TraceResult trace_faces(const OGraph& g, const Convention& conv) {
  const int n_ids = g.edge_count() * 6;
  TraceResult out;
  out.vertex_count = g.vertex_count();
  out.incidence.assign(static_cast<std::size_t>(g.edge_count()), {});
  std::vector<std::uint8_t> incidence_fill(static_cast<std::size_t>(g.edge_count()), 0);

  std::vector<char> visited(static_cast<std::size_t>(n_ids), 0);
  for (int start = 0; start < n_ids; ++start) {
    if (visited[static_cast<std::size_t>(start)]) continue;
    const int face = static_cast<int>(out.faces.size());
    std::vector<WalkStep> walk;
    int x = start;
    do {
      // strand step: departs x, arrives y at the other end of the edge
      visited[static_cast<std::size_t>(x)] = 1;
      const StrandSlot from = StrandSlot::from_id(x);
      const int sign = from.end == 0 ? 1 : -1;
      walk.push_back(WalkStep{from, sign});
      auto& fill = incidence_fill[static_cast<std::size_t>(from.edge)];
      out.incidence[static_cast<std::size_t>(from.edge)][fill++] = {face, sign};
      const int y = strand_partner(g, x);
      visited[static_cast<std::size_t>(y)] = 1;
      // germ step: crosses the vertex at y's endpoint
      x = germ_partner(g, conv.model, y);
    } while (x != start);
    out.faces.push_back(std::move(walk));
  }

  out.face_count = static_cast<int>(out.faces.size());
  out.euler_characteristic = out.face_count - out.vertex_count;
  return out;
}

bool is_single_face(const OGraph& g, const Convention& conv) {
  return trace_faces(g, conv).face_count == 1;
}

BoundaryData boundary_word(const TraceResult& t, const OGraph& g) {
  if (!g.connected()) throw std::invalid_argument("boundary_word: disconnected o-graph");

  // Breadth-first spanning tree from vertex 0, incident edges in index order.
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(g.vertex_count()));
  for (int e = 0; e < g.edge_count(); ++e) {
    incident[static_cast<std::size_t>(g.edge(e).a.vertex)].push_back(e);
    if (g.edge(e).b.vertex != g.edge(e).a.vertex)
      incident[static_cast<std::size_t>(g.edge(e).b.vertex)].push_back(e);
  }
  std::vector<char> in_tree(static_cast<std::size_t>(g.edge_count()), 0);
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  std::vector<int> queue = {0};
  seen[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (const int e : incident[static_cast<std::size_t>(v)]) {
      const int w = g.edge(e).a.vertex == v ? g.edge(e).b.vertex : g.edge(e).a.vertex;
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        in_tree[static_cast<std::size_t>(e)] = 1;
        queue.push_back(w);
      }
    }
  }

  BoundaryData out;
  std::vector<int> col_of(static_cast<std::size_t>(g.edge_count()), -1);
  for (int e = 0; e < g.edge_count(); ++e)
    if (!in_tree[static_cast<std::size_t>(e)]) {
      col_of[static_cast<std::size_t>(e)] = static_cast<int>(out.cotree_edges.size());
      out.cotree_edges.push_back(e);
    }

  out.relations.assign(t.faces.size(),
                       std::vector<long long>(out.cotree_edges.size(), 0));
  for (std::size_t f = 0; f < t.faces.size(); ++f)
    for (const WalkStep& step : t.faces[f]) {
      const int col = col_of[static_cast<std::size_t>(step.from.edge)];
      if (col >= 0) out.relations[f][static_cast<std::size_t>(col)] += step.sign;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Cut machinery.  Gadgets are tiny pairing graphs: nodes are the slot ends
// involved, `germ` pairs them inside the vertex, `link` pairs them along the
// loop/edge strands, and path following between cut nodes produces the new
// matching.  Cut node numbering: port 0 slot s -> s, port 3 slot s -> 3+s.
// ---------------------------------------------------------------------------

namespace {

constexpr int kNoLink = -1;

int node_of(int port, int slot) { return port * 3 + slot; }

// Resolves the matching on the given cut nodes of a 12-node vertex gadget.
// Any alternating cycle avoiding the cut nodes is a closed face.
CutState resolve_vertex_gadget(const VertexModel& m, const std::array<int, 12>& link,
                               const std::array<int, 6>& cut_nodes, std::uint8_t closed_before) {
  std::array<int, 12> germ{};
  for (int p = 0; p < 4; ++p)
    for (int s = 0; s < 3; ++s)
      germ[static_cast<std::size_t>(node_of(p, s))] =
          node_of(m.germ_port[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)],
                  m.germ_slot[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)]);

  std::array<int, 12> cut_index{};
  cut_index.fill(-1);
  for (int i = 0; i < 6; ++i) cut_index[static_cast<std::size_t>(cut_nodes[static_cast<std::size_t>(i)])] = i;

  CutState out;
  out.closed = closed_before;
  std::array<char, 12> visited{};
  for (int i = 0; i < 6; ++i) {
    const int start = cut_nodes[static_cast<std::size_t>(i)];
    if (visited[static_cast<std::size_t>(start)]) continue;
    visited[static_cast<std::size_t>(start)] = 1;
    int x = germ[static_cast<std::size_t>(start)];
    while (cut_index[static_cast<std::size_t>(x)] < 0) {
      visited[static_cast<std::size_t>(x)] = 1;
      x = link[static_cast<std::size_t>(x)];
      visited[static_cast<std::size_t>(x)] = 1;
      x = germ[static_cast<std::size_t>(x)];
    }
    visited[static_cast<std::size_t>(x)] = 1;
    const int j = cut_index[static_cast<std::size_t>(x)];
    out.match[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(j);
    out.match[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(i);
  }
  // closed faces: alternating link/germ cycles among unvisited linked nodes
  for (int s = 0; s < 12; ++s) {
    if (visited[static_cast<std::size_t>(s)] || link[static_cast<std::size_t>(s)] == kNoLink)
      continue;
    int x = s;
    do {
      visited[static_cast<std::size_t>(x)] = 1;
      x = link[static_cast<std::size_t>(x)];
      visited[static_cast<std::size_t>(x)] = 1;
      x = germ[static_cast<std::size_t>(x)];
    } while (x != s);
    if (out.closed < 255) ++out.closed;
  }
  return out;
}

}  // namespace

CutState initial_cut_state(ColorZ3 alpha, const Convention& conv) {
  // First vertex: loop on ports 1,2; cut at ports 0,3.
  std::array<int, 12> link{};
  link.fill(kNoLink);
  const int a = alpha.value();
  for (int j = 0; j < 3; ++j) {
    const int tgt = conv.dirs.first_loop_fwd ? (j + a) % 3 : (j + 3 - a) % 3;
    link[static_cast<std::size_t>(node_of(1, j))] = node_of(2, tgt);
    link[static_cast<std::size_t>(node_of(2, tgt))] = node_of(1, j);
  }
  const std::array<int, 6> cut = {node_of(0, 0), node_of(0, 1), node_of(0, 2),
                                  node_of(3, 0), node_of(3, 1), node_of(3, 2)};
  return resolve_vertex_gadget(conv.model, link, cut, 0);
}

CutState transfer(const CutState& state, Letter letter, const Convention& conv) {
  // Gadget over the next vertex: its in-ports 1 (upper) and 2 (lower) reach
  // back, across the coloured edges and the old matching, to in-ports again.
  // Composite link on ports 1,2: follow edge back, apply the old matching,
  // come forward along the other edge.
  const int b = letter.beta.value();
  const int gmm = letter.gamma.value();

  // old cut point reached from (port1, slot j): upper edge twist
  const auto upper_back = [&](int j) {
    return conv.dirs.upper_fwd ? (j + 3 - b) % 3 : (j + b) % 3;  // point 0..2
  };
  const auto upper_fwd = [&](int point) {
    return conv.dirs.upper_fwd ? (point + b) % 3 : (point + 3 - b) % 3;
  };
  const auto lower_back = [&](int j) {
    return 3 + (conv.dirs.lower_fwd ? (j + 3 - gmm) % 3 : (j + gmm) % 3);
  };
  const auto lower_fwd = [&](int point) {
    return conv.dirs.lower_fwd ? (point + gmm) % 3 : (point + 3 - gmm) % 3;
  };

  std::array<int, 12> link{};
  link.fill(kNoLink);
  for (int j = 0; j < 3; ++j) {
    for (int port : {1, 2}) {
      const int here = node_of(port, j);
      if (link[static_cast<std::size_t>(here)] != kNoLink) continue;
      const int old_point = port == 1 ? upper_back(j) : lower_back(j);
      const int other_point = state.match[static_cast<std::size_t>(old_point)];
      const int there = other_point < 3 ? node_of(1, upper_fwd(other_point))
                                        : node_of(2, lower_fwd(other_point - 3));
      link[static_cast<std::size_t>(here)] = there;
      link[static_cast<std::size_t>(there)] = here;
    }
  }

  const std::array<int, 6> cut = {node_of(0, 0), node_of(0, 1), node_of(0, 2),
                                  node_of(3, 0), node_of(3, 1), node_of(3, 2)};
  return resolve_vertex_gadget(conv.model, link, cut, state.closed);
}

int closing_cycles(const CutState& state, ColorZ3 delta, const Convention& conv) {
  // Last vertex loop on ports 0,3: pairs cut point j with 3 + (j +- delta).
  const int d = delta.value();
  std::array<int, 6> loop{};
  for (int j = 0; j < 3; ++j) {
    const int tgt = 3 + (conv.dirs.last_loop_fwd ? (j + d) % 3 : (j + 3 - d) % 3);
    loop[static_cast<std::size_t>(j)] = tgt;
    loop[static_cast<std::size_t>(tgt)] = j;
  }
  int cycles = 0;
  std::array<char, 6> visited{};
  for (int s = 0; s < 6; ++s) {
    if (visited[static_cast<std::size_t>(s)]) continue;
    ++cycles;
    int x = s;
    do {
      visited[static_cast<std::size_t>(x)] = 1;
      x = state.match[static_cast<std::size_t>(x)];
      visited[static_cast<std::size_t>(x)] = 1;
      x = loop[static_cast<std::size_t>(x)];
    } while (x != s);
  }
  return cycles;
}

int open_chain_face_count_via_cuts(const OpenChainParams& params, const Convention& conv) {
  CutState s = initial_cut_state(params.alpha, conv);
  for (const Letter& l : params.word) s = transfer(s, l, conv);
  return s.closed + closing_cycles(s, params.delta, conv);
}

}  // namespace spinecensus
