#include "spinecensus/ograph.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace spinecensus {

bool operator<(const OpenChainParams& a, const OpenChainParams& b) {
  if (a.alpha != b.alpha) return a.alpha < b.alpha;
  if (a.delta != b.delta) return a.delta < b.delta;
  const std::size_t m = std::min(a.word.size(), b.word.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (a.word[i].beta != b.word[i].beta) return a.word[i].beta < b.word[i].beta;
    if (a.word[i].gamma != b.word[i].gamma) return a.word[i].gamma < b.word[i].gamma;
  }
  return a.word.size() < b.word.size();
}

OGraph OGraph::from_edges(int vertex_count, std::vector<OEdge> edges) {
  if (vertex_count <= 0) throw std::invalid_argument("o-graph needs at least one vertex");
  if (edges.size() != static_cast<std::size_t>(vertex_count) * 2)
    throw std::invalid_argument("4-valent graph needs exactly 2 edges per vertex");

  OGraph g;
  g.vertex_count_ = vertex_count;
  g.edges_ = std::move(edges);
  g.port_map_.assign(static_cast<std::size_t>(vertex_count) * 4, EndRef{});

  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    for (int end = 0; end < 2; ++end) {
      const PortRef p = end == 0 ? g.edges_[i].a : g.edges_[i].b;
      if (p.vertex < 0 || p.vertex >= vertex_count)
        throw std::invalid_argument("edge endpoint references a missing vertex");
      if (p.port < 0 || p.port > 3) throw std::invalid_argument("port out of range");
      EndRef& slot = g.port_map_[static_cast<std::size_t>(p.vertex) * 4 +
                                 static_cast<std::size_t>(p.port)];
      if (slot.edge >= 0) throw std::invalid_argument("duplicate port");
      slot.edge = static_cast<std::int32_t>(i);
      slot.end = end;
    }
  }
  return g;
}

bool OGraph::connected() const {
  std::vector<char> seen(static_cast<std::size_t>(vertex_count_), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int p = 0; p < 4; ++p) {
      const EndRef e = at_port(v, p);
      const PortRef other = endpoint(e.edge, 1 - e.end);
      if (!seen[static_cast<std::size_t>(other.vertex)]) {
        seen[static_cast<std::size_t>(other.vertex)] = 1;
        ++reached;
        stack.push_back(other.vertex);
      }
    }
  }
  return reached == vertex_count_;
}

namespace {

OEdge oriented(PortRef x, PortRef y, ColorZ3 c, bool forward) {
  return forward ? OEdge{x, y, c} : OEdge{y, x, c};
}

}  // namespace

OGraph make_open_chain(const OpenChainParams& params, const Convention& conv) {
  const int n = params.n();
  if (n < 2) throw std::invalid_argument("open chain needs n >= 2");

  std::vector<OEdge> edges;
  edges.reserve(static_cast<std::size_t>(2 * n));
  const ChainDirs& d = conv.dirs;

  edges.push_back(oriented({0, 1}, {0, 2}, params.alpha, d.first_loop_fwd));
  for (int i = 0; i + 1 < n; ++i) {
    edges.push_back(oriented({i, 0}, {i + 1, 1}, params.word[static_cast<std::size_t>(i)].beta,
                             d.upper_fwd));
    edges.push_back(oriented({i, 3}, {i + 1, 2}, params.word[static_cast<std::size_t>(i)].gamma,
                             d.lower_fwd));
  }
  edges.push_back(oriented({n - 1, 0}, {n - 1, 3}, params.delta, d.last_loop_fwd));

  return OGraph::from_edges(n, std::move(edges));
}

OGraph make_closed_chain(const ClosedChainParams& params, const Convention& conv) {
  const int n = params.n();
  if (n < 1) throw std::invalid_argument("closed chain needs n >= 1");

  std::vector<OEdge> edges;
  edges.reserve(static_cast<std::size_t>(2 * n));
  const ChainDirs& d = conv.dirs;

  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    edges.push_back(
        oriented({i, 0}, {j, 1}, params.pairs[static_cast<std::size_t>(i)].alpha, d.upper_fwd));
    edges.push_back(
        oriented({i, 3}, {j, 2}, params.pairs[static_cast<std::size_t>(i)].beta, d.lower_fwd));
  }

  return OGraph::from_edges(n, std::move(edges));
}

OGraph mirror(const OGraph& g, const Convention& conv) {
  // Reflections keep the overstrand pair on {0,2}: either swap ports 0,2 or
  // swap ports 1,3.  Both are involutions; calibration picked one.
  const auto reflect = [&](std::int32_t p) -> std::int32_t {
    if (conv.mirror_reflection == 0) return p == 0 ? 2 : p == 2 ? 0 : p;
    return p == 1 ? 3 : p == 3 ? 1 : p;
  };

  std::vector<OEdge> edges = g.edges();
  for (OEdge& e : edges) {
    e.a.port = reflect(e.a.port);
    e.b.port = reflect(e.b.port);
    e.color = e.color.negated();
  }
  return OGraph::from_edges(g.vertex_count(), std::move(edges));
}

OpenChainParams mirror_open_chain(const OpenChainParams& params) {
  OpenChainParams out;
  out.alpha = params.alpha.one_minus();
  out.delta = params.delta.one_minus();
  out.word.reserve(params.word.size());
  for (std::size_t i = 0; i < params.word.size(); ++i) {
    const Letter l = params.word[i];
    if ((i + 1) % 2 == 1) {
      out.word.emplace_back(l.gamma.one_minus(), l.beta.one_minus());
    } else {
      out.word.emplace_back(l.beta.one_minus(), l.gamma.one_minus());
    }
  }
  return out;
}

namespace {

OpenChainParams swap_word(const OpenChainParams& p) {
  OpenChainParams out = p;
  for (Letter& l : out.word) l = l.swapped();
  return out;
}

OpenChainParams rotate_chain(const OpenChainParams& p, const RotationAction& act) {
  OpenChainParams out;
  out.alpha = act.loop_map.apply(p.delta);
  out.delta = act.loop_map.apply(p.alpha);
  out.word.reserve(p.word.size());
  for (auto it = p.word.rbegin(); it != p.word.rend(); ++it) out.word.push_back(act.apply(*it));
  return out;
}

}  // namespace

std::set<OpenChainParams> open_chain_orbit(const OpenChainParams& params, const Convention& conv) {
  const OpenChainParams r = rotate_chain(params, conv.rotation);
  return {params, swap_word(params), r, swap_word(r)};
}

OpenChainParams canonical_form(const OpenChainParams& params, const Convention& conv) {
  return *open_chain_orbit(params, conv).begin();
}

std::string serialize_ograph(const OGraph& g, bool canonical) {
  std::vector<std::string> lines;
  lines.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const OEdge& e : g.edges()) {
    std::ostringstream os;
    os << "edge " << e.a.vertex << ' ' << e.a.port << ' ' << e.b.vertex << ' ' << e.b.port << ' '
       << e.color.value();
    lines.push_back(os.str());
  }
  if (canonical) std::sort(lines.begin(), lines.end());

  std::ostringstream os;
  os << "ograph 1\n";
  os << "vertices " << g.vertex_count() << '\n';
  for (const std::string& l : lines) os << l << '\n';
  return os.str();
}

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  std::ostringstream os;
  os << "line " << line_no << ": " << what;
  throw std::invalid_argument(os.str());
}

}  // namespace

OGraph parse_ograph(std::istream& in) {
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  bool saw_vertices = false;
  int vertex_count = 0;
  std::vector<OEdge> edges;
  // Track port usage ourselves so errors carry line numbers.
  std::vector<int> port_line;

  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;

    if (!saw_header) {
      int version = -1;
      if (tok != "ograph" || !(ls >> version) || version != 1)
        parse_fail(line_no, "expected header 'ograph 1'");
      saw_header = true;
      continue;
    }
    if (!saw_vertices) {
      if (tok != "vertices" || !(ls >> vertex_count) || vertex_count <= 0)
        parse_fail(line_no, "expected 'vertices <n>' with n >= 1");
      saw_vertices = true;
      port_line.assign(static_cast<std::size_t>(vertex_count) * 4, 0);
      continue;
    }
    if (tok != "edge") parse_fail(line_no, "expected 'edge <v_a> <p_a> <v_b> <p_b> <color>'");

    int va, pa, vb, pb, color;
    if (!(ls >> va >> pa >> vb >> pb >> color))
      parse_fail(line_no, "expected 'edge <v_a> <p_a> <v_b> <p_b> <color>'");
    std::string extra;
    if (ls >> extra) parse_fail(line_no, "trailing tokens after edge");

    if (pa < 0 || pa > 3 || pb < 0 || pb > 3) parse_fail(line_no, "port out of range");
    if (color < 0 || color > 2) parse_fail(line_no, "color out of range");
    if (va < 0 || va >= vertex_count || vb < 0 || vb >= vertex_count)
      parse_fail(line_no, "dangling endpoint: vertex index out of range");

    for (const auto& [v, p] : {std::pair{va, pa}, std::pair{vb, pb}}) {
      int& used = port_line[static_cast<std::size_t>(v) * 4 + static_cast<std::size_t>(p)];
      if (used != 0) {
        std::ostringstream os;
        os << "duplicate port: vertex " << v << " port " << p << " already used at line " << used;
        parse_fail(line_no, os.str());
      }
      used = line_no;
    }
    edges.push_back(OEdge{{va, pa}, {vb, pb}, ColorZ3(color)});
  }

  if (!saw_header) throw std::invalid_argument("line 1: expected header 'ograph 1'");
  if (!saw_vertices) throw std::invalid_argument("missing 'vertices <n>' line");
  for (int v = 0; v < vertex_count; ++v)
    for (int p = 0; p < 4; ++p)
      if (port_line[static_cast<std::size_t>(v) * 4 + static_cast<std::size_t>(p)] == 0) {
        std::ostringstream os;
        os << "vertex " << v << " port " << p << " is unused; the graph must be 4-valent";
        throw std::invalid_argument(os.str());
      }

  return OGraph::from_edges(vertex_count, std::move(edges));
}

OGraph parse_ograph(const std::string& text) {
  std::istringstream in(text);
  return parse_ograph(in);
}

}  // namespace spinecensus
