#include "spinecensus/triangulation.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "spinecensus/tracer.hpp"

namespace spinecensus {

namespace {

// Vertex labels of the face triangle, increasing.
std::array<int, 3> face_corners(int face) {
  std::array<int, 3> out{};
  int k = 0;
  for (int v = 0; v < 4; ++v)
    if (v != face) out[static_cast<std::size_t>(k++)] = v;
  return out;
}

int corner_index(int face, int label) {
  const auto c = face_corners(face);
  for (int i = 0; i < 3; ++i)
    if (c[static_cast<std::size_t>(i)] == label) return i;
  throw std::logic_error("corner_index: label on the face itself");
}

// Index of the tetrahedron edge {x,y} among the six vertex pairs.
int pair_id(int x, int y) {
  if (x > y) std::swap(x, y);
  static constexpr int table[4][4] = {
      {-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return table[x][y];
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

GluingTable export_gluing_table(const OGraph& g, const Convention& conv) {
  GluingTable t;
  t.tet_count = g.vertex_count();
  t.gluings.reserve(static_cast<std::size_t>(g.edge_count()));

  for (int e = 0; e < g.edge_count(); ++e) {
    const OEdge& edge = g.edge(e);
    const int c = edge.color.value();
    GluingTable::Gluing gl;
    gl.tet_a = edge.a.vertex;
    gl.face_a = edge.a.port;
    gl.tet_b = edge.b.vertex;
    gl.face_b = edge.b.port;
    // Slot s on the a-side germ points at port x; across the edge the strand
    // continues on slot s+c, whose germ points at port y.  The triangle side
    // opposite corner x is glued to the side opposite corner y.
    for (int s = 0; s < 3; ++s) {
      const int x = conv.model.germ_port[static_cast<std::size_t>(edge.a.port)]
                                        [static_cast<std::size_t>(s)];
      const int y = conv.model.germ_port[static_cast<std::size_t>(edge.b.port)]
                                        [static_cast<std::size_t>((s + c) % 3)];
      gl.perm[static_cast<std::size_t>(corner_index(edge.a.port, x))] =
          static_cast<std::uint8_t>(corner_index(edge.b.port, y));
    }
    t.gluings.push_back(gl);
  }

  const int orbits = edge_orbit_count(t);
  const int faces = trace_faces(g, conv).face_count;
  if (orbits != faces)
    throw std::runtime_error("gluing export: edge orbit count disagrees with the traced faces");
  return t;
}

std::string serialize_gluing_table(const GluingTable& t) {
  std::ostringstream os;
  os << "triangulation " << t.tet_count << '\n';
  for (const auto& gl : t.gluings) {
    os << "glue " << gl.tet_a << ' ' << gl.face_a << ' ' << gl.tet_b << ' ' << gl.face_b << ' ';
    for (int i = 0; i < 3; ++i) os << static_cast<int>(gl.perm[static_cast<std::size_t>(i)]);
    os << '\n';
  }
  return os.str();
}

GluingTable parse_gluing_table(std::istream& in) {
  GluingTable t;
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  const auto fail = [&](const std::string& what) {
    std::ostringstream os;
    os << "line " << line_no << ": " << what;
    throw std::invalid_argument(os.str());
  };

  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (!saw_header) {
      if (tok != "triangulation" || !(ls >> t.tet_count) || t.tet_count <= 0)
        fail("expected 'triangulation <n>'");
      saw_header = true;
      continue;
    }
    if (tok != "glue") fail("expected 'glue <tet_a> <face_a> <tet_b> <face_b> <perm>'");
    GluingTable::Gluing gl;
    std::string perm;
    if (!(ls >> gl.tet_a >> gl.face_a >> gl.tet_b >> gl.face_b >> perm) || perm.size() != 3)
      fail("expected 'glue <tet_a> <face_a> <tet_b> <face_b> <perm>'");
    if (gl.tet_a < 0 || gl.tet_a >= t.tet_count || gl.tet_b < 0 || gl.tet_b >= t.tet_count)
      fail("tetrahedron index out of range");
    if (gl.face_a < 0 || gl.face_a > 3 || gl.face_b < 0 || gl.face_b > 3)
      fail("face index out of range");
    bool seen[3] = {false, false, false};
    for (int i = 0; i < 3; ++i) {
      const int d = perm[static_cast<std::size_t>(i)] - '0';
      if (d < 0 || d > 2 || seen[d]) fail("perm must be a permutation of 012");
      seen[d] = true;
      gl.perm[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(d);
    }
    t.gluings.push_back(gl);
  }
  if (!saw_header) throw std::invalid_argument("missing 'triangulation <n>' header");
  return t;
}

GluingTable parse_gluing_table(const std::string& text) {
  std::istringstream in(text);
  return parse_gluing_table(in);
}

int edge_orbit_count(const GluingTable& t) {
  UnionFind uf(t.tet_count * 6);
  for (const auto& gl : t.gluings) {
    const auto ca = face_corners(gl.face_a);
    const auto cb = face_corners(gl.face_b);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const int x = ca[static_cast<std::size_t>(i)], y = ca[static_cast<std::size_t>(j)];
        const int xx = cb[gl.perm[static_cast<std::size_t>(i)]];
        const int yy = cb[gl.perm[static_cast<std::size_t>(j)]];
        uf.unite(gl.tet_a * 6 + pair_id(x, y), gl.tet_b * 6 + pair_id(xx, yy));
      }
  }
  int orbits = 0;
  for (int i = 0; i < t.tet_count * 6; ++i)
    if (uf.find(i) == i) ++orbits;
  return orbits;
}

namespace {

using Perm4 = std::array<std::uint8_t, 4>;

Perm4 compose(const Perm4& f, const Perm4& g) {  // (f o g)(x) = f(g(x))
  Perm4 out{};
  for (int i = 0; i < 4; ++i) out[static_cast<std::size_t>(i)] = f[g[static_cast<std::size_t>(i)]];
  return out;
}

Perm4 inverse(const Perm4& f) {
  Perm4 out{};
  for (int i = 0; i < 4; ++i) out[f[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return out;
}

bool is_even(const Perm4& f) {
  int inv = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (f[static_cast<std::size_t>(i)] > f[static_cast<std::size_t>(j)]) ++inv;
  return inv % 2 == 0;
}

const std::vector<Perm4>& even_perms() {
  static const std::vector<Perm4> perms = [] {
    std::vector<Perm4> out;
    Perm4 p = {0, 1, 2, 3};
    std::array<int, 4> idx = {0, 1, 2, 3};
    do {
      for (int i = 0; i < 4; ++i) p[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(idx[static_cast<std::size_t>(i)]);
      if (is_even(p)) out.push_back(p);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
  }();
  return perms;
}

}  // namespace

std::string triangulation_signature(const GluingTable& t) {
  // Face adjacency with full label maps (corners via the gluing permutation,
  // opposite vertex to opposite vertex).
  struct Side {
    int tet = -1;
    int face = -1;
    Perm4 map{};  // labels of this tet -> labels of the neighbour
  };
  std::vector<std::array<Side, 4>> adj(static_cast<std::size_t>(t.tet_count));
  for (const auto& gl : t.gluings) {
    const auto ca = face_corners(gl.face_a);
    const auto cb = face_corners(gl.face_b);
    Perm4 m{};
    m[static_cast<std::size_t>(gl.face_a)] = static_cast<std::uint8_t>(gl.face_b);
    for (int i = 0; i < 3; ++i)
      m[static_cast<std::size_t>(ca[static_cast<std::size_t>(i)])] =
          static_cast<std::uint8_t>(cb[gl.perm[static_cast<std::size_t>(i)]]);
    auto& sa = adj[static_cast<std::size_t>(gl.tet_a)][static_cast<std::size_t>(gl.face_a)];
    if (sa.tet >= 0) throw std::invalid_argument("triangulation: face glued twice");
    sa = Side{gl.tet_b, gl.face_b, m};
    auto& sb = adj[static_cast<std::size_t>(gl.tet_b)][static_cast<std::size_t>(gl.face_b)];
    if (sb.tet >= 0) throw std::invalid_argument("triangulation: face glued twice");
    sb = Side{gl.tet_a, gl.face_a, inverse(m)};
  }
  for (int tet = 0; tet < t.tet_count; ++tet)
    for (int f = 0; f < 4; ++f)
      if (adj[static_cast<std::size_t>(tet)][static_cast<std::size_t>(f)].tet < 0)
        throw std::invalid_argument("triangulation: unglued face");

  std::string best;
  for (int start = 0; start < t.tet_count; ++start) {
    for (const Perm4& rho0 : even_perms()) {
      std::vector<int> order = {start};
      std::vector<int> index_of(static_cast<std::size_t>(t.tet_count), -1);
      index_of[static_cast<std::size_t>(start)] = 0;
      std::vector<Perm4> rho(static_cast<std::size_t>(t.tet_count));
      rho[static_cast<std::size_t>(start)] = rho0;

      std::string enc;
      enc.reserve(static_cast<std::size_t>(t.tet_count) * 24);
      for (std::size_t head = 0; head < order.size(); ++head) {
        const int a = order[head];
        const Perm4 inv_rho_a = inverse(rho[static_cast<std::size_t>(a)]);
        for (int c = 0; c < 4; ++c) {
          const int f = inv_rho_a[static_cast<std::size_t>(c)];
          const Side& side = adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(f)];
          if (index_of[static_cast<std::size_t>(side.tet)] < 0) {
            index_of[static_cast<std::size_t>(side.tet)] = static_cast<int>(order.size());
            order.push_back(side.tet);
            rho[static_cast<std::size_t>(side.tet)] =
                compose(rho[static_cast<std::size_t>(a)], inverse(side.map));
          }
          const Perm4 enc_map = compose(
              compose(rho[static_cast<std::size_t>(side.tet)], side.map), inv_rho_a);
          enc.push_back(static_cast<char>('A' + index_of[static_cast<std::size_t>(side.tet)]));
          for (int i = 0; i < 4; ++i)
            enc.push_back(static_cast<char>('0' + enc_map[static_cast<std::size_t>(i)]));
        }
      }
      if (best.empty() || enc < best) best = std::move(enc);
    }
  }
  return best;
}

}  // namespace spinecensus
