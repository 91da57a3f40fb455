#include "spinecensus/convention.hpp"

#include <algorithm>

namespace spinecensus {

std::optional<VertexModel> VertexModel::from_row_perms(
    const std::array<std::array<std::uint8_t, 3>, 4>& row_perm) {
  VertexModel m;
  for (int p = 0; p < 4; ++p) {
    bool seen[4] = {false, false, false, false};
    for (int s = 0; s < 3; ++s) {
      const int q = row_perm[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)];
      if (q < 0 || q > 3 || q == p || seen[q]) return std::nullopt;
      seen[q] = true;
      m.germ_port[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)] =
          static_cast<std::uint8_t>(q);
    }
  }
  // The partner slot is the slot of q whose row entry points back at p.
  for (int p = 0; p < 4; ++p) {
    for (int s = 0; s < 3; ++s) {
      const int q = m.germ_port[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)];
      int t = -1;
      for (int u = 0; u < 3; ++u)
        if (m.germ_port[static_cast<std::size_t>(q)][static_cast<std::size_t>(u)] == p) t = u;
      if (t < 0) return std::nullopt;
      m.germ_slot[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)] =
          static_cast<std::uint8_t>(t);
    }
  }
  return m;
}

bool VertexModel::valid() const {
  bool pair_seen[4][4] = {};
  for (int p = 0; p < 4; ++p) {
    bool port_seen[4] = {};
    for (int s = 0; s < 3; ++s) {
      const int q = germ_port[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)];
      const int t = germ_slot[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)];
      if (q < 0 || q > 3 || q == p || t < 0 || t > 2) return false;
      if (port_seen[q]) return false;  // two slots of p on the same germ
      port_seen[q] = true;
      // involution
      if (germ_port[static_cast<std::size_t>(q)][static_cast<std::size_t>(t)] != p) return false;
      if (germ_slot[static_cast<std::size_t>(q)][static_cast<std::size_t>(t)] != s) return false;
      if (p < q) pair_seen[p][q] = true;
    }
  }
  for (int p = 0; p < 4; ++p)
    for (int q = p + 1; q < 4; ++q)
      if (!pair_seen[p][q]) return false;
  return true;
}

std::vector<VertexModel> VertexModel::all_models() {
  std::vector<VertexModel> out;
  out.reserve(1296);
  std::array<std::array<std::uint8_t, 3>, 4> rows{};
  std::array<std::array<std::uint8_t, 3>, 4> others{};
  for (int p = 0; p < 4; ++p) {
    int k = 0;
    for (int q = 0; q < 4; ++q)
      if (q != p) others[static_cast<std::size_t>(p)][static_cast<std::size_t>(k++)] =
          static_cast<std::uint8_t>(q);
  }
  std::array<std::array<int, 3>, 24> perms{};
  {
    std::array<int, 3> idx = {0, 1, 2};
    int k = 0;
    do {
      perms[static_cast<std::size_t>(k++)] = idx;
    } while (std::next_permutation(idx.begin(), idx.end()));
  }
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c)
        for (int d = 0; d < 6; ++d) {
          const int choice[4] = {a, b, c, d};
          for (int p = 0; p < 4; ++p)
            for (int s = 0; s < 3; ++s)
              rows[static_cast<std::size_t>(p)][static_cast<std::size_t>(s)] =
                  others[static_cast<std::size_t>(p)][static_cast<std::size_t>(
                      perms[static_cast<std::size_t>(choice[p])][static_cast<std::size_t>(s)])];
          auto m = from_row_perms(rows);
          if (m) out.push_back(*m);
        }
  return out;
}

std::string VertexModel::encode() const {
  std::string s;
  s.reserve(12);
  for (int p = 0; p < 4; ++p)
    for (int sl = 0; sl < 3; ++sl)
      s.push_back(static_cast<char>(
          '0' + germ_port[static_cast<std::size_t>(p)][static_cast<std::size_t>(sl)]));
  return s;
}

}  // namespace spinecensus
