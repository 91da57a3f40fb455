#include "spinecensus/homology.hpp"

#include <cstdlib>
#include <stdexcept>
#include <utility>

#include "spinecensus/tracer.hpp"

namespace spinecensus {

namespace {

using Matrix = std::vector<std::vector<long long>>;

// Position of the entry with smallest nonzero absolute value in the
// submatrix starting at (t,t); (-1,-1) if the submatrix is zero.
std::pair<int, int> min_nonzero(const Matrix& m, int t) {
  int bi = -1, bj = -1;
  long long best = 0;
  for (std::size_t i = static_cast<std::size_t>(t); i < m.size(); ++i)
    for (std::size_t j = static_cast<std::size_t>(t); j < m[i].size(); ++j) {
      const long long v = std::llabs(m[i][j]);
      if (v != 0 && (bi < 0 || v < best)) {
        best = v;
        bi = static_cast<int>(i);
        bj = static_cast<int>(j);
      }
    }
  return {bi, bj};
}

}  // namespace

SmithNormalForm smith_normal_form(Matrix m) {
  SmithNormalForm out;
  if (m.empty() || m[0].empty()) return out;
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("smith_normal_form: ragged matrix");

  const int bound = rows < cols ? rows : cols;
  for (int t = 0; t < bound; ++t) {
    for (;;) {
      const auto [pi, pj] = min_nonzero(m, t);
      if (pi < 0) break;
      std::swap(m[static_cast<std::size_t>(t)], m[static_cast<std::size_t>(pi)]);
      for (int i = 0; i < rows; ++i)
        std::swap(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)],
                  m[static_cast<std::size_t>(i)][static_cast<std::size_t>(pj)]);

      const long long p = m[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        const long long q = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] / p;
        if (q != 0)
          for (int j = t; j < cols; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                q * m[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
        if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)] != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        const long long q = m[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] / p;
        if (q != 0)
          for (int i = t; i < rows; ++i)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
                q * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(t)];
        if (m[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)] != 0) clean = false;
      }
      if (!clean) continue;  // remainders left; pick a smaller pivot and repeat

      // Divisibility: the pivot must divide everything below-right.
      bool divides = true;
      for (int i = t + 1; i < rows && divides; ++i)
        for (int j = t + 1; j < cols && divides; ++j)
          if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] % p != 0) {
            for (int k = t; k < cols; ++k)
              m[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)] +=
                  m[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            divides = false;
          }
      if (divides) break;
    }
    const long long d = m[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)];
    if (d == 0) break;
    out.diagonal.push_back(d < 0 ? -d : d);
  }
  out.rank = static_cast<int>(out.diagonal.size());
  return out;
}

AbelianGroup quotient_group(const Matrix& relations, int num_generators) {
  if (num_generators < 0) throw std::invalid_argument("quotient_group: negative rank");
  AbelianGroup g;
  if (relations.empty()) {
    g.rank = num_generators;
    return g;
  }
  for (const auto& row : relations)
    if (static_cast<int>(row.size()) != num_generators)
      throw std::invalid_argument("quotient_group: relation width mismatch");
  const SmithNormalForm snf = smith_normal_form(relations);
  g.rank = num_generators - snf.rank;
  for (const long long d : snf.diagonal)
    if (d != 1) g.torsion.push_back(d);
  return g;
}

AbelianGroup homology_h1(const OGraph& g, const Convention& conv) {
  const TraceResult t = trace_faces(g, conv);
  const BoundaryData b = boundary_word(t, g);
  return quotient_group(b.relations, static_cast<int>(b.cotree_edges.size()));
}

}  // namespace spinecensus
