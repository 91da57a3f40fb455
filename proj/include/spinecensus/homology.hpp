#pragma once

#include <vector>

#include "spinecensus/convention.hpp"
#include "spinecensus/ograph.hpp"

namespace spinecensus {

// Smith normal form data of an integer matrix: the invariant factors
// d_1 | d_2 | ... (positive, rank many of them).
struct SmithNormalForm {
  int rank = 0;
  std::vector<long long> diagonal;
};

SmithNormalForm smith_normal_form(std::vector<std::vector<long long>> m);

// Structure of Z^generators / <rows of relations>.
struct AbelianGroup {
  int rank = 0;                     // free rank
  std::vector<long long> torsion;   // invariant factors > 1
};

AbelianGroup quotient_group(const std::vector<std::vector<long long>>& relations,
                            int num_generators);

// First homology of the polyhedron defined by an o-graph (equivalently of
// the manifold it is a spine of), from the face relations over a cotree.
AbelianGroup homology_h1(const OGraph& g, const Convention& conv = active_convention());

}  // namespace spinecensus
