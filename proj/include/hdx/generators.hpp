#pragma once

#include <cstdint>
#include <vector>

#include "hdx/complex.hpp"
#include "hdx/mixing.hpp"

namespace hdx {

// All (m+1)-subsets of n vertices as facets. Requires 0 <= m < n.
SimplicialComplex complete_skeleton(int n, int m);

// Complete (d-1)-skeleton on n vertices, plus each d-cell independently with
// probability p. Candidate d-cells are visited in lexicographic order, one
// draw each, so a seed pins the complex exactly. Requires d >= 1, n > d.
SimplicialComplex linial_meshulam(int d, int n, double p, std::uint64_t seed);

// True when every j-cell on the vertex set is present up to the dimension of
// the complex.
bool is_complete_skeleton(const SimplicialComplex& X);

// Pairwise disjoint vertex sets with the requested sizes, drawn by a partial
// shuffle of the vertex range. Requires sizes to sum to at most n.
VertexFamily random_disjoint_family(const SimplicialComplex& X,
                                    const std::vector<int>& sizes, std::uint64_t seed);

} // namespace hdx
