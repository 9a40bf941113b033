#pragma once

#include <vector>

#include "slopecalc/slope.hpp"

namespace slopecalc {

// A path in the Farey graph together with its partition into maximal
// continued fraction blocks. Each block is a contiguous range of edge
// indices; edge i joins vertices[i] and vertices[i + 1].
struct FareyPath {
    std::vector<Slope> vertices;
    std::vector<std::vector<int>> blocks;

    int edge_count() const { return static_cast<int>(vertices.size()) - 1; }
};

// True iff the contiguous triple (u, v, w) of pairwise-adjacent path
// vertices is unimodular-equivalent, in order, to a run of consecutive
// integers. With d1 = det(v(u), v(v)) and d2 = det(v(v), v(w)) this is
// exactly the relation d1*v(u) + d2*v(w) = +-2*v(v); the determinant
// factors make the test independent of representative signs, hence
// invariant under unimodular changes of coordinates.
bool cf_block_triple(const Slope& u, const Slope& v, const Slope& w);

// Maximal continued-fraction-block partition of an adjacency path.
// Accepts any sequence of pairwise-adjacent distinct vertices.
std::vector<std::vector<int>> cf_blocks(const std::vector<Slope>& vertices);

// The minimal clockwise path from a to b: greedily step from the current
// vertex to its Farey neighbor lying furthest along the clockwise arc
// toward b. The result is a geodesic and every intermediate vertex lies
// strictly inside the clockwise arc from a to b.
FareyPath minimal_cw_path(const Slope& a, const Slope& b);

// Negative continued fraction expansion of a finite slope s < 0:
// s = a0 - 1/(a1 - 1/(...)), produced by the floor recursion. For
// s <= -1 every coefficient after the first is <= -2, and the
// truncations are the vertices of minimal_cw_path(infinity, s).
std::vector<long long> negative_cf(const Slope& s);

struct ArcNeighbor {
    Slope slope;
    bool is_endpoint = false;
};

// All Farey neighbors of s0 inside the closed clockwise arc [x, y],
// returned in arc order from x to y. When the arc excludes a punctured
// neighborhood of s0 the answer is finite and exact and the bound is
// ignored; when the arc accumulates at s0 the neighbors with denominator
// at most denominator_bound are returned.
std::vector<ArcNeighbor> neighbors_in_arc(const Slope& s0, const Slope& x, const Slope& y,
                                          long long denominator_bound);

} // namespace slopecalc
