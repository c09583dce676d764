#pragma once

#include <cstdint>
#include <vector>

#include "relconv/chain_map.hpp"
#include "relconv/convexity.hpp"

namespace relconv {

/// K4's 1-skeleton drawn without crossings in grid_disk(5,5): corners
/// (0,0), (4,0), (0,4) and the middle vertex (2,2), edges along grid paths.
SimplicialChainMap k4_planar_drawing();

/// A constrained chain map together with its family, labels and designated
/// points, built so that hulls of disjoint point sets are disjoint.
struct Lemma7Fixture {
    ConvexityFamily family;
    SimplicialChainMap map;
    ConstraintMap phi;
    std::vector<Vertex> points;
};

/// Grid ambient with 2 or 3 designated points p_i. Members: {p_i}, a random
/// monotone grid path from p_i to p_j avoiding the other points, the whole
/// grid, and random extra members containing some of these. The source is
/// an edge or a triangle (sometimes only its boundary); vertices map to
/// their points, edges to a shortest path inside the hull of their ends,
/// triangles to a 2-chain inside the hull of all points solving the
/// boundary equation with free variables set to zero.
Lemma7Fixture random_lemma7_fixture(std::uint64_t seed);

}  // namespace relconv
