#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "relconv/complex.hpp"

namespace relconv {

/// Path with `edges` edges on vertices 0..edges.
SimplicialComplex path_complex(int edges);

/// Cycle with n >= 3 vertices and n edges.
SimplicialComplex cycle_complex(int n);

/// Triangulated rectangle on a width x height vertex grid. Vertex (x, y) has
/// index y * width + x; each unit square is split along its (x,y)-(x+1,y+1)
/// diagonal.
SimplicialComplex grid_disk(int width, int height);

inline Vertex grid_vertex(int width, int x, int y) { return static_cast<Vertex>(y * width + x); }

/// Boundary of the octahedron: 6 vertices, 12 edges, 8 triangles.
SimplicialComplex octahedron_sphere();

/// Moebius' 7-vertex torus: triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7.
SimplicialComplex torus7();

/// Minimal (8-vertex, 16-triangle) Klein bottle.
SimplicialComplex klein_bottle_min();

/// Star with `spines` paths of `length` edges glued at center vertex 0.
/// Spine i (0-based) uses vertices 1 + i*length .. (i+1)*length, tip last.
SimplicialComplex star_complex(int spines, int length);

/// Named constructor used by fixtures and the CLI:
///   path(n), cycle(n), grid_disk(w,h), octahedron_sphere, torus7,
///   klein_bottle_min, star(c,len), simplex(n), simplex_skeleton(n,k).
SimplicialComplex gallery(std::string_view name, std::span<const int> params);

std::vector<std::string_view> gallery_names();

}  // namespace relconv
