#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relconv/convexity.hpp"

namespace relconv {

/// Star with c spines (2 <= c <= 6) of `length` edges, drawn inside a
/// (2*length+1)-square triangulated grid. Member A_i is the union of every
/// spine except spine i. Labeled points: "t1".."tc" (spine tips), "center",
/// and "x", a grid corner outside every member.
ConvexityFamily star_family(int spines, int length = 2);

/// Every subpath with at least one edge of path(n): (n+1)n/2 members.
ConvexityFamily intervals_family(int n);

/// Arcs of cycle(n). Arc (a, b) runs forward from vertex a to vertex b,
/// wrapping around; a == b is rejected.
ConvexityFamily arcs_family(int n, std::span<const std::pair<int, int>> arcs);

/// m random members, each a union of at most b+1 connected pieces grown
/// from random simplices, so every member has reduced Betti_0 <= b.
ConvexityFamily random_family(ComplexPtr ambient, int m, std::uint64_t seed, int b);

/// m random edge-connected triangle patches on a 2-dimensional surface,
/// each Z2-acyclic, rejected unless the whole family keeps TC_1 = 0.
ConvexityFamily disks_on_surface(ComplexPtr surface, int m, std::uint64_t seed);

struct FamilySpec {
    std::string name;                 ///< star, intervals, arcs, random, disks_on_surface
    std::vector<int> params;          ///< star: c[,len]; intervals: n; arcs: n,a1,b1,a2,b2,...; random: m,b; disks: m
    std::string ambient = "";         ///< gallery complex for random / disks_on_surface
    std::vector<int> ambient_params;
    std::uint64_t seed = 0;
};

ConvexityFamily family_gallery(const FamilySpec& spec);

std::vector<std::string> family_gallery_names();

}  // namespace relconv
