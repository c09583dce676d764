#include <gtest/gtest.h>

#include "oracles.hpp"
#include "relconv/complex.hpp"
#include "relconv/error.hpp"
#include "relconv/gallery.hpp"

using namespace relconv;

TEST(Complex, FaceClosureOfTriangle) {
    const std::vector<Simplex> top = {{2, 0, 1}};
    const auto c = SimplicialComplex::from_maximal(top, 3);
    EXPECT_EQ(c.f_vector(), (std::vector<std::size_t>{3, 3, 1}));
    EXPECT_EQ(c.dimension(), 2);
    EXPECT_TRUE(c.contains(Simplex{0, 2}));
    EXPECT_TRUE(is_face_closed(c));
    EXPECT_EQ(c.maximal_simplices(), (std::vector<Simplex>{{0, 1, 2}}));
}

TEST(Complex, SimplicesOrderedByDimensionThenLex) {
    const std::vector<Simplex> top = {{1, 2}, {0, 3}, {0, 1}};
    const auto c = SimplicialComplex::from_maximal(top, 4);
    const std::vector<Simplex> expected = {{0}, {1}, {2}, {3}, {0, 1}, {0, 3}, {1, 2}};
    EXPECT_EQ(c.simplices(), expected);
    EXPECT_EQ(c.first_index(1), 4U);
    EXPECT_EQ(c.count(1), 3U);
    EXPECT_EQ(c.count(2), 0U);
}

TEST(Complex, EmptyComplexHasDimensionMinusOne) {
    const auto c = SimplicialComplex::from_maximal({}, 4);
    EXPECT_TRUE(c.empty());
    EXPECT_EQ(c.dimension(), -1);
    EXPECT_TRUE(c.f_vector().empty());
}

TEST(Complex, RejectsBadSimplices) {
    EXPECT_THROW(SimplicialComplex::from_maximal(std::vector<Simplex>{{0, 5}}, 3), InvalidInput);
    EXPECT_THROW(SimplicialComplex::from_maximal(std::vector<Simplex>{{1, 1}}, 3), InvalidInput);
    EXPECT_THROW(SimplicialComplex::from_maximal(std::vector<Simplex>{{}}, 3), InvalidInput);
}

TEST(Complex, FacetIndices) {
    const auto c = simplex_skeleton(2, 2);
    const auto tri = *c.find(Simplex{0, 1, 2});
    std::vector<Simplex> facets;
    for (auto i : c.facet_indices(tri)) facets.push_back(c.simplex(i));
    std::sort(facets.begin(), facets.end());
    EXPECT_EQ(facets, (std::vector<Simplex>{{0, 1}, {0, 2}, {1, 2}}));
    EXPECT_TRUE(c.facet_indices(0).empty());
}

TEST(Gallery, KnownFVectors) {
    EXPECT_EQ(octahedron_sphere().f_vector(), (std::vector<std::size_t>{6, 12, 8}));
    EXPECT_EQ(torus7().f_vector(), (std::vector<std::size_t>{7, 21, 14}));
    EXPECT_EQ(klein_bottle_min().f_vector(), (std::vector<std::size_t>{8, 24, 16}));
    EXPECT_EQ(path_complex(4).f_vector(), (std::vector<std::size_t>{5, 4}));
    EXPECT_EQ(cycle_complex(6).f_vector(), (std::vector<std::size_t>{6, 6}));
    EXPECT_EQ(grid_disk(3, 3).f_vector(), (std::vector<std::size_t>{9, 16, 8}));
    EXPECT_EQ(star_complex(3, 2).f_vector(), (std::vector<std::size_t>{7, 6}));
    EXPECT_EQ(simplex_skeleton(4, 1).f_vector(), (std::vector<std::size_t>{5, 10}));
}

TEST(Gallery, SurfacesAreClosedPseudomanifolds) {
    for (const auto& s : {octahedron_sphere(), torus7(), klein_bottle_min()}) {
        std::map<Simplex, int> edge_use;
        for (const auto& t : s.simplices())
            if (t.size() == 3)
                for (std::size_t drop = 0; drop < 3; ++drop) {
                    Simplex e = t;
                    e.erase(e.begin() + static_cast<std::ptrdiff_t>(drop));
                    ++edge_use[e];
                }
        for (const auto& [edge, uses] : edge_use) EXPECT_EQ(uses, 2) << simplex_to_string(edge);
    }
}

TEST(Gallery, NamedConstructor) {
    const std::vector<int> p{4, 3};
    EXPECT_EQ(gallery("grid_disk", p), grid_disk(4, 3));
    EXPECT_EQ(gallery("torus7", {}), torus7());
    EXPECT_THROW(gallery("no_such_complex", {}), InvalidInput);
    EXPECT_THROW(gallery("cycle", std::vector<int>{2}), InvalidInput);
}

TEST(Subcomplex, MaskMustBeFaceClosed) {
    auto amb = share(simplex_skeleton(2, 2));
    IndexSet mask(amb->size());
    mask.set(*amb->find(Simplex{0, 1}));
    EXPECT_THROW(Subcomplex(amb, mask), InvalidInput);
    const auto edge = Subcomplex::from_maximal(amb, std::vector<Simplex>{{0, 1}});
    EXPECT_EQ(edge.size(), 3U);
    EXPECT_THROW(Subcomplex::from_maximal(share(path_complex(2)), std::vector<Simplex>{{0, 2}}), InvalidInput);
}

TEST(Subcomplex, InducedAndIntersection) {
    auto amb = share(grid_disk(3, 3));
    const auto a = Subcomplex::induced(amb, make_vertex_set(9, std::vector<Vertex>{0, 1, 3, 4}));
    EXPECT_EQ(a.to_complex().f_vector(), (std::vector<std::size_t>{4, 5, 2}));
    const auto b = Subcomplex::induced(amb, make_vertex_set(9, std::vector<Vertex>{1, 4, 2, 5}));
    const auto ab = intersect_subcomplexes(a, b);
    EXPECT_EQ(ab.maximal_simplices(), (std::vector<Simplex>{{1, 4}}));
    EXPECT_THROW(intersect_subcomplexes(a, Subcomplex::whole(share(grid_disk(4, 3)))), InvalidInput);
}

TEST(Operations, BarycentricSubdivisionCounts) {
    // Flags of faces of a triangle: 7 vertices, 12 edges, 6 triangles.
    const auto sd = barycentric_subdivision(simplex_skeleton(2, 2));
    EXPECT_EQ(sd.f_vector(), (std::vector<std::size_t>{7, 12, 6}));
    EXPECT_EQ(sd.labels()[0], "{0}");
}

TEST(Operations, DisjointUnionAndSkeleton) {
    const auto u = disjoint_union(cycle_complex(3), path_complex(1));
    EXPECT_EQ(u.vertex_count(), 5U);
    EXPECT_TRUE(u.contains(Simplex{3, 4}));
    EXPECT_EQ(k_skeleton(torus7(), 1).f_vector(), (std::vector<std::size_t>{7, 21}));
}

TEST(ComplexProperty, RandomComplexesAreFaceClosedAndSorted) {
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto c = oracle::random_complex(rng, 7, 4);
        ASSERT_TRUE(is_face_closed(c));
        for (std::size_t i = 1; i < c.size(); ++i) {
            const auto& a = c.simplex(i - 1);
            const auto& b = c.simplex(i);
            ASSERT_TRUE(a.size() < b.size() || (a.size() == b.size() && a < b));
        }
        for (std::size_t i = 0; i < c.size(); ++i) ASSERT_EQ(c.find(c.simplex(i)), i);
        const auto again = SimplicialComplex::from_maximal(c.maximal_simplices(), c.vertex_count());
        ASSERT_EQ(again, c);
    }
}

TEST(ComplexProperty, SubdivisionVertexCountIsSimplexCount) {
    Rng rng(12);
    for (int trial = 0; trial < 50; ++trial) {
        const auto c = oracle::random_complex(rng, 6, 3);
        const auto sd = barycentric_subdivision(c);
        ASSERT_EQ(sd.count(0), c.size());
        ASSERT_EQ(sd.dimension(), c.dimension());
        ASSERT_TRUE(is_face_closed(sd));
    }
}
