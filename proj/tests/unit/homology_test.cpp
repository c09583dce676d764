#include <gtest/gtest.h>

#include "oracles.hpp"
#include "relconv/error.hpp"
#include "relconv/gallery.hpp"
#include "relconv/gf2_matrix.hpp"
#include "relconv/homology.hpp"

using namespace relconv;

namespace {

std::vector<std::size_t> betti(const SimplicialComplex& c, int up_to) { return reduced_betti(c, up_to).values; }

}  // namespace

TEST(Betti, StandardSurfaces) {
    EXPECT_EQ(betti(octahedron_sphere(), 3), (std::vector<std::size_t>{0, 0, 1}));
    EXPECT_EQ(betti(torus7(), 3), (std::vector<std::size_t>{0, 2, 1}));
    EXPECT_EQ(betti(klein_bottle_min(), 3), (std::vector<std::size_t>{0, 2, 1}));
}

TEST(Betti, CyclesPathsAndPoints) {
    for (int n = 3; n <= 12; ++n) EXPECT_EQ(betti(cycle_complex(n), 2), (std::vector<std::size_t>{0, 1})) << n;
    EXPECT_EQ(betti(path_complex(5), 2), (std::vector<std::size_t>{0, 0}));
    EXPECT_EQ(betti(simplex_skeleton(3, 0), 1), (std::vector<std::size_t>{3}));
    EXPECT_EQ(betti(simplex_skeleton(3, 2), 3), (std::vector<std::size_t>{0, 0, 1}));
    EXPECT_EQ(betti(grid_disk(4, 4), 3), (std::vector<std::size_t>{0, 0, 0}));
}

TEST(Betti, EmptyComplexReportsZerosAndFlag) {
    const auto r = reduced_betti(SimplicialComplex::from_maximal({}, 3), 2);
    EXPECT_TRUE(r.complex_is_empty);
    EXPECT_EQ(r.values, (std::vector<std::size_t>{0, 0}));
    EXPECT_THROW(reduced_betti(torus7(), 0), InvalidInput);
}

TEST(Betti, SubcomplexOverload) {
    auto amb = share(grid_disk(3, 3));
    const std::vector<Simplex> ring = {{0, 1}, {1, 2}, {2, 5}, {5, 8}, {7, 8}, {6, 7}, {3, 6}, {0, 3}};
    const auto s = Subcomplex::from_maximal(amb, ring);
    EXPECT_EQ(reduced_betti(s, 2).values, (std::vector<std::size_t>{0, 1}));
}

TEST(Boundary, AugmentationRow) {
    const auto m = boundary_matrix(path_complex(2), 0);
    EXPECT_EQ(m.rows(), 1U);
    EXPECT_EQ(m.cols(), 3U);
    EXPECT_EQ(gf2_rank(m), 1U);
}

TEST(HomologyProperty, BoundaryOfBoundaryVanishes) {
    Rng rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const auto c = oracle::random_complex(rng, 7, 4);
        for (int d = 1; d <= c.dimension(); ++d) {
            const auto hi = boundary_matrix(c, d);
            const auto lo = boundary_matrix(c, d - 1);
            // (lo * hi)[r][col] over Z2.
            for (std::size_t col = 0; col < hi.cols(); ++col)
                for (std::size_t r = 0; r < lo.rows(); ++r) {
                    bool bit = false;
                    for (std::size_t mid = 0; mid < hi.rows(); ++mid) bit ^= lo.get(r, mid) && hi.get(mid, col);
                    ASSERT_FALSE(bit) << "trial " << trial << " dim " << d;
                }
        }
    }
}

TEST(HomologyProperty, MatchesDenseEliminationOracle) {
    Rng rng(22);
    for (int trial = 0; trial < 150; ++trial) {
        const auto c = oracle::random_complex(rng, 8, 4);
        const int up = c.dimension() + 1;
        ASSERT_EQ(betti(c, up), oracle::reduced_betti(c.simplices(), up)) << "trial " << trial;
    }
}

TEST(HomologyProperty, EulerPoincare) {
    Rng rng(23);
    for (int trial = 0; trial < 150; ++trial) {
        const auto c = oracle::random_complex(rng, 8, 4);
        const auto f = c.f_vector();
        const auto b = betti(c, c.dimension() + 1);
        long long chi_f = 0;
        long long chi_b = 1;  // reduced numbers drop one from dimension 0
        for (std::size_t d = 0; d < f.size(); ++d) {
            const long long sign = d % 2 == 0 ? 1 : -1;
            chi_f += sign * static_cast<long long>(f[d]);
            chi_b += sign * static_cast<long long>(b[d]);
        }
        ASSERT_EQ(chi_f, chi_b) << "trial " << trial;
    }
}

TEST(HomologyProperty, SubdivisionInvariance) {
    Rng rng(24);
    for (int trial = 0; trial < 40; ++trial) {
        const auto c = oracle::random_complex(rng, 6, 3);
        const int up = c.dimension() + 1;
        ASSERT_EQ(betti(c, up), betti(barycentric_subdivision(c), up));
    }
    EXPECT_EQ(betti(barycentric_subdivision(torus7()), 3), (std::vector<std::size_t>{0, 2, 1}));
}

TEST(HomologyProperty, DisjointUnionAddsComponents) {
    Rng rng(25);
    for (int trial = 0; trial < 60; ++trial) {
        const auto a = oracle::random_complex(rng, 5, 3);
        const auto b = oracle::random_complex(rng, 5, 3);
        const int up = std::max(a.dimension(), b.dimension()) + 1;
        const auto ba = betti(a, up);
        const auto bb = betti(b, up);
        const auto bu = betti(disjoint_union(a, b), up);
        ASSERT_EQ(bu[0], ba[0] + bb[0] + 1);
        for (int d = 1; d < up; ++d) ASSERT_EQ(bu[static_cast<std::size_t>(d)], ba[static_cast<std::size_t>(d)] + bb[static_cast<std::size_t>(d)]);
    }
}

TEST(Gf2, RankAndSolveAgreeWithDenseOracle) {
    Rng rng(26);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(rng.between(1, 9));
        const std::size_t cols = static_cast<std::size_t>(rng.between(1, 70));
        GF2Matrix m(rows, cols);
        std::vector<std::vector<int>> dense(rows, std::vector<int>(cols, 0));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c)
                if (rng.below(3) == 0) {
                    m.set(r, c, true);
                    dense[r][c] = 1;
                }
        ASSERT_EQ(gf2_rank(m), oracle::gf2_rank(dense));
        std::vector<bool> b(rows);
        for (std::size_t r = 0; r < rows; ++r) b[r] = rng.coin();
        const auto x = gf2_solve(m, b);
        // Solvable iff appending b keeps the rank.
        auto augmented = dense;
        for (std::size_t r = 0; r < rows; ++r) augmented[r].push_back(b[r] ? 1 : 0);
        ASSERT_EQ(x.has_value(), oracle::gf2_rank(augmented) == oracle::gf2_rank(dense));
        if (x) {
            for (std::size_t r = 0; r < rows; ++r) {
                bool bit = false;
                for (std::size_t c = 0; c < cols; ++c) bit ^= dense[r][c] && (*x)[c];
                ASSERT_EQ(bit, static_cast<bool>(b[r]));
            }
        }
    }
}
