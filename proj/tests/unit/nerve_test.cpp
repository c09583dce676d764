#include <gtest/gtest.h>

#include "oracles.hpp"
#include "relconv/combinatorics.hpp"
#include "relconv/error.hpp"
#include "relconv/family_gallery.hpp"
#include "relconv/gallery.hpp"
#include "relconv/nerve.hpp"

using namespace relconv;

namespace {

ConvexityFamily grid_family(std::uint64_t seed, int members) {
    return random_family(share(grid_disk(4, 3)), members, seed, 1);
}

/// Ordered tuples of disjoint t-sets with every transversal an edge, over l!.
std::uint64_t brute_copies(const UniformHypergraph& g, std::size_t t) {
    const std::size_t ell = g.uniformity();
    const std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> tsets;
    for_each_combination(n, t, [&](const std::vector<std::size_t>& s) {
        tsets.push_back(s);
        return true;
    });
    std::uint64_t ordered = 0;
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self) -> void {
        if (pick.size() == ell) {
            std::set<std::size_t> used;
            for (auto p : pick)
                for (auto v : tsets[p]) used.insert(v);
            if (used.size() != ell * t) return;
            std::vector<std::size_t> idx(ell, 0);
            while (true) {
                std::vector<std::size_t> e;
                for (std::size_t i = 0; i < ell; ++i) e.push_back(tsets[pick[i]][idx[i]]);
                std::sort(e.begin(), e.end());
                if (!g.has_edge(e)) return;
                std::size_t i = 0;
                while (i < ell && ++idx[i] == t) idx[i++] = 0;
                if (i == ell) break;
            }
            ++ordered;
            return;
        }
        for (std::size_t p = 0; p < tsets.size(); ++p) {
            pick.push_back(p);
            self(self);
            pick.pop_back();
        }
    };
    rec(rec);
    std::uint64_t fact = 1;
    for (std::size_t i = 2; i <= ell; ++i) fact *= i;
    return ordered / fact;
}

}  // namespace

TEST(Nerve, IntervalsOnShortPath) {
    const auto f = intervals_family(2);  // [0..1], [0..2], [1..2]
    const auto r = nerve(f, 2);
    EXPECT_EQ(r.profile.f, (std::vector<std::uint64_t>{3, 3, 1}));
    EXPECT_EQ(r.complex.labels().size(), 3U);
    EXPECT_EQ(r.complex.labels()[0], f.members()[0].name);
}

TEST(Nerve, CycleArcsNerveIsAHollowTriangle) {
    const std::vector<std::pair<int, int>> arcs = {{0, 3}, {2, 5}, {4, 1}};
    const auto r = nerve(arcs_family(6, arcs), 2);
    EXPECT_EQ(r.profile.f, (std::vector<std::uint64_t>{3, 3, 0}));
}

TEST(NerveProperty, FaceCountsMatchSubsetRecount) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto f = grid_family(seed, 2 + static_cast<int>(seed % 8));
        const std::size_t n = f.size();
        std::vector<std::uint64_t> recount(n, 0);
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
            if (oracle::common_point(f, mask)) ++recount[static_cast<std::size_t>(__builtin_popcountll(mask)) - 1];
        ASSERT_EQ(nerve(f, static_cast<int>(n) - 1, 1).profile.f, recount) << "seed " << seed;
        ASSERT_EQ(nerve(f, static_cast<int>(n) - 1, 3).profile.f, recount);
        for (std::size_t s = 1; s <= n; ++s) ASSERT_EQ(count_intersecting(f, s), recount[s - 1]);
    }
}

TEST(FractionalHelly, AlphaAndBeta) {
    const auto f = intervals_family(2);
    const auto s = fractional_helly_stats(f, 2);
    EXPECT_EQ(s.alpha, Ratio(1));
    EXPECT_EQ(s.beta, Ratio(1));  // vertex 1 lies in all three intervals
    EXPECT_EQ(s.deepest_vertex, std::optional<Vertex>(1));
    EXPECT_THROW(fractional_helly_stats(f, 4), InvalidInput);
}

TEST(PqProperty, MatchesBruteForce) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto f = grid_family(seed, 6);
        for (int p = 2; p <= 4; ++p)
            for (int q = 2; q <= p; ++q) {
                bool brute = true;
                for_each_combination(f.size(), static_cast<std::size_t>(p), [&](const std::vector<std::size_t>& g) {
                    bool some = false;
                    for_each_combination(g.size(), static_cast<std::size_t>(q), [&](const std::vector<std::size_t>& sub) {
                        std::uint64_t mask = 0;
                        for (auto i : sub) mask |= std::uint64_t{1} << g[i];
                        some = oracle::common_point(f, mask);
                        return !some;
                    });
                    brute = brute && some;
                    return brute;
                });
                const auto got = pq_property(f, p, q);
                ASSERT_EQ(got.holds, brute) << "seed " << seed << " p " << p << " q " << q;
                if (!got.holds) ASSERT_EQ(got.witness.size(), static_cast<std::size_t>(p));
            }
    }
}

TEST(Transversal, MatchesBruteForce) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto f = grid_family(seed, 1 + static_cast<int>(seed % 6));
        const auto got = min_transversal(f, 12);
        const auto want = oracle::transversal(f);
        ASSERT_TRUE(want);
        ASSERT_EQ(got.marker, ValueMarker::exact);
        ASSERT_EQ(got.value, *want) << "seed " << seed;
        for (std::size_t i = 0; i < f.size(); ++i) {
            bool hit = false;
            for (Vertex v : got.witness) hit = hit || f.member_vertices(i).test(v);
            ASSERT_TRUE(hit);
        }
    }
}

TEST(Transversal, CapAndEmptyMember) {
    const std::vector<std::pair<int, int>> arcs = {{0, 1}, {2, 3}, {4, 5}};
    const auto f = arcs_family(6, arcs);
    const auto capped = min_transversal(f, 2);
    EXPECT_EQ(capped.marker, ValueMarker::greater_than);
    EXPECT_EQ(min_transversal(f, 3).value, 3U);
    auto amb = share(path_complex(1));
    const ConvexityFamily with_empty(amb, {{"E", Subcomplex::none(amb)}});
    EXPECT_EQ(min_transversal(with_empty, 3).marker, ValueMarker::infinite_within_pool);
}

TEST(PartiteCopies, FourCycle) {
    const UniformHypergraph c4(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    EXPECT_EQ(count_partite_copies(c4, 2), 1U);
    EXPECT_EQ(count_partite_copies(c4, 1), 4U);
    const UniformHypergraph k4(4, 2, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    EXPECT_EQ(count_partite_copies(k4, 2), 3U);
    EXPECT_THROW(UniformHypergraph(3, 2, {{0, 0}}), InvalidInput);
}

TEST(PartiteCopies, MatchesBruteForce) {
    Rng rng(31);
    for (std::size_t ell = 2; ell <= 3; ++ell)
        for (std::size_t t = 1; t <= 2; ++t)
            for (int trial = 0; trial < 15; ++trial) {
                const std::size_t n = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(ell * t), 8));
                std::vector<std::vector<std::size_t>> edges;
                const std::uint64_t keep = 30 + rng.below(71);
                for_each_combination(n, ell, [&](const std::vector<std::size_t>& e) {
                    if (rng.below(100) < keep) edges.push_back(e);
                    return true;
                });
                const UniformHypergraph g(n, ell, edges);
                ASSERT_EQ(count_partite_copies(g, static_cast<int>(t)), brute_copies(g, t))
                    << "l " << ell << " t " << t << " n " << n;
            }
}

TEST(Bootstrap, DensitiesAndThreshold) {
    const auto f = intervals_family(2);
    const auto b = bootstrap_check(f, 0, Ratio(1, 2));
    EXPECT_EQ(b.f_k, 3U);
    EXPECT_EQ(b.f_k1, 3U);
    EXPECT_EQ(b.alpha1_hat, Ratio(1));
    EXPECT_EQ(b.alpha2_hat, Ratio(1));
    EXPECT_TRUE(b.meets_alpha1);
    EXPECT_THROW(bootstrap_check(f, 2, Ratio(1, 2)), InvalidInput);
}

TEST(Bootstrap, DensitiesAreRecounts) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto f = grid_family(seed, 7);
        const auto b = bootstrap_check(f, 1, Ratio(1, 3));
        ASSERT_EQ(b.alpha1_hat, Ratio(static_cast<std::int64_t>(count_intersecting(f, 2)), 21));
        ASSERT_EQ(b.alpha2_hat, Ratio(static_cast<std::int64_t>(count_intersecting(f, 3)), 35));
        ASSERT_EQ(b.meets_alpha1, b.alpha1_hat >= Ratio(1, 3));
    }
}

TEST(GzProbe, ApplicableOnlyWithoutHigherFaces) {
    const std::vector<std::pair<int, int>> arcs = {{0, 3}, {2, 5}, {4, 1}};
    const auto g = gz_inequality_probe(arcs_family(6, arcs), 2);
    EXPECT_TRUE(g.applicable);
    EXPECT_EQ(g.f_km1, 3U);
    EXPECT_EQ(g.f_k, 0U);
    const auto h = gz_inequality_probe(intervals_family(3), 2);
    EXPECT_FALSE(h.applicable);
}

TEST(DisksOnSurface, EveryFamilyIsAcyclic) {
    auto sphere = share(octahedron_sphere());
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto f = disks_on_surface(sphere, 4, seed);
        EXPECT_EQ(f.size(), 4U);
        EXPECT_EQ(topological_complexity(f, 1).value, 0U);
    }
}
