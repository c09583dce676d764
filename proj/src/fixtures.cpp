#include "relconv/fixtures.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "relconv/error.hpp"
#include "relconv/family_gallery.hpp"
#include "relconv/gallery.hpp"
#include "relconv/random.hpp"

namespace relconv {

namespace {

using Point = std::pair<int, int>;

Chain path_chain(const SimplicialComplex& grid, int width, const std::vector<Point>& points) {
    Chain chain;
    for (std::size_t i = 0; i + 1 < points.size(); ++i) {
        Vertex a = grid_vertex(width, points[i].first, points[i].second);
        Vertex b = grid_vertex(width, points[i + 1].first, points[i + 1].second);
        const Simplex edge{std::min(a, b), std::max(a, b)};
        const auto idx = grid.find(edge);
        if (!idx) throw std::logic_error("grid path uses a missing edge " + simplex_to_string(edge));
        chain.push_back(*idx);
    }
    std::sort(chain.begin(), chain.end());
    return chain;
}

/// Random lattice path from a to b moving only towards b, using the grid's
/// diagonal when both coordinates move in the same direction.
std::vector<Point> monotone_path(Point a, Point b, Rng& rng) {
    std::vector<Point> path{a};
    Point at = a;
    while (at != b) {
        const int dx = (b.first > at.first) - (b.first < at.first);
        const int dy = (b.second > at.second) - (b.second < at.second);
        std::vector<Point> steps;
        if (dx != 0) steps.push_back({dx, 0});
        if (dy != 0) steps.push_back({0, dy});
        if (dx != 0 && dx == dy) steps.push_back({dx, dy});
        const Point step = steps[rng.below(steps.size())];
        at = {at.first + step.first, at.second + step.second};
        path.push_back(at);
    }
    return path;
}

/// Shortest edge path from a to b inside a subcomplex, lowest vertex first.
std::optional<Chain> bfs_path(const Subcomplex& within, Vertex a, Vertex b) {
    const auto& ambient = within.ambient();
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> adjacent(ambient.vertex_count());
    for (std::size_t e = ambient.first_index(1), end = e + ambient.count(1); e < end; ++e) {
        if (!within.contains_index(e)) continue;
        const Simplex& s = ambient.simplex(e);
        adjacent[s[0]].push_back({s[1], e});
        adjacent[s[1]].push_back({s[0], e});
    }
    std::vector<std::optional<std::size_t>> via(ambient.vertex_count());
    std::vector<bool> seen(ambient.vertex_count(), false);
    std::deque<Vertex> queue{a};
    seen[a] = true;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        if (v == b) break;
        for (const auto& [w, e] : adjacent[v])
            if (!seen[w]) {
                seen[w] = true;
                via[w] = e;
                queue.push_back(w);
            }
    }
    if (!seen[b]) return std::nullopt;
    Chain chain;
    for (Vertex v = b; v != a;) {
        const std::size_t e = *via[v];
        chain.push_back(e);
        const Simplex& s = ambient.simplex(e);
        v = s[0] == v ? s[1] : s[0];
    }
    std::sort(chain.begin(), chain.end());
    return chain;
}

std::optional<Lemma7Fixture> try_fixture(Rng& rng) {
    const int width = static_cast<int>(rng.between(4, 6));
    const int height = static_cast<int>(rng.between(4, 6));
    const auto grid = share(grid_disk(width, height));
    const std::size_t count = 2 + rng.below(2);

    std::vector<Point> designated;
    while (designated.size() < count) {
        const Point p{static_cast<int>(rng.below(static_cast<std::uint64_t>(width))),
                      static_cast<int>(rng.below(static_cast<std::uint64_t>(height)))};
        if (std::find(designated.begin(), designated.end(), p) == designated.end()) designated.push_back(p);
    }
    std::vector<Vertex> points;
    for (const auto& p : designated) points.push_back(grid_vertex(width, p.first, p.second));

    std::vector<NamedMember> members;
    std::vector<Subcomplex> basics;
    for (std::size_t i = 0; i < count; ++i) {
        const Simplex vertex{points[i]};
        basics.push_back(Subcomplex::from_maximal(grid, std::span<const Simplex>(&vertex, 1)));
        members.push_back({"P" + std::to_string(i), basics.back()});
    }
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = i + 1; j < count; ++j) {
            const auto path = monotone_path(designated[i], designated[j], rng);
            for (std::size_t k = 0; k < count; ++k)
                if (k != i && k != j && std::find(path.begin(), path.end(), designated[k]) != path.end())
                    return std::nullopt;
            basics.push_back(chain_support(grid, path_chain(*grid, width, path)));
            members.push_back({"P" + std::to_string(i) + std::to_string(j), basics.back()});
        }
    members.push_back({"X", Subcomplex::whole(grid)});
    const std::size_t extras = rng.below(4);
    for (std::size_t e = 0; e < extras; ++e) {
        IndexSet mask = random_family(grid, 1, rng.next(), 0).member(0).mask();
        for (const auto& b : basics)
            if (rng.coin()) mask |= b.mask();
        members.push_back({"E" + std::to_string(e), Subcomplex(grid, mask)});
    }
    ConvexityFamily family(grid, std::move(members));

    // Source: an edge, a hollow triangle or a full triangle on the points.
    const bool filled = count == 3 && rng.coin();
    std::vector<Simplex> source_max;
    if (count == 2) source_max = {{0, 1}};
    else if (filled) source_max = {{0, 1, 2}};
    else source_max = {{0, 1}, {0, 2}, {1, 2}};
    const auto source = share(SimplicialComplex::from_maximal(source_max, count));

    std::vector<Chain> images(source->size());
    ConstraintMap phi(source->size(), VertexSet(grid->vertex_count()));
    for (std::size_t s = 0; s < source->size(); ++s) {
        const Simplex& sigma = source->simplex(s);
        for (Vertex v : sigma) phi[s].set(points[v]);
        if (sigma.size() == 1) {
            images[s] = {*grid->find(Simplex{points[sigma[0]]})};
        } else if (sigma.size() == 2) {
            auto path = bfs_path(hull(family, phi[s]), points[sigma[0]], points[sigma[1]]);
            if (!path) return std::nullopt;
            images[s] = std::move(*path);
        } else {
            Chain boundary;
            for (std::size_t f : source->facet_indices(s)) boundary = chain_add(boundary, images[f]);
            auto fill = fill_boundary(hull(family, phi[s]), 2, boundary);
            if (!fill) return std::nullopt;
            images[s] = std::move(*fill);
        }
    }
    return Lemma7Fixture{std::move(family), SimplicialChainMap(source, grid, std::move(images)), std::move(phi),
                         std::move(points)};
}

}  // namespace

SimplicialChainMap k4_planar_drawing() {
    constexpr int w = 5;
    const auto grid = share(grid_disk(w, w));
    const auto k4 = share(simplex_skeleton(3, 1));
    const std::vector<Point> corners{{0, 0}, {4, 0}, {0, 4}, {2, 2}};
    const std::map<std::pair<int, int>, std::vector<Point>> routes{
        {{0, 1}, {{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}}},
        {{0, 2}, {{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}}},
        {{0, 3}, {{0, 0}, {1, 1}, {2, 2}}},
        {{1, 2}, {{4, 0}, {4, 1}, {4, 2}, {4, 3}, {4, 4}, {3, 4}, {2, 4}, {1, 4}, {0, 4}}},
        {{1, 3}, {{4, 0}, {4, 1}, {3, 1}, {2, 1}, {2, 2}}},
        {{2, 3}, {{0, 4}, {1, 4}, {1, 3}, {2, 3}, {2, 2}}},
    };
    std::vector<Chain> images(k4->size());
    for (std::size_t s = 0; s < k4->size(); ++s) {
        const Simplex& sigma = k4->simplex(s);
        if (sigma.size() == 1) {
            const auto& p = corners[sigma[0]];
            images[s] = {*grid->find(Simplex{grid_vertex(w, p.first, p.second)})};
        } else {
            images[s] = path_chain(*grid, w, routes.at({static_cast<int>(sigma[0]), static_cast<int>(sigma[1])}));
        }
    }
    return SimplicialChainMap(k4, grid, std::move(images));
}

Lemma7Fixture random_lemma7_fixture(std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 1000; ++attempt)
        if (auto fixture = try_fixture(rng)) return std::move(*fixture);
    throw BudgetExceeded("random_lemma7_fixture: no fixture after 1000 attempts");
}

}  // namespace relconv
