#include "relconv/family_gallery.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "relconv/error.hpp"
#include "relconv/gallery.hpp"
#include "relconv/homology.hpp"
#include "relconv/random.hpp"

namespace relconv {

namespace {

std::string arc_name(int a, int b) { return "[" + std::to_string(a) + ".." + std::to_string(b) + "]"; }

/// A connected piece grown from a random simplex by attaching simplices
/// that touch it in at least `overlap` vertices.
std::vector<Simplex> grow_piece(const SimplicialComplex& ambient, const std::vector<std::size_t>& pool, Rng& rng,
                                std::size_t steps, std::size_t overlap) {
    std::vector<Simplex> piece{ambient.simplex(pool[rng.below(pool.size())])};
    VertexSet covered(ambient.vertex_count());
    for (Vertex v : piece[0]) covered.set(v);
    for (std::size_t step = 0; step < steps; ++step) {
        std::vector<std::size_t> candidates;
        for (std::size_t idx : pool) {
            const Simplex& s = ambient.simplex(idx);
            if (std::find(piece.begin(), piece.end(), s) != piece.end()) continue;
            const auto touching = static_cast<std::size_t>(
                std::count_if(s.begin(), s.end(), [&](Vertex v) { return covered.test(v); }));
            if (touching >= overlap) candidates.push_back(idx);
        }
        if (candidates.empty()) break;
        const Simplex& chosen = ambient.simplex(candidates[rng.below(candidates.size())]);
        piece.push_back(chosen);
        for (Vertex v : chosen) covered.set(v);
    }
    return piece;
}

}  // namespace

ConvexityFamily star_family(int spines, int length) {
    static constexpr std::array<std::array<int, 2>, 6> directions{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, -1}}};
    if (spines < 2 || spines > 6) throw InvalidInput("star family: spines must be between 2 and 6");
    if (length < 1) throw InvalidInput("star family: spine length must be positive");
    const int side = 2 * length + 1;
    const auto ambient = share(grid_disk(side, side));
    const Vertex center = grid_vertex(side, length, length);

    std::vector<std::vector<Simplex>> spine_edges(static_cast<std::size_t>(spines));
    std::map<std::string, Vertex> labels{{"center", center}, {"x", grid_vertex(side, 0, side - 1)}};
    for (int i = 0; i < spines; ++i) {
        const auto [dx, dy] = directions[static_cast<std::size_t>(i)];
        for (int j = 0; j < length; ++j) {
            Vertex a = grid_vertex(side, length + j * dx, length + j * dy);
            Vertex b = grid_vertex(side, length + (j + 1) * dx, length + (j + 1) * dy);
            spine_edges[static_cast<std::size_t>(i)].push_back({std::min(a, b), std::max(a, b)});
        }
        labels["t" + std::to_string(i + 1)] = grid_vertex(side, length + length * dx, length + length * dy);
    }
    std::vector<NamedMember> members;
    for (int i = 0; i < spines; ++i) {
        std::vector<Simplex> edges;
        for (int j = 0; j < spines; ++j)
            if (j != i) edges.insert(edges.end(), spine_edges[static_cast<std::size_t>(j)].begin(),
                                     spine_edges[static_cast<std::size_t>(j)].end());
        members.push_back({"A" + std::to_string(i + 1), Subcomplex::from_maximal(ambient, edges)});
    }
    return ConvexityFamily(ambient, std::move(members), std::move(labels));
}

ConvexityFamily intervals_family(int n) {
    if (n < 1) throw InvalidInput("intervals family: n must be positive");
    const auto ambient = share(path_complex(n));
    std::vector<NamedMember> members;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            std::vector<Simplex> edges;
            for (int v = a; v < b; ++v) edges.push_back({static_cast<Vertex>(v), static_cast<Vertex>(v + 1)});
            members.push_back({arc_name(a, b), Subcomplex::from_maximal(ambient, edges)});
        }
    return ConvexityFamily(ambient, std::move(members));
}

ConvexityFamily arcs_family(int n, std::span<const std::pair<int, int>> arcs) {
    const auto ambient = share(cycle_complex(n));
    std::vector<NamedMember> members;
    for (const auto& [a, b] : arcs) {
        if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw InvalidInput("arcs family: bad arc " + arc_name(a, b));
        std::vector<Simplex> edges;
        for (int v = a; v != b; v = (v + 1) % n) {
            const auto p = static_cast<Vertex>(v);
            const auto q = static_cast<Vertex>((v + 1) % n);
            edges.push_back({std::min(p, q), std::max(p, q)});
        }
        members.push_back({arc_name(a, b), Subcomplex::from_maximal(ambient, edges)});
    }
    return ConvexityFamily(ambient, std::move(members));
}

ConvexityFamily random_family(ComplexPtr ambient, int m, std::uint64_t seed, int b) {
    if (!ambient || ambient->empty()) throw InvalidInput("random family: ambient must be nonempty");
    if (m < 0 || b < 0) throw InvalidInput("random family: m and b must be non-negative");
    Rng rng(seed);
    std::vector<std::size_t> all(ambient->size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const std::size_t max_steps = std::max<std::size_t>(1, ambient->vertex_count() / 2);
    std::vector<NamedMember> members;
    for (int i = 0; i < m; ++i) {
        const std::size_t pieces = 1 + rng.below(static_cast<std::uint64_t>(b) + 1);
        std::vector<Simplex> simplices;
        for (std::size_t p = 0; p < pieces; ++p) {
            auto piece = grow_piece(*ambient, all, rng, rng.below(max_steps + 1), 1);
            simplices.insert(simplices.end(), piece.begin(), piece.end());
        }
        members.push_back({"A" + std::to_string(i), Subcomplex::from_maximal(ambient, simplices)});
    }
    return ConvexityFamily(ambient, std::move(members));
}

ConvexityFamily disks_on_surface(ComplexPtr surface, int m, std::uint64_t seed) {
    if (!surface || surface->dimension() != 2) throw InvalidInput("disks_on_surface: surface must be 2-dimensional");
    if (m < 0) throw InvalidInput("disks_on_surface: m must be non-negative");
    constexpr int attempts = 500;
    Rng rng(seed);
    std::vector<std::size_t> triangles(surface->count(2));
    for (std::size_t i = 0; i < triangles.size(); ++i) triangles[i] = surface->first_index(2) + i;
    const std::size_t max_size = std::max<std::size_t>(1, triangles.size() / 3);

    std::vector<NamedMember> members;
    for (int i = 0; i < m; ++i) {
        bool placed = false;
        for (int attempt = 0; attempt < attempts && !placed; ++attempt) {
            const std::size_t target = 1 + rng.below(max_size);
            auto patch = grow_piece(*surface, triangles, rng, target - 1, 2);
            Subcomplex candidate = Subcomplex::from_maximal(surface, patch);
            const auto betti = reduced_betti(candidate, 3);
            if (betti.max() != 0) continue;
            auto trial = members;
            trial.push_back({"D" + std::to_string(i), candidate});
            const ConvexityFamily family(surface, trial);
            TcOptions options;
            options.subfamily_cap = m + 1;
            if (topological_complexity(family, 1, options).value != 0) continue;
            members = std::move(trial);
            placed = true;
        }
        if (!placed) throw BudgetExceeded("disks_on_surface: could not place member " + std::to_string(i));
    }
    return ConvexityFamily(surface, std::move(members));
}

ConvexityFamily family_gallery(const FamilySpec& spec) {
    const auto& p = spec.params;
    auto need = [&](std::size_t lo, std::size_t hi) {
        if (p.size() < lo || p.size() > hi) throw InvalidInput("family '" + spec.name + "': wrong number of parameters");
    };
    if (spec.name == "star") {
        need(1, 2);
        return star_family(p[0], p.size() > 1 ? p[1] : 2);
    }
    if (spec.name == "intervals") {
        need(1, 1);
        return intervals_family(p[0]);
    }
    if (spec.name == "arcs") {
        if (p.size() < 1 || p.size() % 2 != 1) throw InvalidInput("family 'arcs': expected n followed by pairs");
        std::vector<std::pair<int, int>> arcs;
        for (std::size_t i = 1; i + 1 < p.size(); i += 2) arcs.emplace_back(p[i], p[i + 1]);
        return arcs_family(p[0], arcs);
    }
    if (spec.name == "random" || spec.name == "disks_on_surface") {
        if (spec.ambient.empty()) throw InvalidInput("family '" + spec.name + "': needs an ambient complex");
        auto ambient = share(gallery(spec.ambient, spec.ambient_params));
        if (spec.name == "random") {
            need(2, 2);
            return random_family(std::move(ambient), p[0], spec.seed, p[1]);
        }
        need(1, 1);
        return disks_on_surface(std::move(ambient), p[0], spec.seed);
    }
    throw InvalidInput("unknown family '" + spec.name + "'");
}

std::vector<std::string> family_gallery_names() { return {"star", "intervals", "arcs", "random", "disks_on_surface"}; }

}  // namespace relconv
