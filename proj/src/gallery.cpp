#include "relconv/gallery.hpp"

#include <string>

#include "relconv/error.hpp"

namespace relconv {

namespace {

SimplicialComplex from_triangles(const std::vector<Simplex>& triangles, std::size_t vertex_count) {
    return SimplicialComplex::from_maximal(triangles, vertex_count);
}

void expect_params(std::string_view name, std::span<const int> params, std::size_t count) {
    if (params.size() != count)
        throw InvalidInput(std::string(name) + ": expected " + std::to_string(count) + " parameter(s), got " +
                           std::to_string(params.size()));
}

}  // namespace

SimplicialComplex path_complex(int edges) {
    if (edges < 0) throw InvalidInput("path: edge count must be non-negative");
    if (edges == 0) return SimplicialComplex::from_maximal(std::vector<Simplex>{{0}}, 1);
    std::vector<Simplex> simplices;
    for (int i = 0; i < edges; ++i) simplices.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
    return SimplicialComplex::from_maximal(simplices, static_cast<std::size_t>(edges) + 1);
}

SimplicialComplex cycle_complex(int n) {
    if (n < 3) throw InvalidInput("cycle: needs at least 3 vertices");
    std::vector<Simplex> simplices;
    for (int i = 0; i < n; ++i) simplices.push_back({static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n)});
    return SimplicialComplex::from_maximal(simplices, static_cast<std::size_t>(n));
}

SimplicialComplex grid_disk(int width, int height) {
    if (width < 2 || height < 2) throw InvalidInput("grid_disk: width and height must be at least 2");
    std::vector<Simplex> triangles;
    for (int y = 0; y + 1 < height; ++y) {
        for (int x = 0; x + 1 < width; ++x) {
            const Vertex a = grid_vertex(width, x, y);
            const Vertex b = grid_vertex(width, x + 1, y);
            const Vertex c = grid_vertex(width, x, y + 1);
            const Vertex d = grid_vertex(width, x + 1, y + 1);
            triangles.push_back({a, b, d});
            triangles.push_back({a, c, d});
        }
    }
    return from_triangles(triangles, static_cast<std::size_t>(width * height));
}

SimplicialComplex octahedron_sphere() {
    // Poles 0 and 5; equator 1-2-3-4.
    std::vector<Simplex> triangles;
    const Vertex equator[4] = {1, 2, 3, 4};
    for (int i = 0; i < 4; ++i) {
        const Vertex a = equator[i];
        const Vertex b = equator[(i + 1) % 4];
        triangles.push_back({0, a, b});
        triangles.push_back({5, a, b});
    }
    return from_triangles(triangles, 6);
}

SimplicialComplex torus7() {
    std::vector<Simplex> triangles;
    for (Vertex i = 0; i < 7; ++i) {
        triangles.push_back({i, (i + 1) % 7, (i + 3) % 7});
        triangles.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return from_triangles(triangles, 7);
}

SimplicialComplex klein_bottle_min() {
    const std::vector<Simplex> triangles = {
        {0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 4}, {1, 2, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6},
        {2, 4, 6}, {2, 3, 5}, {2, 3, 7}, {2, 6, 7}, {3, 4, 7}, {3, 5, 6}, {4, 5, 7}, {5, 6, 7},
    };
    return from_triangles(triangles, 8);
}

SimplicialComplex star_complex(int spines, int length) {
    if (spines < 1 || length < 1) throw InvalidInput("star: needs at least one spine of positive length");
    std::vector<Simplex> edges;
    for (int i = 0; i < spines; ++i) {
        Vertex previous = 0;
        for (int j = 1; j <= length; ++j) {
            const auto v = static_cast<Vertex>(1 + i * length + (j - 1));
            edges.push_back({previous, v});
            previous = v;
        }
    }
    return SimplicialComplex::from_maximal(edges, static_cast<std::size_t>(1 + spines * length));
}

SimplicialComplex gallery(std::string_view name, std::span<const int> params) {
    if (name == "path") {
        expect_params(name, params, 1);
        return path_complex(params[0]);
    }
    if (name == "cycle") {
        expect_params(name, params, 1);
        return cycle_complex(params[0]);
    }
    if (name == "grid_disk") {
        expect_params(name, params, 2);
        return grid_disk(params[0], params[1]);
    }
    if (name == "octahedron_sphere") {
        expect_params(name, params, 0);
        return octahedron_sphere();
    }
    if (name == "torus7") {
        expect_params(name, params, 0);
        return torus7();
    }
    if (name == "klein_bottle_min") {
        expect_params(name, params, 0);
        return klein_bottle_min();
    }
    if (name == "star") {
        expect_params(name, params, 2);
        return star_complex(params[0], params[1]);
    }
    if (name == "simplex") {
        expect_params(name, params, 1);
        return simplex_skeleton(params[0], params[0]);
    }
    if (name == "simplex_skeleton") {
        expect_params(name, params, 2);
        return simplex_skeleton(params[0], params[1]);
    }
    throw InvalidInput("unknown gallery complex '" + std::string(name) + "'");
}

std::vector<std::string_view> gallery_names() {
    return {"path", "cycle", "grid_disk", "octahedron_sphere", "torus7", "klein_bottle_min",
            "star", "simplex", "simplex_skeleton"};
}

}  // namespace relconv
