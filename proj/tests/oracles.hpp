#pragma once

// Slow reference implementations written straight from the definitions.
// They share no code with the library beyond reading its data structures.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "relconv/complex.hpp"
#include "relconv/convexity.hpp"
#include "relconv/random.hpp"

namespace oracle {

using relconv::ConvexityFamily;
using relconv::Simplex;
using relconv::SimplicialComplex;
using relconv::Vertex;

using PointSet = std::set<Vertex>;

/// Vertices of a member, read off its 0-simplices.
inline PointSet member_points(const ConvexityFamily& f, std::size_t i) {
    PointSet out;
    const auto& amb = f.ambient();
    for (std::size_t s = 0; s < amb.size(); ++s)
        if (f.member(i).contains_index(s) && amb.simplex(s).size() == 1) out.insert(amb.simplex(s)[0]);
    return out;
}

inline PointSet all_points(const ConvexityFamily& f) {
    PointSet out;
    for (const auto& s : f.ambient().simplices())
        if (s.size() == 1) out.insert(s[0]);
    return out;
}

/// Intersection of the members containing S, or every ambient vertex.
inline PointSet hull(const ConvexityFamily& f, const PointSet& s) {
    PointSet out = all_points(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const PointSet m = member_points(f, i);
        if (!std::includes(m.begin(), m.end(), s.begin(), s.end())) continue;
        PointSet next;
        std::set_intersection(out.begin(), out.end(), m.begin(), m.end(), std::inserter(next, next.end()));
        out = std::move(next);
    }
    return out;
}

inline std::vector<PointSet> subsets_of_size(const std::vector<Vertex>& pool, std::size_t r) {
    std::vector<PointSet> out;
    const std::size_t n = pool.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != r) continue;
        PointSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U) s.insert(pool[i]);
        out.push_back(std::move(s));
    }
    return out;
}

/// Tries every map from points to {0..k-1}.
inline bool partitionable(const ConvexityFamily& f, const PointSet& points, int k, bool nonempty) {
    const std::vector<Vertex> pts(points.begin(), points.end());
    std::vector<int> label(pts.size(), 0);
    while (true) {
        std::vector<PointSet> parts(static_cast<std::size_t>(k));
        for (std::size_t i = 0; i < pts.size(); ++i) parts[static_cast<std::size_t>(label[i])].insert(pts[i]);
        bool ok = true;
        if (nonempty)
            for (const auto& p : parts) ok = ok && !p.empty();
        if (ok) {
            PointSet meet = hull(f, parts[0]);
            for (std::size_t j = 1; j < parts.size(); ++j) {
                const PointSet h = hull(f, parts[j]);
                PointSet next;
                std::set_intersection(meet.begin(), meet.end(), h.begin(), h.end(), std::inserter(next, next.end()));
                meet = std::move(next);
            }
            if (!meet.empty()) return true;
        }
        std::size_t i = 0;
        while (i < label.size() && ++label[i] == k) label[i++] = 0;
        if (i == label.size()) return false;
    }
}

/// Smallest r with every r-subset of the ambient vertices partitionable
/// into k parts; nullopt when no r up to the vertex count works.
inline std::optional<std::size_t> tverberg(const ConvexityFamily& f, int k, bool nonempty = false) {
    const PointSet pts = all_points(f);
    const std::vector<Vertex> pool(pts.begin(), pts.end());
    for (std::size_t r = 1; r <= pool.size(); ++r) {
        bool all = true;
        for (const auto& s : subsets_of_size(pool, r))
            if (!partitionable(f, s, k, nonempty)) {
                all = false;
                break;
            }
        if (all) return r;
    }
    return std::nullopt;
}

inline bool common_point(const ConvexityFamily& f, std::uint64_t mask) {
    PointSet meet = all_points(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!(mask >> i & 1U)) continue;
        const PointSet m = member_points(f, i);
        PointSet next;
        std::set_intersection(meet.begin(), meet.end(), m.begin(), m.end(), std::inserter(next, next.end()));
        meet = std::move(next);
    }
    return !meet.empty();
}

/// Largest subfamily with empty intersection all of whose one-smaller
/// subfamilies intersect (0 when there is none).
inline std::size_t helly(const ConvexityFamily& f) {
    std::size_t best = 0;
    const std::size_t n = f.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (common_point(f, mask)) continue;
        bool minimal = true;
        for (std::size_t i = 0; i < n && minimal; ++i)
            if ((mask >> i & 1U) && !common_point(f, mask & ~(std::uint64_t{1} << i))) minimal = false;
        if (minimal) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
    }
    return best;
}

/// Largest over (S, x in hull S, |S| <= cap) of the fewest points of S whose
/// hull still holds x.
inline std::size_t caratheodory(const ConvexityFamily& f, std::size_t cap) {
    const PointSet pts = all_points(f);
    const std::vector<Vertex> pool(pts.begin(), pts.end());
    std::size_t best = 0;
    for (std::size_t r = 0; r <= std::min(cap, pool.size()); ++r) {
        for (const auto& s : subsets_of_size(pool, r)) {
            const std::vector<Vertex> sv(s.begin(), s.end());
            for (Vertex x : hull(f, s)) {
                std::size_t need = r;
                for (std::size_t t = 0; t < r && need == r; ++t)
                    for (const auto& sub : subsets_of_size(sv, t))
                        if (hull(f, sub).count(x)) {
                            need = t;
                            break;
                        }
                best = std::max(best, need);
            }
        }
    }
    return best;
}

/// Rank over Z2 of a dense 0/1 matrix.
inline std::size_t gf2_rank(std::vector<std::vector<int>> rows) {
    std::size_t rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r][c])
                for (std::size_t j = 0; j < cols; ++j) rows[r][j] ^= rows[rank][j];
        ++rank;
    }
    return rank;
}

/// Reduced Betti numbers in dimensions 0..up_to-1 of the complex given by
/// its full simplex list, with the empty simplex in dimension -1.
inline std::vector<std::size_t> reduced_betti(const std::vector<Simplex>& simplices, int up_to) {
    std::map<int, std::vector<Simplex>> by_dim;
    for (const auto& s : simplices) by_dim[static_cast<int>(s.size()) - 1].push_back(s);
    if (!simplices.empty()) by_dim[-1] = {Simplex{}};
    auto rank_of = [&](int d) -> std::size_t {  // boundary from d-chains to (d-1)-chains
        const auto& hi = by_dim[d];
        const auto& lo = by_dim[d - 1];
        if (hi.empty() || lo.empty()) return 0;
        std::vector<std::vector<int>> m(lo.size(), std::vector<int>(hi.size(), 0));
        for (std::size_t c = 0; c < hi.size(); ++c)
            for (std::size_t drop = 0; drop < hi[c].size(); ++drop) {
                Simplex face = hi[c];
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                const auto it = std::find(lo.begin(), lo.end(), face);
                m[static_cast<std::size_t>(it - lo.begin())][c] = 1;
            }
        return gf2_rank(std::move(m));
    };
    std::vector<std::size_t> out;
    for (int d = 0; d < up_to; ++d) out.push_back(by_dim[d].size() - rank_of(d) - rank_of(d + 1));
    return out;
}

inline std::vector<Simplex> intersection_simplices(const ConvexityFamily& f, std::uint64_t mask) {
    std::vector<Simplex> out;
    for (std::size_t s = 0; s < f.ambient().size(); ++s) {
        bool in = true;
        for (std::size_t i = 0; i < f.size() && in; ++i)
            if ((mask >> i & 1U) && !f.member(i).contains_index(s)) in = false;
        if (in) out.push_back(f.ambient().simplex(s));
    }
    return out;
}

/// Largest reduced Betti number in dimensions below k over intersections
/// of nonempty subfamilies.
inline std::size_t tc(const ConvexityFamily& f, int k) {
    std::size_t best = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << f.size()); ++mask)
        for (std::size_t b : reduced_betti(intersection_simplices(f, mask), k)) best = std::max(best, b);
    return best;
}

/// Fewest ambient vertices meeting every member; nullopt if some member is empty.
inline std::optional<std::size_t> transversal(const ConvexityFamily& f) {
    const PointSet pts = all_points(f);
    const std::vector<Vertex> pool(pts.begin(), pts.end());
    std::vector<PointSet> members;
    for (std::size_t i = 0; i < f.size(); ++i) members.push_back(member_points(f, i));
    for (std::size_t r = 0; r <= pool.size(); ++r)
        for (const auto& s : subsets_of_size(pool, r)) {
            bool hits = true;
            for (const auto& m : members) {
                bool any = false;
                for (Vertex v : s) any = any || m.count(v);
                hits = hits && any;
            }
            if (hits) return r;
        }
    return std::nullopt;
}

/// Random complex on up to `max_vertices` vertices from a few random faces.
inline SimplicialComplex random_complex(relconv::Rng& rng, std::size_t max_vertices, std::size_t max_face) {
    const std::size_t n = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(max_vertices)));
    const std::size_t faces = static_cast<std::size_t>(rng.between(1, 6));
    std::vector<Simplex> maximal;
    for (std::size_t i = 0; i < faces; ++i) {
        std::vector<Vertex> all(n);
        for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
        rng.shuffle(all);
        const std::size_t size = static_cast<std::size_t>(rng.between(1, static_cast<std::int64_t>(std::min(n, max_face))));
        Simplex s(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
        std::sort(s.begin(), s.end());
        maximal.push_back(std::move(s));
    }
    return SimplicialComplex::from_maximal(maximal, n);
}

}  // namespace oracle
