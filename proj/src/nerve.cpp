#include "relconv/nerve.hpp"

#include <algorithm>
#include <limits>

#include "relconv/combinatorics.hpp"
#include "relconv/error.hpp"
#include "relconv/parallel.hpp"

namespace relconv {

namespace {

/// Visits every intersecting index set (increasing indices, size <= max_size)
/// whose smallest index is `root`.
template <class Visit>
void walk_intersecting(const ConvexityFamily& family, std::size_t root, std::size_t max_size, Visit&& visit) {
    std::vector<std::size_t> chosen{root};
    auto recurse = [&](auto&& self, const VertexSet& meet) -> void {
        visit(static_cast<const std::vector<std::size_t>&>(chosen));
        if (chosen.size() == max_size) return;
        for (std::size_t j = chosen.back() + 1; j < family.size(); ++j) {
            if (!meet.intersects(family.member_vertices(j))) continue;
            chosen.push_back(j);
            self(self, meet & family.member_vertices(j));
            chosen.pop_back();
        }
    };
    if (family.member_vertices(root).any()) recurse(recurse, family.member_vertices(root));
}

Ratio ratio(std::uint64_t num, std::uint64_t den) {
    constexpr auto limit = static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    if (den == 0) throw InvalidInput("ratio: empty denominator");
    if (num > limit || den > limit) throw BudgetExceeded("ratio: counts exceed 64-bit range");
    return Ratio(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

}  // namespace

NerveResult nerve(const ConvexityFamily& family, int max_dim, unsigned jobs) {
    if (max_dim < 0) throw InvalidInput("nerve: max_dim must be non-negative");
    const std::size_t n = family.size();
    const auto max_size = static_cast<std::size_t>(max_dim) + 1;
    std::vector<std::vector<Simplex>> per_root(n);
    parallel_for(n, jobs, [&](std::uint64_t root) {
        walk_intersecting(family, root, max_size, [&](const std::vector<std::size_t>& s) {
            per_root[root].emplace_back(s.begin(), s.end());
        });
    });
    std::vector<Simplex> simplices;
    for (auto& part : per_root) std::move(part.begin(), part.end(), std::back_inserter(simplices));
    std::sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });

    NerveResult result;
    result.profile.n = n;
    result.profile.max_dim_explored = max_dim;
    result.profile.f.assign(max_size, 0);
    for (const auto& s : simplices) ++result.profile.f[s.size() - 1];
    std::vector<std::string> labels;
    for (const auto& m : family.members()) labels.push_back(m.name);
    result.complex = SimplicialComplex::from_sorted_closed(std::move(simplices), n, std::move(labels));
    return result;
}

std::uint64_t count_intersecting(const ConvexityFamily& family, std::size_t size, unsigned jobs) {
    if (size == 0) return 1;
    return parallel_sum(family.size(), jobs, [&](std::uint64_t root) {
        std::uint64_t count = 0;
        walk_intersecting(family, root, size, [&](const std::vector<std::size_t>& s) { count += s.size() == size; });
        return count;
    });
}

FractionalHellyStats fractional_helly_stats(const ConvexityFamily& family, int k) {
    const std::size_t n = family.size();
    if (k < 1 || n < static_cast<std::size_t>(k)) throw InvalidInput("fractional_helly_stats: need 1 <= k <= n");
    FractionalHellyStats stats;
    stats.alpha = ratio(count_intersecting(family, static_cast<std::size_t>(k)), binomial(n, static_cast<std::size_t>(k)));
    std::size_t depth = 0;
    for (Vertex v : to_vertex_list(family.ambient_vertices())) {
        const std::size_t d = family.members_containing(v).count();
        if (d > depth) {
            depth = d;
            stats.deepest_vertex = v;
        }
    }
    stats.beta = ratio(depth, n);
    return stats;
}

PqResult pq_property(const ConvexityFamily& family, int p, int q) {
    if (q < 2 || p < q) throw InvalidInput("pq_property: need p >= q >= 2");
    if (family.size() < static_cast<std::size_t>(p)) throw InvalidInput("pq_property: family has fewer than p members");
    const auto up = static_cast<std::size_t>(p);
    const auto uq = static_cast<std::size_t>(q);
    PqResult result;
    for_each_combination(family.size(), up, [&](const std::vector<std::size_t>& group) {
        // Search for q members of the group with a common vertex.
        std::vector<std::size_t> picked;
        auto found = [&](auto&& self, std::size_t start, const VertexSet& meet) -> bool {
            if (picked.size() == uq) return true;
            for (std::size_t i = start; i + (uq - picked.size()) <= up; ++i) {
                VertexSet next = meet & family.member_vertices(group[i]);
                if (next.none()) continue;
                picked.push_back(i);
                if (self(self, i + 1, next)) return true;
                picked.pop_back();
            }
            return false;
        };
        if (found(found, 0, family.ambient_vertices())) return true;
        result.holds = false;
        result.witness = group;
        return false;
    });
    return result;
}

TransversalResult min_transversal(const ConvexityFamily& family, int cap) {
    if (cap < 1) throw InvalidInput("min_transversal: cap must be at least 1");
    TransversalResult result;
    for (std::size_t i = 0; i < family.size(); ++i)
        if (family.member_vertices(i).none()) {
            result.marker = ValueMarker::infinite_within_pool;
            return result;
        }
    std::vector<Vertex> chosen;
    IndexSet hit(family.size());
    auto search = [&](auto&& self, std::size_t budget) -> bool {
        if (hit.all()) return true;
        if (budget == 0) return false;
        std::size_t pick = family.size();
        std::size_t smallest = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = 0; i < family.size(); ++i)
            if (!hit.test(i) && family.member_vertices(i).count() < smallest) {
                smallest = family.member_vertices(i).count();
                pick = i;
            }
        for (Vertex v : to_vertex_list(family.member_vertices(pick))) {
            const IndexSet before = hit;
            hit |= family.members_containing(v);
            chosen.push_back(v);
            if (self(self, budget - 1)) return true;
            chosen.pop_back();
            hit = before;
        }
        return false;
    };
    for (std::size_t size = 0; size <= static_cast<std::size_t>(cap); ++size) {
        if (search(search, size)) {
            std::sort(chosen.begin(), chosen.end());
            result.value = size;
            result.witness = chosen;
            return result;
        }
    }
    result.marker = ValueMarker::greater_than;
    result.value = static_cast<std::size_t>(cap);
    return result;
}

UniformHypergraph::UniformHypergraph(std::size_t vertex_count, std::size_t uniformity,
                                     std::vector<std::vector<std::size_t>> edges)
    : vertex_count_(vertex_count), uniformity_(uniformity), edges_(std::move(edges)) {
    if (uniformity_ == 0) throw InvalidInput("hypergraph: uniformity must be positive");
    for (auto& e : edges_) {
        std::sort(e.begin(), e.end());
        if (e.size() != uniformity_ || std::adjacent_find(e.begin(), e.end()) != e.end())
            throw InvalidInput("hypergraph: edge with wrong size or repeated vertex");
        if (e.back() >= vertex_count_) throw InvalidInput("hypergraph: edge vertex out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool UniformHypergraph::has_edge(std::span<const std::size_t> sorted_vertices) const {
    return std::binary_search(edges_.begin(), edges_.end(), sorted_vertices,
                              [](const auto& a, const auto& b) {
                                  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
                              });
}

std::uint64_t count_partite_copies(const UniformHypergraph& graph, int t) {
    if (t < 1) throw InvalidInput("count_partite_copies: t must be positive");
    const std::size_t ell = graph.uniformity();
    const auto ut = static_cast<std::size_t>(t);
    const std::size_t n = graph.vertex_count();
    if (n < ell * ut) return 0;

    // Partial transversals must lie inside some edge.
    std::vector<std::vector<std::vector<std::size_t>>> shadow(ell + 1);
    for (const auto& e : graph.edges())
        for (std::size_t size = 1; size <= ell; ++size)
            for_each_combination(ell, size, [&](const std::vector<std::size_t>& pos) {
                std::vector<std::size_t> part;
                for (std::size_t p : pos) part.push_back(e[p]);
                shadow[size].push_back(std::move(part));
                return true;
            });
    for (auto& s : shadow) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }

    std::vector<std::vector<std::size_t>> classes;
    std::vector<bool> used(n, false);
    std::vector<std::size_t> tuple;

    auto transversals_ok = [&]() {
        const std::size_t depth = classes.size();
        bool ok = true;
        auto rec = [&](auto&& self, std::size_t c) -> void {
            if (!ok) return;
            if (c == depth) {
                std::vector<std::size_t> sorted = tuple;
                std::sort(sorted.begin(), sorted.end());
                if (!std::binary_search(shadow[depth].begin(), shadow[depth].end(), sorted)) ok = false;
                return;
            }
            for (std::size_t v : classes[c]) {
                tuple.push_back(v);
                self(self, c + 1);
                tuple.pop_back();
            }
        };
        rec(rec, 0);
        return ok;
    };

    std::uint64_t count = 0;
    // Classes are listed by increasing smallest vertex, so each unordered
    // collection is produced once.
    auto place = [&](auto&& self) -> void {
        if (classes.size() == ell) {
            ++count;
            return;
        }
        const std::size_t min_start = classes.empty() ? 0 : classes.back().front() + 1;
        for (std::size_t first = min_start; first < n; ++first) {
            if (used[first]) continue;
            std::vector<std::size_t> rest;
            for (std::size_t v = first + 1; v < n; ++v)
                if (!used[v]) rest.push_back(v);
            for_each_combination(rest.size(), ut - 1, [&](const std::vector<std::size_t>& pick) {
                std::vector<std::size_t> cls{first};
                for (std::size_t p : pick) cls.push_back(rest[p]);
                classes.push_back(cls);
                if (transversals_ok()) {
                    for (std::size_t v : cls) used[v] = true;
                    self(self);
                    for (std::size_t v : cls) used[v] = false;
                }
                classes.pop_back();
                return true;
            });
        }
    };
    place(place);
    return count;
}

BootstrapReport bootstrap_check(const ConvexityFamily& family, int k, Ratio alpha1, unsigned jobs) {
    const std::size_t n = family.size();
    if (k < 0 || n < static_cast<std::size_t>(k) + 2) throw InvalidInput("bootstrap_check: need n >= k + 2");
    const auto uk = static_cast<std::size_t>(k);
    BootstrapReport report;
    report.n = n;
    report.k = k;
    report.f_k = count_intersecting(family, uk + 1, jobs);
    report.f_k1 = count_intersecting(family, uk + 2, jobs);
    report.alpha1_hat = ratio(report.f_k, binomial(n, uk + 1));
    report.alpha2_hat = ratio(report.f_k1, binomial(n, uk + 2));
    report.alpha1 = alpha1;
    report.meets_alpha1 = report.alpha1_hat >= alpha1;
    return report;
}

GzProbe gz_inequality_probe(const ConvexityFamily& family, int k, unsigned jobs) {
    if (k < 2) throw InvalidInput("gz_inequality_probe: k must be at least 2");
    const auto uk = static_cast<std::size_t>(k);
    GzProbe probe;
    probe.k = k;
    probe.f_km1 = count_intersecting(family, uk, jobs);
    probe.f_k = count_intersecting(family, uk + 1, jobs);
    probe.f_k1 = count_intersecting(family, uk + 2, jobs);
    probe.applicable = probe.f_k1 == 0;
    return probe;
}

}  // namespace relconv
