#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/rational.hpp>

#include "relconv/complex.hpp"
#include "relconv/convexity.hpp"

namespace relconv {

using Ratio = boost::rational<std::int64_t>;

struct NerveProfile {
    std::size_t n = 0;
    /// f[k] = number of (k+1)-subsets of members with a common vertex.
    std::vector<std::uint64_t> f;
    int max_dim_explored = 0;
};

struct NerveResult {
    SimplicialComplex complex;  ///< vertex i is member i; labels are member names
    NerveProfile profile;
};

/// Nerve up to dimension `max_dim`, by depth-first search with an
/// incrementally intersected vertex set.
NerveResult nerve(const ConvexityFamily& family, int max_dim, unsigned jobs = 1);

/// Number of `size`-subsets of members with a common vertex.
std::uint64_t count_intersecting(const ConvexityFamily& family, std::size_t size, unsigned jobs = 1);

struct FractionalHellyStats {
    Ratio alpha;  ///< intersecting k-tuples over all k-tuples
    Ratio beta;   ///< largest member count through one vertex, over n
    std::optional<Vertex> deepest_vertex;
};

FractionalHellyStats fractional_helly_stats(const ConvexityFamily& family, int k);

struct PqResult {
    bool holds = true;
    std::vector<std::size_t> witness;  ///< p members without q sharing a vertex
};

/// Among every p members some q share a vertex.
PqResult pq_property(const ConvexityFamily& family, int p, int q);

struct TransversalResult {
    ValueMarker marker = ValueMarker::exact;  ///< infinite_within_pool when a member is empty
    std::size_t value = 0;
    std::vector<Vertex> witness;
};

/// Fewest ambient vertices meeting every member, by branch and bound on the
/// member with the fewest vertices left unhit.
TransversalResult min_transversal(const ConvexityFamily& family, int cap);

class UniformHypergraph {
public:
    /// Edges are sorted and deduplicated; each must have `uniformity` distinct vertices.
    UniformHypergraph(std::size_t vertex_count, std::size_t uniformity, std::vector<std::vector<std::size_t>> edges);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t uniformity() const { return uniformity_; }
    const std::vector<std::vector<std::size_t>>& edges() const { return edges_; }
    bool has_edge(std::span<const std::size_t> sorted_vertices) const;

private:
    std::size_t vertex_count_;
    std::size_t uniformity_;
    std::vector<std::vector<std::size_t>> edges_;
};

/// Number of unordered collections of pairwise-disjoint t-sets V_1..V_l such
/// that every choice of one vertex per class is an edge.
std::uint64_t count_partite_copies(const UniformHypergraph& graph, int t);

struct BootstrapReport {
    std::size_t n = 0;
    int k = 0;
    std::uint64_t f_k = 0;
    std::uint64_t f_k1 = 0;
    Ratio alpha1_hat;
    Ratio alpha2_hat;
    Ratio alpha1;
    bool meets_alpha1 = false;
};

BootstrapReport bootstrap_check(const ConvexityFamily& family, int k, Ratio alpha1, unsigned jobs = 1);

struct GzProbe {
    int k = 0;
    bool applicable = false;  ///< f_{k+1} = 0
    std::uint64_t f_km1 = 0;
    std::uint64_t f_k = 0;
    std::uint64_t f_k1 = 0;
};

GzProbe gz_inequality_probe(const ConvexityFamily& family, int k, unsigned jobs = 1);

}  // namespace relconv
