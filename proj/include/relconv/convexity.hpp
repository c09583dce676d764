#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relconv/complex.hpp"

namespace relconv {

struct NamedMember {
    std::string name;
    Subcomplex complex;
};

/// An ambient complex X together with a finite family F of subcomplexes.
/// All point-level questions are answered on vertices: two subcomplexes
/// intersect iff they share a vertex.
class ConvexityFamily {
public:
    /// Members must live in `ambient` and carry unique names.
    ConvexityFamily(ComplexPtr ambient, std::vector<NamedMember> members,
                    std::map<std::string, Vertex> labeled_points = {});

    const SimplicialComplex& ambient() const { return *ambient_; }
    const ComplexPtr& ambient_ptr() const { return ambient_; }
    const std::vector<NamedMember>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    const Subcomplex& member(std::size_t i) const { return members_[i].complex; }
    const VertexSet& member_vertices(std::size_t i) const { return member_vertices_[i]; }
    const VertexSet& ambient_vertices() const { return ambient_vertices_; }
    const std::map<std::string, Vertex>& labeled_points() const { return labeled_points_; }

    /// Members containing vertex v, as an index set over the family.
    const IndexSet& members_containing(Vertex v) const { return containing_[v]; }

    /// Vertex set of conv_F(S); cheaper than hull() when only points matter.
    VertexSet hull_vertices(const VertexSet& s) const;

    /// Members at the given indices, in the given order; labels are kept.
    ConvexityFamily subfamily(std::span<const std::size_t> indices) const;

private:
    ComplexPtr ambient_;
    std::vector<NamedMember> members_;
    std::map<std::string, Vertex> labeled_points_;
    std::vector<VertexSet> member_vertices_;
    std::vector<IndexSet> containing_;
    VertexSet ambient_vertices_;
};

/// conv_F(S): intersection of the members whose vertex set contains S, or
/// the whole ambient when there is none. hull of the empty set is the
/// intersection of all members.
Subcomplex hull(const ConvexityFamily& family, const VertexSet& s);

/// True iff S equals the hull of its own vertex set.
bool is_convex(const ConvexityFamily& family, const Subcomplex& s);

enum class InvariantKind { radon, tverberg, helly, caratheodory, tc };

enum class ValueMarker {
    exact,
    greater_than,          ///< value is the cap; the true number exceeds it
    at_least,              ///< value is a lower bound; the search was truncated
    infinite_within_pool,  ///< no size up to the whole pool works
};

struct Certificate {
    /// "no_partition": `points` admit no valid partition.
    /// "minimal_empty": `members` have empty intersection, every proper subfamily intersects.
    /// "caratheodory": `point` lies in hull(`points`) but in no hull of fewer than `value` of them.
    /// "betti": reduced Betti number in `dimension` of the intersection of `members` equals `value`.
    std::string kind;
    std::vector<Vertex> points;
    std::vector<std::size_t> members;
    std::optional<Vertex> point;
    int dimension = 0;
    std::size_t value = 0;
};

struct InvariantResult {
    InvariantKind kind = InvariantKind::radon;
    int k = 0;  ///< part count for tverberg/radon, homology range for tc (tc_infinity allowed)
    ValueMarker marker = ValueMarker::exact;
    std::size_t value = 0;
    std::optional<Certificate> certificate;
    std::map<std::string, std::int64_t> caps;
    std::map<std::string, bool> flags;
};

inline constexpr int tc_infinity = -1;

std::string kind_name(InvariantKind kind);
std::string marker_name(ValueMarker marker);

struct PartitionOptions {
    bool nonempty_parts = false;
    std::optional<VertexSet> pool;  ///< defaults to all ambient vertices
    unsigned jobs = 1;
};

/// Smallest r <= min(cap, |pool|) such that every r-subset of the pool splits
/// into two parts whose hulls share a vertex.
InvariantResult radon_number(const ConvexityFamily& family, int cap, const PartitionOptions& options = {});

/// k-part generalization of radon_number; k = 2 gives the same answer.
InvariantResult tverberg_number(const ConvexityFamily& family, int k, int cap, const PartitionOptions& options = {});

/// True iff `points` split into at most k parts (exactly k nonempty ones if
/// requested) whose hulls have a common vertex. Brute force; for checks.
bool has_tverberg_partition(const ConvexityFamily& family, std::span<const Vertex> points, int k,
                            bool nonempty_parts);

/// Largest inclusion-minimal subfamily with empty intersection (0 if every
/// subfamily intersects). Subfamilies of more than `cap + 1` members are not
/// explored. For |F| <= 16 a definition scan over all subfamilies must agree.
InvariantResult helly_number(const ConvexityFamily& family, int cap);

/// Helly number by scanning every subfamily against the definition; |F| <= 20.
std::size_t helly_number_by_definition(const ConvexityFamily& family);

/// Smallest c such that whenever x lies in hull(S), S a subset of the pool
/// with |S| <= cap, some c points of S already have x in their hull.
InvariantResult caratheodory_number(const ConvexityFamily& family, int cap, std::optional<VertexSet> pool = {},
                                    unsigned jobs = 1);

struct TcOptions {
    int subfamily_cap = 16;
    bool include_empty_subfamily = false;
    /// When positive, inspect this many random subfamilies instead of all of
    /// them; the result is then a lower bound and the size cap is not enforced.
    int samples = 0;
    std::uint64_t seed = 0;
};

/// Largest reduced Betti number in dimensions 0..k-1 over intersections of
/// nonempty subfamilies. k = tc_infinity covers every dimension.
InvariantResult topological_complexity(const ConvexityFamily& family, int k, const TcOptions& options = {});

/// Re-checks a certificate against the family from scratch.
bool revalidate(const ConvexityFamily& family, const InvariantResult& result);

}  // namespace relconv
