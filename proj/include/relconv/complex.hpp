#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relconv/vertex_set.hpp"

namespace relconv {

/// Strictly increasing list of vertex indices; never empty.
using Simplex = std::vector<Vertex>;

/// Finite abstract simplicial complex, closed under taking nonempty faces.
///
/// Simplices are stored once, ordered by dimension and then lexicographically,
/// so the index of a simplex is stable for the lifetime of the value. The
/// empty simplex is not stored; a complex without simplices is the empty
/// complex even when `vertex_count() > 0`.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Face closure of `maximal`. Input simplices may be unsorted but must be
    /// nonempty, duplicate-free and use indices below `vertex_count`.
    static SimplicialComplex from_maximal(std::span<const Simplex> maximal, std::size_t vertex_count,
                                          std::vector<std::string> labels = {});

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t size() const { return simplices_.size(); }
    bool empty() const { return simplices_.empty(); }

    /// -1 for the empty complex.
    int dimension() const { return static_cast<int>(offsets_.size()) - 2; }

    const std::vector<Simplex>& simplices() const { return simplices_; }
    const Simplex& simplex(std::size_t index) const { return simplices_[index]; }

    /// Index range [first_index(d), first_index(d) + count(d)) holds the d-simplices.
    std::size_t first_index(int dim) const;
    std::size_t count(int dim) const;

    std::optional<std::size_t> find(std::span<const Vertex> simplex) const;
    bool contains(std::span<const Vertex> simplex) const { return find(simplex).has_value(); }

    /// f[d] = number of d-simplices, for 0 <= d <= dimension().
    std::vector<std::size_t> f_vector() const;

    std::vector<Simplex> maximal_simplices() const;

    /// Indices of the codimension-one faces of a simplex (empty for vertices).
    std::vector<std::size_t> facet_indices(std::size_t index) const;

    /// Vertices that occur as 0-simplices.
    VertexSet vertex_set() const;

    const std::vector<std::string>& labels() const { return labels_; }

    /// Same vertex count and simplex set; labels are ignored.
    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.vertex_count_ == b.vertex_count_ && a.simplices_ == b.simplices_;
    }

    /// Trusted constructor: `simplices` must already be face-closed and
    /// ordered by size, then lexicographically.
    static SimplicialComplex from_sorted_closed(std::vector<Simplex> simplices, std::size_t vertex_count,
                                                std::vector<std::string> labels);

private:
    std::size_t vertex_count_ = 0;
    std::vector<Simplex> simplices_;
    std::vector<std::size_t> offsets_{0};  // offsets_[d] = first index of dimension d
    std::vector<std::string> labels_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

inline ComplexPtr share(SimplicialComplex complex) {
    return std::make_shared<const SimplicialComplex>(std::move(complex));
}

/// Face-closed subset of the simplices of an ambient complex.
class Subcomplex {
public:
    /// Validates that `mask` has one bit per ambient simplex and is face-closed.
    Subcomplex(ComplexPtr ambient, IndexSet mask);

    /// Face closure of `maximal` inside `ambient`; every simplex must exist there.
    static Subcomplex from_maximal(ComplexPtr ambient, std::span<const Simplex> maximal);
    static Subcomplex whole(ComplexPtr ambient);
    static Subcomplex none(ComplexPtr ambient);

    /// Full subcomplex spanned by a vertex set: every ambient simplex whose
    /// vertices all lie in `vertices`.
    static Subcomplex induced(ComplexPtr ambient, const VertexSet& vertices);

    const SimplicialComplex& ambient() const { return *ambient_; }
    const ComplexPtr& ambient_ptr() const { return ambient_; }
    const IndexSet& mask() const { return mask_; }

    bool contains_index(std::size_t index) const { return mask_.test(index); }
    std::size_t size() const { return mask_.count(); }
    bool empty() const { return mask_.none(); }

    VertexSet vertices() const;
    bool is_subset_of(const Subcomplex& other) const;

    /// The subcomplex as a standalone complex on the ambient vertex indices.
    SimplicialComplex to_complex() const;
    std::vector<Simplex> maximal_simplices() const;

    friend bool operator==(const Subcomplex& a, const Subcomplex& b) {
        return a.mask_ == b.mask_ && (a.ambient_ == b.ambient_ || *a.ambient_ == *b.ambient_);
    }

private:
    ComplexPtr ambient_;
    IndexSet mask_;
};

bool same_ambient(const Subcomplex& a, const Subcomplex& b);

/// Exact intersection of simplex sets; throws InvalidInput on ambient mismatch.
Subcomplex intersect_subcomplexes(const Subcomplex& a, const Subcomplex& b);

/// All simplices of dimension <= k; the vertex count is kept.
SimplicialComplex k_skeleton(const SimplicialComplex& complex, int k);

/// The k-skeleton of the n-simplex: all nonempty subsets of {0..n} of size <= k+1.
SimplicialComplex simplex_skeleton(int n, int k);

/// Order complex of the face poset. Vertex i of the result is simplex i of
/// the input; labels spell the original simplex, e.g. "{0,2}".
SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex);

/// Vertices of `b` are shifted by `a.vertex_count()`.
SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b);

/// Direct scan: every codimension-one face of every stored simplex is stored.
bool is_face_closed(const SimplicialComplex& complex);

std::string simplex_to_string(std::span<const Vertex> simplex);

}  // namespace relconv
