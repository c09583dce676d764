#include "relconv/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "relconv/combinatorics.hpp"
#include "relconv/error.hpp"

namespace relconv {

namespace {

struct BySizeThenLex {
    bool operator()(const Simplex& a, const Simplex& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

constexpr std::size_t kMaxClosableSimplexSize = 24;

}  // namespace

SimplicialComplex SimplicialComplex::from_sorted_closed(std::vector<Simplex> simplices, std::size_t vertex_count,
                                                        std::vector<std::string> labels) {
    SimplicialComplex out;
    out.vertex_count_ = vertex_count;
    out.simplices_ = std::move(simplices);
    out.labels_ = std::move(labels);
    out.offsets_.assign(1, 0);
    std::size_t index = 0;
    for (std::size_t size = 1; index < out.simplices_.size(); ++size) {
        while (index < out.simplices_.size() && out.simplices_[index].size() == size) ++index;
        out.offsets_.push_back(index);
    }
    return out;
}

SimplicialComplex SimplicialComplex::from_maximal(std::span<const Simplex> maximal, std::size_t vertex_count,
                                                  std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != vertex_count)
        throw InvalidInput("labels: expected " + std::to_string(vertex_count) + " entries, got " +
                           std::to_string(labels.size()));
    std::set<Simplex, BySizeThenLex> closed;
    for (const Simplex& raw : maximal) {
        if (raw.empty()) throw InvalidInput("empty simplex in input");
        Simplex s = raw;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            throw InvalidInput("repeated vertex in simplex " + simplex_to_string(raw));
        if (s.back() >= vertex_count)
            throw InvalidInput("vertex index " + std::to_string(s.back()) + " out of range (vertex_count " +
                               std::to_string(vertex_count) + ")");
        if (s.size() > kMaxClosableSimplexSize) throw InvalidInput("simplex too large to close");
        if (closed.contains(s)) continue;
        const std::size_t full = (std::size_t{1} << s.size()) - 1;
        Simplex face;
        for (std::size_t bits = 1; bits <= full; ++bits) {
            face.clear();
            for (std::size_t i = 0; i < s.size(); ++i)
                if (bits >> i & 1U) face.push_back(s[i]);
            closed.insert(face);
        }
    }
    return from_sorted_closed({closed.begin(), closed.end()}, vertex_count, std::move(labels));
}

std::size_t SimplicialComplex::first_index(int dim) const {
    if (dim < 0) return 0;
    if (static_cast<std::size_t>(dim) + 1 >= offsets_.size()) return simplices_.size();
    return offsets_[static_cast<std::size_t>(dim)];
}

std::size_t SimplicialComplex::count(int dim) const {
    if (dim < 0 || static_cast<std::size_t>(dim) + 1 >= offsets_.size()) return 0;
    return offsets_[static_cast<std::size_t>(dim) + 1] - offsets_[static_cast<std::size_t>(dim)];
}

std::optional<std::size_t> SimplicialComplex::find(std::span<const Vertex> simplex) const {
    if (simplex.empty()) return std::nullopt;
    const int dim = static_cast<int>(simplex.size()) - 1;
    const auto first = simplices_.begin() + static_cast<std::ptrdiff_t>(first_index(dim));
    const auto last = first + static_cast<std::ptrdiff_t>(count(dim));
    const auto it = std::lower_bound(first, last, simplex, [](const Simplex& a, std::span<const Vertex> b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    if (it != last && std::equal(it->begin(), it->end(), simplex.begin(), simplex.end()))
        return static_cast<std::size_t>(it - simplices_.begin());
    return std::nullopt;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
    std::vector<std::size_t> f;
    for (int d = 0; d <= dimension(); ++d) f.push_back(count(d));
    return f;
}

std::vector<std::size_t> SimplicialComplex::facet_indices(std::size_t index) const {
    const Simplex& s = simplices_[index];
    std::vector<std::size_t> out;
    if (s.size() < 2) return out;
    out.reserve(s.size());
    Simplex face(s.size() - 1);
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
        std::size_t j = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (i != skip) face[j++] = s[i];
        out.push_back(*find(face));
    }
    return out;
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
    std::vector<bool> is_face(simplices_.size(), false);
    for (std::size_t i = first_index(1); i < simplices_.size(); ++i)
        for (std::size_t f : facet_indices(i)) is_face[f] = true;
    std::vector<Simplex> out;
    for (std::size_t i = 0; i < simplices_.size(); ++i)
        if (!is_face[i]) out.push_back(simplices_[i]);
    return out;
}

VertexSet SimplicialComplex::vertex_set() const {
    VertexSet set(vertex_count_);
    for (std::size_t i = 0; i < count(0); ++i) set.set(simplices_[i][0]);
    return set;
}

// --- Subcomplex -------------------------------------------------------------

Subcomplex::Subcomplex(ComplexPtr ambient, IndexSet mask) : ambient_(std::move(ambient)), mask_(std::move(mask)) {
    if (!ambient_) throw InvalidInput("subcomplex without ambient complex");
    if (mask_.size() != ambient_->size()) throw InvalidInput("subcomplex mask does not match ambient simplex count");
    for (auto i = mask_.find_first(); i != IndexSet::npos; i = mask_.find_next(i))
        for (std::size_t f : ambient_->facet_indices(i))
            if (!mask_.test(f)) throw InvalidInput("subcomplex is not face-closed");
}

Subcomplex Subcomplex::from_maximal(ComplexPtr ambient, std::span<const Simplex> maximal) {
    IndexSet mask(ambient->size());
    for (const Simplex& raw : maximal) {
        Simplex s = raw;
        std::sort(s.begin(), s.end());
        const auto index = ambient->find(s);
        if (!index) throw InvalidInput("simplex " + simplex_to_string(raw) + " is not in the ambient complex");
        mask.set(*index);
    }
    // Facets have smaller indices, so one descending sweep closes the set.
    for (std::size_t i = mask.size(); i-- > 0;)
        if (mask.test(i))
            for (std::size_t f : ambient->facet_indices(i)) mask.set(f);
    return Subcomplex(std::move(ambient), std::move(mask));
}

Subcomplex Subcomplex::whole(ComplexPtr ambient) {
    IndexSet mask(ambient->size());
    mask.set();
    return Subcomplex(std::move(ambient), std::move(mask));
}

Subcomplex Subcomplex::none(ComplexPtr ambient) {
    IndexSet mask(ambient->size());
    return Subcomplex(std::move(ambient), std::move(mask));
}

Subcomplex Subcomplex::induced(ComplexPtr ambient, const VertexSet& vertices) {
    IndexSet mask(ambient->size());
    for (std::size_t i = 0; i < ambient->size(); ++i) {
        const Simplex& s = ambient->simplex(i);
        if (std::all_of(s.begin(), s.end(), [&](Vertex v) { return v < vertices.size() && vertices.test(v); }))
            mask.set(i);
    }
    return Subcomplex(std::move(ambient), std::move(mask));
}

VertexSet Subcomplex::vertices() const {
    VertexSet set(ambient_->vertex_count());
    const std::size_t n0 = ambient_->count(0);
    for (std::size_t i = 0; i < n0; ++i)
        if (mask_.test(i)) set.set(ambient_->simplex(i)[0]);
    return set;
}

bool Subcomplex::is_subset_of(const Subcomplex& other) const {
    if (!same_ambient(*this, other)) throw InvalidInput("subcomplexes live in different ambient complexes");
    return mask_.is_subset_of(other.mask_);
}

SimplicialComplex Subcomplex::to_complex() const {
    std::vector<Simplex> simplices;
    simplices.reserve(mask_.count());
    for (auto i = mask_.find_first(); i != IndexSet::npos; i = mask_.find_next(i))
        simplices.push_back(ambient_->simplex(i));
    return SimplicialComplex::from_sorted_closed(std::move(simplices), ambient_->vertex_count(), ambient_->labels());
}

std::vector<Simplex> Subcomplex::maximal_simplices() const { return to_complex().maximal_simplices(); }

bool same_ambient(const Subcomplex& a, const Subcomplex& b) {
    return a.ambient_ptr() == b.ambient_ptr() || a.ambient() == b.ambient();
}

Subcomplex intersect_subcomplexes(const Subcomplex& a, const Subcomplex& b) {
    if (!same_ambient(a, b)) throw InvalidInput("cannot intersect subcomplexes of different ambient complexes");
    return Subcomplex(a.ambient_ptr(), a.mask() & b.mask());
}

// --- constructions ------------------------------------------------------------

SimplicialComplex k_skeleton(const SimplicialComplex& complex, int k) {
    if (k < 0) throw InvalidInput("skeleton dimension must be non-negative");
    std::vector<Simplex> kept(complex.simplices().begin(),
                              complex.simplices().begin() + static_cast<std::ptrdiff_t>(complex.first_index(k + 1)));
    return SimplicialComplex::from_sorted_closed(std::move(kept), complex.vertex_count(), complex.labels());
}

SimplicialComplex simplex_skeleton(int n, int k) {
    if (n < 0 || k < 0) throw InvalidInput("simplex_skeleton needs n >= 0 and k >= 0");
    const auto vertices = static_cast<std::size_t>(n) + 1;
    std::vector<Simplex> simplices;
    for (std::size_t size = 1; size <= std::min(vertices, static_cast<std::size_t>(k) + 1); ++size) {
        for_each_combination(vertices, size, [&](const std::vector<std::size_t>& combo) {
            simplices.emplace_back(combo.begin(), combo.end());
            return true;
        });
    }
    return SimplicialComplex::from_sorted_closed(std::move(simplices), vertices, {});
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& complex) {
    if (complex.empty()) throw InvalidInput("barycentric subdivision of the empty complex");
    const std::size_t n = complex.size();
    // Proper cofaces of every simplex; indices grow with dimension, so a chain
    // listed in increasing index order is a flag of increasing faces.
    std::vector<std::vector<std::size_t>> cofaces(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Simplex& s = complex.simplex(i);
        for (std::size_t j = complex.first_index(static_cast<int>(s.size())); j < n; ++j) {
            const Simplex& t = complex.simplex(j);
            if (std::includes(t.begin(), t.end(), s.begin(), s.end())) cofaces[i].push_back(j);
        }
    }
    std::set<Simplex, BySizeThenLex> chains;
    Simplex chain;
    auto extend = [&](auto&& self, std::size_t top) -> void {
        chains.insert(chain);
        for (std::size_t next : cofaces[top]) {
            chain.push_back(static_cast<Vertex>(next));
            self(self, next);
            chain.pop_back();
        }
    };
    for (std::size_t i = 0; i < n; ++i) {
        chain.assign(1, static_cast<Vertex>(i));
        extend(extend, i);
    }
    std::vector<std::string> labels;
    labels.reserve(n);
    for (const Simplex& s : complex.simplices()) labels.push_back(simplex_to_string(s));
    return SimplicialComplex::from_sorted_closed({chains.begin(), chains.end()}, n, std::move(labels));
}

SimplicialComplex disjoint_union(const SimplicialComplex& a, const SimplicialComplex& b) {
    std::vector<Simplex> maximal = a.maximal_simplices();
    const auto shift = static_cast<Vertex>(a.vertex_count());
    for (Simplex s : b.maximal_simplices()) {
        for (Vertex& v : s) v += shift;
        maximal.push_back(std::move(s));
    }
    return SimplicialComplex::from_maximal(maximal, a.vertex_count() + b.vertex_count());
}

bool is_face_closed(const SimplicialComplex& complex) {
    for (const Simplex& s : complex.simplices()) {
        if (s.size() < 2) continue;
        Simplex face(s.size() - 1);
        for (std::size_t skip = 0; skip < s.size(); ++skip) {
            std::size_t j = 0;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != skip) face[j++] = s[i];
            if (!complex.contains(face)) return false;
        }
    }
    return true;
}

std::string simplex_to_string(std::span<const Vertex> simplex) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < simplex.size(); ++i) out << (i ? "," : "") << simplex[i];
    out << '}';
    return out.str();
}

}  // namespace relconv
