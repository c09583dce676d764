#include "relconv/chain_map.hpp"

#include <algorithm>
#include <map>

#include "relconv/combinatorics.hpp"
#include "relconv/error.hpp"
#include "relconv/gf2_matrix.hpp"
#include "relconv/parallel.hpp"

namespace relconv {

Chain chain_add(const Chain& a, const Chain& b) {
    Chain out;
    out.reserve(a.size() + b.size());
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Chain chain_boundary(const SimplicialComplex& complex, const Chain& chain) {
    std::vector<std::size_t> faces;
    for (std::size_t s : chain) {
        const auto f = complex.facet_indices(s);
        faces.insert(faces.end(), f.begin(), f.end());
    }
    std::sort(faces.begin(), faces.end());
    Chain out;
    for (std::size_t i = 0; i < faces.size();) {
        std::size_t j = i;
        while (j < faces.size() && faces[j] == faces[i]) ++j;
        if ((j - i) % 2 == 1) out.push_back(faces[i]);
        i = j;
    }
    return out;
}

Subcomplex chain_support(const ComplexPtr& complex, const Chain& chain) {
    std::vector<Simplex> simplices;
    simplices.reserve(chain.size());
    for (std::size_t s : chain) {
        if (s >= complex->size()) throw InvalidInput("chain_support: simplex index out of range");
        simplices.push_back(complex->simplex(s));
    }
    return Subcomplex::from_maximal(complex, simplices);
}

namespace {

int simplex_dim(const SimplicialComplex& complex, std::size_t index) {
    return static_cast<int>(complex.simplex(index).size()) - 1;
}

VertexSet support_vertices(const SimplicialComplex& complex, const Chain& chain) {
    VertexSet out(complex.vertex_count());
    for (std::size_t s : chain)
        for (Vertex v : complex.simplex(s)) out.set(v);
    return out;
}

bool disjoint_simplices(const Simplex& a, const Simplex& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i;
        else ++j;
    }
    return true;
}

std::optional<std::size_t> common_face(const SimplicialComplex& complex, const Simplex& a, const Simplex& b) {
    Simplex meet;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(meet));
    if (meet.empty()) return std::nullopt;
    return complex.find(meet);
}

MapCheck fail_simplex(std::string reason, std::size_t simplex) {
    MapCheck check;
    check.ok = false;
    check.reason = std::move(reason);
    check.simplex = simplex;
    return check;
}

MapCheck fail_pair(std::string reason, std::size_t a, std::size_t b) {
    MapCheck check;
    check.ok = false;
    check.reason = std::move(reason);
    check.pair = std::make_pair(a, b);
    return check;
}

}  // namespace

SimplicialChainMap::SimplicialChainMap(ComplexPtr source, ComplexPtr target, std::vector<Chain> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (!source_ || !target_) throw InvalidInput("chain map: missing complex");
    if (images_.size() != source_->size())
        throw InvalidInput("chain map: expected " + std::to_string(source_->size()) + " images, got " +
                           std::to_string(images_.size()));
    for (std::size_t s = 0; s < images_.size(); ++s) {
        const Chain& c = images_[s];
        if (!std::is_sorted(c.begin(), c.end()) || std::adjacent_find(c.begin(), c.end()) != c.end())
            throw InvalidInput("chain map: image of " + simplex_to_string(source_->simplex(s)) + " is not a set");
        for (std::size_t t : c) {
            if (t >= target_->size()) throw InvalidInput("chain map: target simplex index out of range");
            if (simplex_dim(*target_, t) != simplex_dim(*source_, s))
                throw InvalidInput("chain map: image of " + simplex_to_string(source_->simplex(s)) +
                                   " changes dimension");
        }
    }
}

Chain SimplicialChainMap::apply(const Chain& source_chain) const {
    Chain out;
    for (std::size_t s : source_chain) out = chain_add(out, images_.at(s));
    return out;
}

SimplicialChainMap identity_chain_map(const ComplexPtr& complex) {
    std::vector<Chain> images(complex->size());
    for (std::size_t s = 0; s < images.size(); ++s) images[s] = {s};
    return SimplicialChainMap(complex, complex, std::move(images));
}

SimplicialChainMap subdivision_chain_map(const ComplexPtr& complex) {
    auto sd = share(barycentric_subdivision(*complex));
    std::vector<Chain> images(complex->size());
    // Vertex i of sd is simplex i of the input, and a flag of faces of an
    // l-simplex with l+1 entries is a full flag ending at that simplex.
    for (std::size_t t = 0; t < sd->size(); ++t) {
        const Simplex& flag = sd->simplex(t);
        const std::size_t top = flag.back();
        if (simplex_dim(*complex, top) == static_cast<int>(flag.size()) - 1) images[top].push_back(t);
    }
    return SimplicialChainMap(complex, std::move(sd), std::move(images));
}

SimplicialChainMap compose(const SimplicialChainMap& first, const SimplicialChainMap& second) {
    if (!(first.target() == second.source())) throw InvalidInput("compose: target and source do not match");
    std::vector<Chain> images(first.source().size());
    for (std::size_t s = 0; s < images.size(); ++s) images[s] = second.apply(first.image(s));
    return SimplicialChainMap(first.source_ptr(), second.target_ptr(), std::move(images));
}

SimplicialChainMap restrict_source(const SimplicialChainMap& map, const Subcomplex& part) {
    if (!(part.ambient() == map.source())) throw InvalidInput("restrict_source: subcomplex of another complex");
    auto restricted = share(part.to_complex());
    std::vector<Chain> images(restricted->size());
    for (std::size_t s = 0; s < images.size(); ++s) images[s] = map.image(*map.source().find(restricted->simplex(s)));
    return SimplicialChainMap(std::move(restricted), map.target_ptr(), std::move(images));
}

MapCheck verify_chain_map(const SimplicialChainMap& map) {
    const auto& source = map.source();
    for (std::size_t s = source.first_index(1); s < source.size(); ++s) {
        const Chain pushed = map.apply(source.facet_indices(s));
        if (chain_boundary(map.target(), map.image(s)) != pushed)
            return fail_simplex("boundary does not commute at " + simplex_to_string(source.simplex(s)), s);
    }
    return {};
}

bool verify_nontrivial(const SimplicialChainMap& map) {
    for (std::size_t v = 0; v < map.source().count(0); ++v)
        if (map.image(v).size() % 2 == 0) return false;
    return true;
}

MapCheck verify_hae(const SimplicialChainMap& map) {
    const auto& source = map.source();
    for (std::size_t v = 0; v < source.count(0); ++v)
        if (map.image(v).size() % 2 == 0)
            return fail_simplex("vertex " + simplex_to_string(source.simplex(v)) + " has an even image", v);
    std::vector<VertexSet> supports;
    supports.reserve(source.size());
    for (std::size_t s = 0; s < source.size(); ++s) supports.push_back(support_vertices(map.target(), map.image(s)));
    for (std::size_t a = 0; a < source.size(); ++a)
        for (std::size_t b = a + 1; b < source.size(); ++b)
            if (disjoint_simplices(source.simplex(a), source.simplex(b)) && supports[a].intersects(supports[b]))
                return fail_pair("disjoint simplices " + simplex_to_string(source.simplex(a)) + " and " +
                                     simplex_to_string(source.simplex(b)) + " have overlapping supports",
                                 a, b);
    return {};
}

MapCheck verify_constrained(const SimplicialChainMap& map, const ConvexityFamily& family, const ConstraintMap& phi) {
    const auto& source = map.source();
    if (!(map.target() == family.ambient())) throw InvalidInput("verify_constrained: target is not the family ambient");
    if (phi.size() != source.size()) throw InvalidInput("verify_constrained: one label per source simplex expected");
    for (const auto& label : phi)
        if (label.size() != family.ambient().vertex_count() || !label.is_subset_of(family.ambient_vertices()))
            throw InvalidInput("verify_constrained: label uses points outside the ambient");

    for (std::size_t a = 0; a < source.size(); ++a)
        for (std::size_t b = a + 1; b < source.size(); ++b) {
            const auto meet = common_face(source, source.simplex(a), source.simplex(b));
            const VertexSet both = phi[a] & phi[b];
            const bool ok = meet ? both == phi[*meet] : both.none();
            if (!ok)
                return fail_pair("labels of " + simplex_to_string(source.simplex(a)) + " and " +
                                     simplex_to_string(source.simplex(b)) + " do not respect their meet",
                                 a, b);
        }
    for (std::size_t s = 0; s < source.size(); ++s) {
        const Subcomplex support = chain_support(map.target_ptr(), map.image(s));
        if (!support.is_subset_of(hull(family, phi[s])))
            return fail_simplex("support of " + simplex_to_string(source.simplex(s)) + " leaves the hull of its label", s);
    }
    return {};
}

std::string lemma7_status_name(Lemma7Status status) {
    switch (status) {
        case Lemma7Status::hae_confirmed: return "hae_confirmed";
        case Lemma7Status::hypothesis_not_satisfied: return "hypothesis_not_satisfied";
        case Lemma7Status::precondition_failed: return "precondition_failed";
        case Lemma7Status::fatal_violation: return "fatal_violation";
    }
    return "unknown";
}

Lemma7Report lemma7_harness(const SimplicialChainMap& map, const ConvexityFamily& family, const ConstraintMap& phi,
                            const std::vector<Vertex>& points) {
    Lemma7Report report;
    if (const auto chain = verify_chain_map(map); !chain) {
        report.detail = "not a chain map: " + chain.reason;
        return report;
    }
    if (!verify_nontrivial(map)) {
        report.detail = "chain map is trivial on some vertex";
        return report;
    }
    if (const auto constrained = verify_constrained(map, family, phi); !constrained) {
        report.detail = "not constrained: " + constrained.reason;
        return report;
    }

    const std::size_t n = points.size();
    if (n > 16) throw BudgetExceeded("lemma7_harness: more than 16 designated points");
    const std::size_t masks = std::size_t{1} << n;
    std::vector<VertexSet> hulls(masks);
    for (std::size_t mask = 1; mask < masks; ++mask) {
        VertexSet s(family.ambient().vertex_count());
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U) s.set(points[i]);
        hulls[mask] = family.hull_vertices(s);
    }
    auto unpack = [&](std::size_t mask) {
        std::vector<Vertex> out;
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U) out.push_back(points[i]);
        return out;
    };
    for (std::size_t s = 1; s < masks; ++s) {
        const std::size_t rest = (masks - 1) & ~s;
        for (std::size_t t = rest; t != 0; t = (t - 1) & rest) {
            if (t < s || !hulls[s].intersects(hulls[t])) continue;
            report.status = Lemma7Status::hypothesis_not_satisfied;
            report.detail = "hulls of disjoint designated point sets meet";
            report.overlapping_sets = std::make_pair(unpack(s), unpack(t));
            return report;
        }
    }
    report.hae = verify_hae(map);
    report.status = report.hae ? Lemma7Status::hae_confirmed : Lemma7Status::fatal_violation;
    report.detail = report.hae ? "almost-embedding confirmed" : "hypothesis holds but " + report.hae.reason;
    return report;
}

std::optional<Chain> fill_boundary(const Subcomplex& within, int d, const Chain& boundary) {
    if (d < 1) throw InvalidInput("fill_boundary: dimension must be at least 1");
    const auto& ambient = within.ambient();
    std::vector<std::size_t> columns;
    for (std::size_t s = ambient.first_index(d), e = s + ambient.count(d); s < e; ++s)
        if (within.contains_index(s)) columns.push_back(s);
    const std::size_t row_base = ambient.first_index(d - 1);
    GF2Matrix a(ambient.count(d - 1), columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c)
        for (std::size_t f : ambient.facet_indices(columns[c])) a.set(f - row_base, c, true);
    std::vector<bool> b(ambient.count(d - 1), false);
    for (std::size_t f : boundary) {
        if (f < row_base || f >= row_base + b.size()) throw InvalidInput("fill_boundary: boundary has the wrong dimension");
        b[f - row_base] = true;
    }
    const auto x = gf2_solve(a, b);
    if (!x) return std::nullopt;
    Chain out;
    for (std::size_t c = 0; c < columns.size(); ++c)
        if ((*x)[c]) out.push_back(columns[c]);
    return out;
}

namespace {

struct Candidate {
    Chain chain;
    VertexSet support;
};

class HaeSearch {
public:
    HaeSearch(const ComplexPtr& source, const ComplexPtr& target, std::size_t cap, std::uint64_t budget)
        : source_(*source), target_(*target), budget_(budget) {
        const int top = source_.dimension();
        by_boundary_.resize(static_cast<std::size_t>(std::max(top, 0)) + 1);
        for (int d = 0; d <= top; ++d) {
            const std::size_t n = target_.count(d);
            std::uint64_t total = 0;
            for (std::size_t size = 0; size <= std::min(cap, n); ++size) {
                total += binomial(n, size);
                if (total > budget_) throw BudgetExceeded("hae search: too many candidate chains in dimension " + std::to_string(d));
            }
            candidates_.emplace_back();
            auto& list = candidates_.back();
            const std::size_t base = target_.first_index(d);
            for (std::size_t size = d == 0 ? 1 : 0; size <= std::min(cap, n); size += d == 0 ? 2 : 1) {
                for_each_combination(n, size, [&](const std::vector<std::size_t>& combo) {
                    Chain c(combo.size());
                    for (std::size_t i = 0; i < combo.size(); ++i) c[i] = base + combo[i];
                    list.push_back({c, support_vertices(target_, c)});
                    return true;
                });
            }
            if (d > 0)
                for (std::size_t i = 0; i < list.size(); ++i)
                    by_boundary_[static_cast<std::size_t>(d)][chain_boundary(target_, list[i].chain)].push_back(i);
        }
        disjoint_before_.resize(source_.size());
        for (std::size_t s = 0; s < source_.size(); ++s)
            for (std::size_t t = 0; t < s; ++t)
                if (disjoint_simplices(source_.simplex(s), source_.simplex(t))) disjoint_before_[s].push_back(t);
    }

    std::size_t root_choices() const { return candidates_.empty() ? 0 : candidates_[0].size(); }

    struct Outcome {
        bool found = false;
        bool aborted = false;
        std::uint64_t nodes = 0;
        std::vector<Chain> images;
    };

    /// Subtree where the first source simplex (a vertex) takes root choice `j`.
    Outcome run_subtree(std::size_t j) const {
        Outcome out;
        std::vector<const Candidate*> assigned(source_.size(), nullptr);
        assigned[0] = &candidates_[0][j];
        out.nodes = 1;
        if (extend(1, assigned, out)) {
            out.found = true;
            for (const auto* c : assigned) out.images.push_back(c->chain);
        }
        return out;
    }

private:
    bool extend(std::size_t s, std::vector<const Candidate*>& assigned, Outcome& out) const {
        if (s == source_.size()) return true;
        const int d = simplex_dim(source_, s);
        const std::vector<std::size_t>* order = nullptr;
        std::vector<std::size_t> all;
        const auto& list = candidates_[static_cast<std::size_t>(d)];
        if (d == 0) {
            all.resize(list.size());
            for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
            order = &all;
        } else {
            Chain required;
            for (std::size_t f : source_.facet_indices(s)) required = chain_add(required, assigned[f]->chain);
            const auto& table = by_boundary_[static_cast<std::size_t>(d)];
            const auto it = table.find(required);
            if (it == table.end()) return false;
            order = &it->second;
        }
        for (std::size_t i : *order) {
            if (++out.nodes > budget_) {
                out.aborted = true;
                return false;
            }
            const Candidate& c = list[i];
            const bool clash = std::any_of(disjoint_before_[s].begin(), disjoint_before_[s].end(),
                                           [&](std::size_t t) { return assigned[t]->support.intersects(c.support); });
            if (clash) continue;
            assigned[s] = &c;
            if (extend(s + 1, assigned, out)) return true;
            if (out.aborted) return false;
        }
        assigned[s] = nullptr;
        return false;
    }

    const SimplicialComplex& source_;
    const SimplicialComplex& target_;
    std::uint64_t budget_;
    std::vector<std::vector<Candidate>> candidates_;
    std::vector<std::map<Chain, std::vector<std::size_t>>> by_boundary_;
    std::vector<std::vector<std::size_t>> disjoint_before_;
};

}  // namespace

HaeSearchResult exhaustive_hae_search(const ComplexPtr& source, const ComplexPtr& target, int support_cap,
                                      const HaeSearchOptions& options) {
    if (support_cap < 1) throw InvalidInput("exhaustive_hae_search: support cap must be at least 1");
    HaeSearchResult result;
    if (source->empty()) {
        result.map.emplace(source, target, std::vector<Chain>{});
        return result;
    }
    const HaeSearch search(source, target, static_cast<std::size_t>(support_cap), options.budget);
    auto found = ordered_subtree_search<HaeSearch::Outcome>(
        search.root_choices(), options.jobs, options.budget, result.nodes,
        [&](std::uint64_t j, std::uint64_t) { return search.run_subtree(j); });
    if (found) result.map.emplace(source, target, std::move(found->images));
    return result;
}

}  // namespace relconv
