#include "relconv/convexity.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <stdexcept>

#include "relconv/combinatorics.hpp"
#include "relconv/error.hpp"
#include "relconv/homology.hpp"
#include "relconv/parallel.hpp"
#include "relconv/random.hpp"

namespace relconv {

ConvexityFamily::ConvexityFamily(ComplexPtr ambient, std::vector<NamedMember> members,
                                 std::map<std::string, Vertex> labeled_points)
    : ambient_(std::move(ambient)), members_(std::move(members)), labeled_points_(std::move(labeled_points)) {
    if (!ambient_) throw InvalidInput("family: missing ambient complex");
    const std::size_t nv = ambient_->vertex_count();
    ambient_vertices_ = ambient_->vertex_set();
    std::set<std::string> names;
    containing_.assign(nv, IndexSet(members_.size()));
    for (std::size_t i = 0; i < members_.size(); ++i) {
        const auto& m = members_[i];
        if (!names.insert(m.name).second) throw InvalidInput("family: duplicate member name '" + m.name + "'");
        if (m.complex.ambient_ptr() != ambient_ && !(m.complex.ambient() == *ambient_))
            throw InvalidInput("family: member '" + m.name + "' is not a subcomplex of the ambient");
        member_vertices_.push_back(m.complex.vertices());
        for (Vertex v : to_vertex_list(member_vertices_.back())) containing_[v].set(i);
    }
    for (const auto& [label, v] : labeled_points_)
        if (v >= nv || !ambient_vertices_.test(v))
            throw InvalidInput("family: labeled point '" + label + "' is not an ambient vertex");
}

VertexSet ConvexityFamily::hull_vertices(const VertexSet& s) const {
    if (s.size() != ambient_->vertex_count()) throw InvalidInput("hull: vertex set has the wrong universe");
    IndexSet candidates(members_.size());
    candidates.set();
    for (std::size_t v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        if (!ambient_vertices_.test(v)) throw InvalidInput("hull: vertex " + std::to_string(v) + " is not in the ambient");
        candidates &= containing_[v];
    }
    if (candidates.none()) return ambient_vertices_;
    VertexSet result = ambient_vertices_;
    for (std::size_t i = candidates.find_first(); i != IndexSet::npos; i = candidates.find_next(i))
        result &= member_vertices_[i];
    return result;
}

ConvexityFamily ConvexityFamily::subfamily(std::span<const std::size_t> indices) const {
    std::vector<NamedMember> chosen;
    chosen.reserve(indices.size());
    for (std::size_t i : indices) {
        if (i >= members_.size()) throw InvalidInput("subfamily: member index out of range");
        chosen.push_back(members_[i]);
    }
    return ConvexityFamily(ambient_, std::move(chosen), labeled_points_);
}

Subcomplex hull(const ConvexityFamily& family, const VertexSet& s) {
    if (s.size() != family.ambient().vertex_count()) throw InvalidInput("hull: vertex set has the wrong universe");
    IndexSet candidates(family.size());
    candidates.set();
    for (std::size_t v = s.find_first(); v != VertexSet::npos; v = s.find_next(v)) {
        if (!family.ambient_vertices().test(v))
            throw InvalidInput("hull: vertex " + std::to_string(v) + " is not in the ambient");
        candidates &= family.members_containing(static_cast<Vertex>(v));
    }
    if (candidates.none()) return Subcomplex::whole(family.ambient_ptr());
    IndexSet mask(family.ambient().size());
    mask.set();
    for (std::size_t i = candidates.find_first(); i != IndexSet::npos; i = candidates.find_next(i))
        mask &= family.member(i).mask();
    return Subcomplex(family.ambient_ptr(), std::move(mask));
}

bool is_convex(const ConvexityFamily& family, const Subcomplex& s) {
    if (s.ambient_ptr() != family.ambient_ptr() && !(s.ambient() == family.ambient()))
        throw InvalidInput("is_convex: subcomplex lives in a different ambient");
    return hull(family, s.vertices()) == s;
}

std::string kind_name(InvariantKind kind) {
    switch (kind) {
        case InvariantKind::radon: return "radon";
        case InvariantKind::tverberg: return "tverberg";
        case InvariantKind::helly: return "helly";
        case InvariantKind::caratheodory: return "caratheodory";
        case InvariantKind::tc: return "tc";
    }
    return "unknown";
}

std::string marker_name(ValueMarker marker) {
    switch (marker) {
        case ValueMarker::exact: return "exact";
        case ValueMarker::greater_than: return "greater_than";
        case ValueMarker::at_least: return "at_least";
        case ValueMarker::infinite_within_pool: return "infinite_within_pool";
    }
    return "unknown";
}

namespace {

/// Word-packed copies of the member vertex sets, for tight inner loops.
class PointKernel {
public:
    explicit PointKernel(const ConvexityFamily& family)
        : words_((family.ambient().vertex_count() + 63) / 64),
          member_words_((family.size() + 63) / 64),
          members_(family.size()) {
        ambient_ = pack(family.ambient_vertices(), words_);
        member_sets_.reserve(members_ * words_);
        for (std::size_t i = 0; i < members_; ++i) {
            auto packed = pack(family.member_vertices(i), words_);
            member_sets_.insert(member_sets_.end(), packed.begin(), packed.end());
        }
        containing_.resize(family.ambient().vertex_count() * member_words_);
        for (std::size_t v = 0; v < family.ambient().vertex_count(); ++v) {
            auto packed = pack(family.members_containing(static_cast<Vertex>(v)), member_words_);
            std::copy(packed.begin(), packed.end(), containing_.begin() + static_cast<std::ptrdiff_t>(v * member_words_));
        }
    }

    std::size_t words() const { return words_; }

    /// Hull vertex sets of every subset of `points`, indexed by bitmask.
    std::vector<std::uint64_t> all_subset_hulls(std::span<const Vertex> points) const {
        const std::size_t r = points.size();
        const std::size_t masks = std::size_t{1} << r;
        std::vector<std::uint64_t> contain(masks * member_words_);
        std::vector<std::uint64_t> hulls(masks * words_);
        for (std::size_t w = 0; w < member_words_; ++w) contain[w] = all_members_word(w);
        for (std::size_t mask = 1; mask < masks; ++mask) {
            const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
            const std::uint64_t* prev = &contain[(mask & (mask - 1)) * member_words_];
            const std::uint64_t* cv = &containing_[points[low] * member_words_];
            for (std::size_t w = 0; w < member_words_; ++w) contain[mask * member_words_ + w] = prev[w] & cv[w];
        }
        for (std::size_t mask = 0; mask < masks; ++mask) hull_from_members(&contain[mask * member_words_], &hulls[mask * words_]);
        return hulls;
    }

private:
    template <class Bits>
    static std::vector<std::uint64_t> pack(const Bits& bits, std::size_t words) {
        std::vector<std::uint64_t> out(words, 0);
        for (std::size_t i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) out[i / 64] |= std::uint64_t{1} << (i % 64);
        return out;
    }

    std::uint64_t all_members_word(std::size_t w) const {
        const std::size_t lo = w * 64;
        const std::size_t n = std::min<std::size_t>(64, members_ - lo);
        return n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }

    void hull_from_members(const std::uint64_t* contain, std::uint64_t* out) const {
        std::copy(ambient_.begin(), ambient_.end(), out);
        for (std::size_t w = 0; w < member_words_; ++w) {
            for (std::uint64_t bits = contain[w]; bits != 0; bits &= bits - 1) {
                const std::size_t i = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
                const std::uint64_t* m = &member_sets_[i * words_];
                for (std::size_t k = 0; k < words_; ++k) out[k] &= m[k];
            }
        }
    }

    std::size_t words_;
    std::size_t member_words_;
    std::size_t members_;
    std::vector<std::uint64_t> ambient_;
    std::vector<std::uint64_t> member_sets_;
    std::vector<std::uint64_t> containing_;
};

/// Depth-first search over set partitions of `r` points into at most k blocks
/// (restricted growth strings), testing the hull intersection at each leaf.
class PartitionSearch {
public:
    PartitionSearch(const std::vector<std::uint64_t>& hulls, std::size_t words, std::size_t r, int k, bool nonempty)
        : hulls_(hulls), words_(words), r_(r), k_(static_cast<std::size_t>(k)), nonempty_(nonempty),
          blocks_(k_, 0), scratch_(words) {}

    bool found() {
        if (nonempty_ && r_ < k_) return false;
        return assign(0, 0);
    }

private:
    bool assign(std::size_t element, std::size_t used) {
        if (element == r_) return leaf(used);
        // Remaining elements must still be able to open the missing blocks.
        if (nonempty_ && k_ - used > r_ - element) return false;
        const std::size_t limit = std::min(used + 1, k_);
        for (std::size_t b = 0; b < limit; ++b) {
            blocks_[b] |= std::size_t{1} << element;
            const bool ok = assign(element + 1, std::max(used, b + 1));
            blocks_[b] &= ~(std::size_t{1} << element);
            if (ok) return true;
        }
        return false;
    }

    bool leaf(std::size_t used) {
        if (nonempty_ && used < k_) return false;
        // An empty part contributes hull(empty set), stored at mask 0.
        const std::size_t first = used < k_ ? 0 : blocks_[0];
        std::copy_n(&hulls_[first * words_], words_, scratch_.begin());
        for (std::size_t b = 0; b < used; ++b) {
            const std::uint64_t* h = &hulls_[blocks_[b] * words_];
            for (std::size_t w = 0; w < words_; ++w) scratch_[w] &= h[w];
        }
        return std::any_of(scratch_.begin(), scratch_.end(), [](std::uint64_t w) { return w != 0; });
    }

    const std::vector<std::uint64_t>& hulls_;
    std::size_t words_;
    std::size_t r_;
    std::size_t k_;
    bool nonempty_;
    std::vector<std::size_t> blocks_;
    std::vector<std::uint64_t> scratch_;
};

constexpr std::size_t max_partition_points = 20;

bool partition_exists(const PointKernel& kernel, std::span<const Vertex> points, int k, bool nonempty) {
    if (points.size() > max_partition_points) throw BudgetExceeded("partition search: more than 20 points");
    const auto hulls = kernel.all_subset_hulls(points);
    return PartitionSearch(hulls, kernel.words(), points.size(), k, nonempty).found();
}

std::vector<Vertex> pool_list(const ConvexityFamily& family, const std::optional<VertexSet>& pool) {
    if (!pool) return to_vertex_list(family.ambient_vertices());
    if (pool->size() != family.ambient().vertex_count()) throw InvalidInput("pool: wrong vertex universe");
    if (!pool->is_subset_of(family.ambient_vertices())) throw InvalidInput("pool: contains non-vertices of the ambient");
    return to_vertex_list(*pool);
}

std::vector<Vertex> pick(const std::vector<Vertex>& pool, const std::vector<std::size_t>& combo) {
    std::vector<Vertex> out;
    out.reserve(combo.size());
    for (std::size_t i : combo) out.push_back(pool[i]);
    return out;
}

bool intersects(const VertexSet& a) { return a.any(); }

bool hull_vertices_contains(const ConvexityFamily& family, std::span<const Vertex> points, Vertex x) {
    return family.hull_vertices(make_vertex_set(family.ambient().vertex_count(), points)).test(x);
}

}  // namespace

bool has_tverberg_partition(const ConvexityFamily& family, std::span<const Vertex> points, int k, bool nonempty_parts) {
    if (k < 1) throw InvalidInput("partition: k must be positive");
    return partition_exists(PointKernel(family), points, k, nonempty_parts);
}

InvariantResult tverberg_number(const ConvexityFamily& family, int k, int cap, const PartitionOptions& options) {
    if (k < 2) throw InvalidInput("tverberg_number: k must be at least 2");
    if (cap < 1) throw InvalidInput("tverberg_number: cap must be at least 1");
    const auto pool = pool_list(family, options.pool);
    if (pool.empty()) throw InvalidInput("tverberg_number: empty pool");
    const PointKernel kernel(family);

    InvariantResult result;
    result.kind = k == 2 ? InvariantKind::radon : InvariantKind::tverberg;
    result.k = k;
    result.caps = {{"cap", cap}, {"pool_size", static_cast<std::int64_t>(pool.size())}};
    result.flags = {{"nonempty_parts", options.nonempty_parts}};

    const std::size_t n = pool.size();
    const std::size_t limit = std::min<std::size_t>(static_cast<std::size_t>(cap), n);
    std::optional<std::vector<Vertex>> last_failure;
    for (std::size_t r = 1; r <= limit; ++r) {
        const std::uint64_t count = binomial(n, r);
        const std::uint64_t failing = parallel_find_first(count, options.jobs, [&](std::uint64_t rank) {
            const auto points = pick(pool, unrank_combination(rank, n, r));
            return !partition_exists(kernel, points, k, options.nonempty_parts);
        });
        if (failing == count) {
            result.marker = ValueMarker::exact;
            result.value = r;
            if (last_failure) result.certificate = Certificate{"no_partition", *last_failure, {}, std::nullopt, 0, r - 1};
            return result;
        }
        last_failure = pick(pool, unrank_combination(failing, n, r));
    }
    result.marker = limit == n ? ValueMarker::infinite_within_pool : ValueMarker::greater_than;
    result.value = limit;
    result.certificate = Certificate{"no_partition", *last_failure, {}, std::nullopt, 0, limit};
    return result;
}

InvariantResult radon_number(const ConvexityFamily& family, int cap, const PartitionOptions& options) {
    return tverberg_number(family, 2, cap, options);
}

namespace {

struct HellyDfs {
    HellyDfs(const ConvexityFamily& f, std::size_t c) : family(f), cap(c) {}

    const ConvexityFamily& family;
    std::size_t cap;
    std::size_t best = 0;
    std::vector<std::size_t> witness;
    bool truncated = false;
    std::vector<std::size_t> chosen;

    void run(const VertexSet& current, const std::vector<VertexSet>& without, std::size_t start) {
        for (std::size_t a = start; a < family.size(); ++a) {
            const VertexSet& va = family.member_vertices(a);
            VertexSet next = current & va;
            if (!intersects(next)) {
                if (!intersects(current)) continue;
                bool minimal = true;
                for (const auto& w : without)
                    if (!w.intersects(va)) {
                        minimal = false;
                        break;
                    }
                if (minimal && chosen.size() + 1 > best) {
                    best = chosen.size() + 1;
                    witness = chosen;
                    witness.push_back(a);
                }
                continue;
            }
            if (next == current) continue;
            std::vector<VertexSet> next_without;
            next_without.reserve(without.size() + 1);
            bool irredundant = true;
            for (const auto& w : without) {
                next_without.push_back(w & va);
                if (next_without.back() == next) {
                    irredundant = false;
                    break;
                }
            }
            if (!irredundant) continue;
            if (chosen.size() + 1 > cap) {
                truncated = true;
                continue;
            }
            next_without.push_back(current);
            chosen.push_back(a);
            run(next, next_without, a + 1);
            chosen.pop_back();
        }
    }
};

}  // namespace

std::size_t helly_number_by_definition(const ConvexityFamily& family) {
    const std::size_t m = family.size();
    if (m > 20) throw BudgetExceeded("helly definition scan: more than 20 members");
    const std::size_t masks = std::size_t{1} << m;
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<VertexSet> meet(masks);
    std::vector<std::size_t> smallest_bad(masks, none);
    std::size_t h = 0;
    meet[0] = family.ambient_vertices();
    for (std::size_t mask = 0; mask < masks; ++mask) {
        if (mask != 0) {
            const std::size_t low = static_cast<std::size_t>(std::countr_zero(mask));
            meet[mask] = meet[mask & (mask - 1)] & family.member_vertices(low);
        }
        std::size_t best = meet[mask].any() ? none : static_cast<std::size_t>(std::popcount(mask));
        for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1)
            best = std::min(best, smallest_bad[mask & ~(std::size_t{1} << std::countr_zero(bits))]);
        smallest_bad[mask] = best;
        if (meet[mask].none()) h = std::max(h, best);
    }
    return h;
}

InvariantResult helly_number(const ConvexityFamily& family, int cap) {
    if (cap < 1) throw InvalidInput("helly_number: cap must be at least 1");
    HellyDfs dfs(family, static_cast<std::size_t>(cap));
    dfs.run(family.ambient_vertices(), {}, 0);

    InvariantResult result;
    result.kind = InvariantKind::helly;
    result.caps = {{"cap", cap}};
    if (dfs.best > static_cast<std::size_t>(cap)) {
        result.marker = ValueMarker::greater_than;
        result.value = static_cast<std::size_t>(cap);
    } else {
        result.marker = dfs.truncated ? ValueMarker::at_least : ValueMarker::exact;
        result.value = dfs.best;
    }
    if (dfs.best > 0) result.certificate = Certificate{"minimal_empty", {}, dfs.witness, std::nullopt, 0, dfs.best};

    const bool cross = result.marker == ValueMarker::exact && family.size() <= 16;
    result.flags = {{"cross_checked", cross}};
    if (cross && helly_number_by_definition(family) != result.value)
        throw std::logic_error("helly_number: definition scan disagrees with minimal-subfamily search");
    return result;
}

namespace {

/// Inclusion-minimal witnesses for one target vertex x. A set T is explored
/// only while every p in T has a member avoiding x whose trace on T is
/// exactly T - {p}; this property passes to subsets, so the search is a
/// plain subset DFS.
/// T witnesses x minimally exactly when no member avoiding x contains T.
struct WitnessSearch {
    const ConvexityFamily& family;
    const std::vector<Vertex>& pool;
    std::size_t cap;
    IndexSet avoiding;  // members that do not contain x
    std::size_t best = 0;
    bool found = false;
    bool truncated = false;
    std::vector<Vertex> witness;
    std::vector<Vertex> chosen;

    WitnessSearch(const ConvexityFamily& f, const std::vector<Vertex>& p, std::size_t c, Vertex x)
        : family(f), pool(p), cap(c), avoiding(~f.members_containing(x)) {}

    void run() {
        std::vector<IndexSet> drop_one;
        visit(avoiding, drop_one, 0);
    }

    void visit(const IndexSet& containing_all, const std::vector<IndexSet>& drop_one, std::size_t start) {
        if (containing_all.none()) {
            if (!found || chosen.size() > best) {
                found = true;
                best = chosen.size();
                witness = chosen;
            }
            return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
            const IndexSet& with_q = family.members_containing(pool[i]);
            std::vector<IndexSet> next;
            next.reserve(drop_one.size() + 1);
            bool independent = true;
            for (const auto& d : drop_one) {
                next.push_back(d & with_q);
                if (next.back().none()) {
                    independent = false;
                    break;
                }
            }
            if (!independent) continue;
            next.push_back(containing_all - with_q);
            if (next.back().none()) continue;
            if (chosen.size() == cap) {
                truncated = true;
                return;
            }
            chosen.push_back(pool[i]);
            visit(containing_all & with_q, next, i + 1);
            chosen.pop_back();
        }
    }
};

}  // namespace

InvariantResult caratheodory_number(const ConvexityFamily& family, int cap, std::optional<VertexSet> pool_set,
                                    unsigned jobs) {
    if (cap < 1) throw InvalidInput("caratheodory_number: cap must be at least 1");
    const auto pool = pool_list(family, pool_set);
    if (pool.empty()) throw InvalidInput("caratheodory_number: empty pool");
    const auto targets = to_vertex_list(family.ambient_vertices());

    std::vector<WitnessSearch> searches;
    searches.reserve(targets.size());
    for (Vertex x : targets) searches.emplace_back(family, pool, static_cast<std::size_t>(cap), x);
    parallel_for(searches.size(), jobs, [&](std::uint64_t i) { searches[i].run(); });

    InvariantResult result;
    result.kind = InvariantKind::caratheodory;
    result.caps = {{"cap", cap}, {"pool_size", static_cast<std::int64_t>(pool.size())}};
    result.marker = ValueMarker::exact;
    const WitnessSearch* top = nullptr;
    for (const auto& search : searches) {
        if (search.truncated) result.marker = ValueMarker::at_least;
        if (search.found && (!top || search.best > top->best)) top = &search;
    }
    if (top) {
        const Vertex x = targets[static_cast<std::size_t>(top - searches.data())];
        result.value = top->best;
        if (top->best > 0) result.certificate = Certificate{"caratheodory", top->witness, {}, x, 0, top->best};
    }
    return result;
}

InvariantResult topological_complexity(const ConvexityFamily& family, int k, const TcOptions& options) {
    if (k != tc_infinity && k < 1) throw InvalidInput("topological_complexity: k must be positive or infinite");
    const int up_to = k == tc_infinity ? std::max(1, family.ambient().dimension() + 1) : k;

    InvariantResult result;
    result.kind = InvariantKind::tc;
    result.k = k;
    result.flags = {{"include_empty_subfamily", options.include_empty_subfamily}};
    result.caps = {{"subfamily_cap", options.subfamily_cap}, {"dimensions", up_to}};

    std::size_t best = 0;
    auto consider = [&](const IndexSet& simplices, const std::vector<std::size_t>& members) {
        if (simplices.none()) return;
        const auto betti = reduced_betti(Subcomplex(family.ambient_ptr(), simplices), up_to);
        for (int i = 0; i < up_to; ++i) {
            const std::size_t b = betti.values[static_cast<std::size_t>(i)];
            if (b > best) {
                best = b;
                result.certificate = Certificate{"betti", {}, members, std::nullopt, i, b};
            }
        }
    };

    if (options.include_empty_subfamily) consider(Subcomplex::whole(family.ambient_ptr()).mask(), {});

    if (options.samples > 0) {
        result.marker = ValueMarker::at_least;
        result.caps["samples"] = options.samples;
        result.caps["seed"] = static_cast<std::int64_t>(options.seed);
        Rng rng(options.seed);
        for (int s = 0; s < options.samples && family.size() > 0; ++s) {
            std::vector<std::size_t> members;
            while (members.empty())
                for (std::size_t i = 0; i < family.size(); ++i)
                    if (rng.coin()) members.push_back(i);
            IndexSet meet = family.member(members[0]).mask();
            for (std::size_t i : members) meet &= family.member(i).mask();
            consider(meet, members);
        }
        result.value = best;
        return result;
    }

    if (family.size() > static_cast<std::size_t>(std::max(0, options.subfamily_cap)))
        throw BudgetExceeded("topological_complexity: family has " + std::to_string(family.size()) +
                             " members, above the subfamily cap " + std::to_string(options.subfamily_cap));

    // Intersections of nonempty subfamilies are exactly the closure of the
    // members under pairwise intersection; each is evaluated once.
    std::map<IndexSet, std::vector<std::size_t>> seen;
    std::vector<std::pair<IndexSet, std::vector<std::size_t>>> order;
    for (std::size_t i = 0; i < family.size(); ++i)
        if (seen.emplace(family.member(i).mask(), std::vector<std::size_t>{i}).second)
            order.emplace_back(family.member(i).mask(), std::vector<std::size_t>{i});
    for (std::size_t next = 0; next < order.size(); ++next) {
        for (std::size_t i = 0; i < family.size(); ++i) {
            IndexSet meet = order[next].first & family.member(i).mask();
            if (seen.count(meet)) continue;
            auto members = order[next].second;
            members.insert(std::upper_bound(members.begin(), members.end(), i), i);
            seen.emplace(meet, members);
            order.emplace_back(std::move(meet), std::move(members));
        }
    }
    for (const auto& [simplices, members] : order) consider(simplices, members);
    result.marker = ValueMarker::exact;
    result.value = best;
    result.caps["distinct_intersections"] = static_cast<std::int64_t>(order.size());
    return result;
}

bool revalidate(const ConvexityFamily& family, const InvariantResult& result) {
    if (!result.certificate) {
        switch (result.kind) {
            case InvariantKind::radon:
            case InvariantKind::tverberg: return result.marker == ValueMarker::exact && result.value <= 1;
            default: return result.value == 0;
        }
    }
    const Certificate& cert = *result.certificate;
    try {
        if (cert.kind == "no_partition") {
            if (result.kind != InvariantKind::radon && result.kind != InvariantKind::tverberg) return false;
            const std::size_t expected = result.marker == ValueMarker::exact ? result.value - 1 : result.value;
            const bool nonempty = result.flags.count("nonempty_parts") && result.flags.at("nonempty_parts");
            return cert.points.size() == expected && !has_tverberg_partition(family, cert.points, result.k, nonempty);
        }
        if (cert.kind == "minimal_empty") {
            if (result.kind != InvariantKind::helly) return false;
            const std::size_t expected = result.marker == ValueMarker::greater_than ? result.value + 1 : result.value;
            if (cert.members.size() < expected || (result.marker == ValueMarker::exact && cert.members.size() != expected))
                return false;
            VertexSet all = family.ambient_vertices();
            for (std::size_t i : cert.members) all &= family.member_vertices(i);
            if (all.any()) return false;
            for (std::size_t drop = 0; drop < cert.members.size(); ++drop) {
                VertexSet rest = family.ambient_vertices();
                for (std::size_t j = 0; j < cert.members.size(); ++j)
                    if (j != drop) rest &= family.member_vertices(cert.members[j]);
                if (rest.none()) return false;
            }
            return true;
        }
        if (cert.kind == "caratheodory") {
            if (result.kind != InvariantKind::caratheodory || !cert.point || cert.points.size() != result.value) return false;
            const Vertex x = *cert.point;
            if (!hull_vertices_contains(family, cert.points, x)) return false;
            for (std::size_t drop = 0; drop < cert.points.size(); ++drop) {
                std::vector<Vertex> rest;
                for (std::size_t j = 0; j < cert.points.size(); ++j)
                    if (j != drop) rest.push_back(cert.points[j]);
                if (hull_vertices_contains(family, rest, x)) return false;
            }
            return true;
        }
        if (cert.kind == "betti") {
            if (result.kind != InvariantKind::tc || cert.value != result.value) return false;
            IndexSet meet(family.ambient().size());
            meet.set();
            for (std::size_t i : cert.members) meet &= family.member(i).mask();
            const auto betti = reduced_betti(Subcomplex(family.ambient_ptr(), meet), cert.dimension + 1);
            return betti.values[static_cast<std::size_t>(cert.dimension)] == cert.value;
        }
    } catch (const InvalidInput&) {
        return false;
    }
    return false;
}

}  // namespace relconv
