#include "relconv/ramsey.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>

#include "relconv/combinatorics.hpp"
#include "relconv/error.hpp"
#include "relconv/parallel.hpp"
#include "relconv/random.hpp"

namespace relconv {

namespace {

std::uint64_t hash_subset(std::uint64_t h, std::span<const std::size_t> s) {
    for (std::size_t x : s) h = mix64(h ^ (static_cast<std::uint64_t>(x) + 1) * 0x100000001b3ULL);
    return mix64(h ^ 0xa5a5a5a5ULL);
}

bool is_set(std::span<const std::size_t> s) {
    return std::adjacent_find(s.begin(), s.end(), std::greater_equal<>()) == s.end();
}

std::string subset_string(std::span<const std::size_t> s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

Subset unite(const Subset& a, const Subset& b) {
    Subset out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

/// Checks that every k-subset of z has one color under rho_v; on failure
/// reports two k-subsets with different colors.
struct Mono {
    bool ok = true;
    int color = -1;
    Subset first, second;
};

Mono monochromatic(const ColoringOracle& oracle, const Subset& v, const Subset& z) {
    Mono out;
    const auto k = static_cast<std::size_t>(oracle.k());
    Subset reference;
    for_each_combination(z.size(), k, [&](const std::vector<std::size_t>& pos) {
        Subset ks;
        for (std::size_t p : pos) ks.push_back(z[p]);
        const int c = oracle.color(v, ks);
        if (out.color < 0) {
            out.color = c;
            reference = ks;
            return true;
        }
        if (c == out.color) return true;
        out.ok = false;
        out.first = reference;
        out.second = ks;
        return false;
    });
    return out;
}

}  // namespace

std::optional<Subset> find_monochromatic(std::size_t ground, int k, int c, const GlobalColoring& coloring, std::size_t n) {
    if (k < 1 || c < 1) throw InvalidInput("find_monochromatic: k and c must be positive");
    if (n > ground) return std::nullopt;
    const auto uk = static_cast<std::size_t>(k);
    Subset chosen;
    int reference = -1;
    auto color_of = [&](std::span<const std::size_t> ks) {
        const int col = coloring(ks);
        if (col < 0 || col >= c) throw InvalidInput("find_monochromatic: color out of range");
        return col;
    };
    auto extend = [&](auto&& self) -> bool {
        if (chosen.size() == n) return true;
        const std::size_t start = chosen.empty() ? 0 : chosen.back() + 1;
        for (std::size_t e = start; e + (n - chosen.size()) <= ground; ++e) {
            const int saved = reference;
            bool ok = true;
            if (chosen.size() + 1 >= uk) {
                for_each_combination(chosen.size(), uk - 1, [&](const std::vector<std::size_t>& pos) {
                    Subset ks;
                    for (std::size_t p : pos) ks.push_back(chosen[p]);
                    ks.push_back(e);
                    const int col = color_of(ks);
                    if (reference < 0) reference = col;
                    ok = col == reference;
                    return ok;
                });
            }
            if (ok) {
                chosen.push_back(e);
                if (self(self)) return true;
                chosen.pop_back();
            }
            reference = saved;
        }
        return false;
    };
    if (extend(extend)) return chosen;
    return std::nullopt;
}

std::uint64_t pigeonhole_bound(std::uint64_t n, std::uint64_t c) {
    if (n < 1 || c < 1) throw InvalidInput("pigeonhole_bound: n and c must be positive");
    return c * (n - 1) + 1;
}

ColoringOracle::ColoringOracle(std::size_t ground, int k, int c, Fn fn, std::string description)
    : ground_(ground), k_(k), c_(c), fn_(std::move(fn)), description_(std::move(description)) {
    if (k < 1 || c < 1) throw InvalidInput("coloring oracle: k and c must be positive");
    if (!fn_) throw InvalidInput("coloring oracle: missing coloring");
}

ColoringOracle ColoringOracle::constant(std::size_t ground, int k, int c, int color) {
    if (color < 0 || color >= c) throw InvalidInput("coloring oracle: constant color out of range");
    return ColoringOracle(
        ground, k, c, [color](std::span<const std::size_t>, std::span<const std::size_t>) { return color; },
        "constant:" + std::to_string(color));
}

ColoringOracle ColoringOracle::subset_only(std::size_t ground, int k, int c, std::uint64_t seed) {
    return ColoringOracle(
        ground, k, c,
        [seed, c](std::span<const std::size_t>, std::span<const std::size_t> ks) {
            return static_cast<int>(hash_subset(seed, ks) % static_cast<std::uint64_t>(c));
        },
        "subset_only:" + std::to_string(seed));
}

ColoringOracle ColoringOracle::random(std::size_t ground, int k, int c, std::uint64_t seed) {
    return ColoringOracle(
        ground, k, c,
        [seed, c](std::span<const std::size_t> v, std::span<const std::size_t> ks) {
            return static_cast<int>(hash_subset(hash_subset(seed, v), ks) % static_cast<std::uint64_t>(c));
        },
        "random:" + std::to_string(seed));
}

int ColoringOracle::color(std::span<const std::size_t> v, std::span<const std::size_t> k_subset) const {
    if (k_subset.size() != static_cast<std::size_t>(k_)) throw InvalidInput("coloring oracle: subset is not a k-subset");
    if (!is_set(v) || !is_set(k_subset) || (!v.empty() && v.back() >= ground_))
        throw InvalidInput("coloring oracle: V must be a sorted subset of the ground set");
    if (!std::includes(v.begin(), v.end(), k_subset.begin(), k_subset.end()))
        throw InvalidInput("coloring oracle: k-subset " + subset_string(k_subset) + " is not inside V");
    const int c = fn_(v, k_subset);
    if (c < 0 || c >= c_) throw InvalidInput("coloring oracle: color out of range");
    return c;
}

ColoringOracle ColoringOracle::tabulated() const {
    if (ground_ > 12) throw BudgetExceeded("coloring oracle: tables are limited to 12 ground elements");
    auto table = std::make_shared<std::unordered_map<std::uint32_t, int>>();
    const std::uint32_t masks = 1U << ground_;
    for (std::uint32_t vm = 0; vm < masks; ++vm) {
        Subset v;
        for (std::size_t i = 0; i < ground_; ++i)
            if (vm >> i & 1U) v.push_back(i);
        for_each_combination(v.size(), static_cast<std::size_t>(k_), [&](const std::vector<std::size_t>& pos) {
            Subset ks;
            std::uint32_t km = 0;
            for (std::size_t p : pos) {
                ks.push_back(v[p]);
                km |= 1U << v[p];
            }
            (*table)[vm << 12 | km] = color(v, ks);
            return true;
        });
    }
    auto mask_of = [](std::span<const std::size_t> s) {
        std::uint32_t m = 0;
        for (std::size_t x : s) m |= 1U << x;
        return m;
    };
    return ColoringOracle(
        ground_, k_, c_,
        [table, mask_of](std::span<const std::size_t> v, std::span<const std::size_t> ks) {
            return table->at(mask_of(v) << 12 | mask_of(ks));
        },
        description_ + ":table");
}

namespace {

struct SelectionOutcome {
    bool found = false;
    bool aborted = false;
    std::uint64_t nodes = 0;
    SelectionCertificate certificate;
};

SelectionOutcome select_for(const ColoringOracle& oracle, const Subset& y, std::size_t m, std::uint64_t budget) {
    SelectionOutcome out;
    std::vector<Subset> zs;
    for_each_combination(y.size(), m, [&](const std::vector<std::size_t>& pos) {
        Subset z;
        for (std::size_t p : pos) z.push_back(y[p]);
        zs.push_back(std::move(z));
        return true;
    });
    std::vector<bool> taken(oracle.ground(), false);
    for (std::size_t e : y) taken[e] = true;
    std::vector<SelectionEntry> entries;

    auto assign = [&](auto&& self, std::size_t zi) -> bool {
        if (zi == zs.size()) return true;
        Subset free;
        for (std::size_t e = 0; e < oracle.ground(); ++e)
            if (!taken[e]) free.push_back(e);
        for (std::size_t size = 0; size <= free.size(); ++size) {
            bool done = false;
            for_each_combination(free.size(), size, [&](const std::vector<std::size_t>& pos) {
                if (++out.nodes > budget) {
                    out.aborted = true;
                    return false;
                }
                Subset extra;
                for (std::size_t p : pos) extra.push_back(free[p]);
                const Mono mono = monochromatic(oracle, unite(zs[zi], extra), zs[zi]);
                if (!mono.ok) return true;
                for (std::size_t e : extra) taken[e] = true;
                entries.push_back({zs[zi], extra, mono.color});
                if (self(self, zi + 1)) {
                    done = true;
                    return false;
                }
                entries.pop_back();
                for (std::size_t e : extra) taken[e] = false;
                return !out.aborted;
            });
            if (done) return true;
            if (out.aborted) return false;
        }
        return false;
    };
    if (assign(assign, 0)) {
        out.found = true;
        out.certificate = SelectionCertificate{y, std::move(entries)};
    }
    return out;
}

}  // namespace

SelectionResult selection_search(const ColoringOracle& oracle, int m, std::size_t n, std::uint64_t budget, unsigned jobs) {
    if (m < 0) throw InvalidInput("selection_search: m must be non-negative");
    SelectionResult result;
    const std::size_t ground = oracle.ground();
    if (n > ground) return result;
    const std::uint64_t count = binomial(ground, n);
    auto found = ordered_subtree_search<SelectionOutcome>(count, jobs, budget, result.nodes,
                                                          [&](std::uint64_t rank, std::uint64_t limit) {
                                                              return select_for(oracle, unrank_combination(rank, ground, n),
                                                                                static_cast<std::size_t>(m), limit);
                                                          });
    if (found) result.certificate = std::move(found->certificate);
    return result;
}

SelectionCheck validate_selection(const SelectionCertificate& cert, const ColoringOracle& oracle, int m, std::size_t n) {
    auto fail = [](std::string violation, std::string detail) {
        SelectionCheck check;
        check.ok = false;
        check.violation = std::move(violation);
        check.detail = std::move(detail);
        return check;
    };
    if (m < 0) return fail("wrong_size", "m is negative");
    const auto um = static_cast<std::size_t>(m);
    if (cert.y.size() != n) return fail("wrong_size", "Y has " + std::to_string(cert.y.size()) + " elements, expected " + std::to_string(n));
    if (!is_set(cert.y) || (!cert.y.empty() && cert.y.back() >= oracle.ground()))
        return fail("bad_element", "Y is not a sorted subset of the ground set");

    std::vector<Subset> expected;
    for_each_combination(cert.y.size(), um, [&](const std::vector<std::size_t>& pos) {
        Subset z;
        for (std::size_t p : pos) z.push_back(cert.y[p]);
        expected.push_back(std::move(z));
        return true;
    });
    std::vector<Subset> present;
    for (const auto& e : cert.entries) present.push_back(e.z);
    std::sort(present.begin(), present.end());
    if (std::adjacent_find(present.begin(), present.end()) != present.end())
        return fail("missing_z", "some Z is listed twice");
    for (const auto& z : expected)
        if (!std::binary_search(present.begin(), present.end(), z)) return fail("missing_z", "no entry for Z = " + subset_string(z));
    if (present.size() != expected.size()) return fail("missing_z", "entries for sets that are not m-subsets of Y");

    for (const auto& e : cert.entries) {
        if (!is_set(e.m) || (!e.m.empty() && e.m.back() >= oracle.ground()))
            return fail("bad_element", "M for Z = " + subset_string(e.z) + " is not a sorted subset of the ground set");
        Subset meet;
        std::set_intersection(e.m.begin(), e.m.end(), cert.y.begin(), cert.y.end(), std::back_inserter(meet));
        if (!meet.empty()) return fail("m_meets_y", "M for Z = " + subset_string(e.z) + " meets Y in " + subset_string(meet));
    }
    for (std::size_t a = 0; a < cert.entries.size(); ++a)
        for (std::size_t b = a + 1; b < cert.entries.size(); ++b) {
            Subset meet;
            std::set_intersection(cert.entries[a].m.begin(), cert.entries[a].m.end(), cert.entries[b].m.begin(),
                                  cert.entries[b].m.end(), std::back_inserter(meet));
            if (!meet.empty())
                return fail("overlap", "M sets of Z = " + subset_string(cert.entries[a].z) + " and Z = " +
                                           subset_string(cert.entries[b].z) + " share " + subset_string(meet));
        }
    for (const auto& e : cert.entries) {
        const Mono mono = monochromatic(oracle, unite(e.z, e.m), e.z);
        if (!mono.ok)
            return fail("not_monochromatic", "Z = " + subset_string(e.z) + ": " + subset_string(mono.first) + " and " +
                                                 subset_string(mono.second) + " differ");
        if (mono.color != e.color)
            return fail("color_mismatch", "Z = " + subset_string(e.z) + " has color " + std::to_string(mono.color) +
                                              ", certificate says " + std::to_string(e.color));
    }
    return {};
}

std::vector<std::size_t> relative_position(std::span<const std::size_t> v, std::span<const std::size_t> a) {
    Subset sv(v.begin(), v.end());
    std::sort(sv.begin(), sv.end());
    if (std::adjacent_find(sv.begin(), sv.end()) != sv.end()) throw InvalidInput("relative_position: V has duplicates");
    std::vector<std::size_t> ranks;
    for (std::size_t x : a) {
        const auto it = std::lower_bound(sv.begin(), sv.end(), x);
        if (it == sv.end() || *it != x) throw InvalidInput("relative_position: A is not a subset of V");
        ranks.push_back(static_cast<std::size_t>(it - sv.begin()) + 1);
    }
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    return ranks;
}

std::optional<std::uint64_t> selection_bound(int k, int m, std::size_t n, int c) {
    if (k < 1 || m < 0 || c < 1) throw InvalidInput("selection_bound: need k >= 1, m >= 0, c >= 1");
    const auto um = static_cast<std::uint64_t>(m);
    // r = R_k(m; c) where a closed form is known.
    std::optional<std::uint64_t> r;
    if (m < k || c == 1) r = um;
    else if (k == 1) r = pigeonhole_bound(um, static_cast<std::uint64_t>(c));
    if (!r) return std::nullopt;
    const std::uint64_t big_n = n + binomial(n, um) * (*r - um);
    const std::uint64_t colors = binomial(*r, um);
    // R_r(N; colors): trivial with one color or when N < r; pigeonhole when r = 1.
    if (colors == 1 || big_n < *r) return big_n;
    if (*r == 1) return pigeonhole_bound(big_n, colors);
    return std::nullopt;
}

}  // namespace relconv
