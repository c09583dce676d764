#include "relconv/suite.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>

#include "relconv/chain_map.hpp"
#include "relconv/combinatorics.hpp"
#include "relconv/error.hpp"
#include "relconv/family_gallery.hpp"
#include "relconv/fixtures.hpp"
#include "relconv/gallery.hpp"
#include "relconv/homology.hpp"
#include "relconv/nerve.hpp"
#include "relconv/random.hpp"
#include "relconv/ramsey.hpp"

namespace relconv {

namespace {

std::string join(const std::vector<std::size_t>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + std::to_string(values[i]);
    return out + ")";
}

std::string describe(const InvariantResult& r) {
    return kind_name(r.kind) + "=" + std::to_string(r.value) +
           (r.marker == ValueMarker::exact ? "" : " [" + marker_name(r.marker) + "]");
}

bool exact_is(const InvariantResult& r, std::size_t value) { return r.marker == ValueMarker::exact && r.value == value; }

int pool_cap(const ConvexityFamily& family) { return static_cast<int>(family.ambient_vertices().count()); }

// --- individual checks -----------------------------------------------------

SuiteRow star_check(const SuiteOptions& options) {
    SuiteRow row{"1", "star families: caratheodory = c and TC(inf) = 0", true, false, ""};
    for (int c = 2; c <= 4; ++c) {
        const ConvexityFamily family = star_family(c);
        const auto cara = caratheodory_number(family, c + 1, std::nullopt, options.jobs);
        const auto tc = topological_complexity(family, tc_infinity);
        const bool ok = exact_is(cara, static_cast<std::size_t>(c)) && exact_is(tc, 0);
        row.passed = row.passed && ok;
        row.detail += (c > 2 ? "; " : "") + std::string("c=") + std::to_string(c) + ": " + describe(cara) + ", " +
                      describe(tc);
    }
    return row;
}

SuiteRow line_check(const SuiteOptions& options) {
    SuiteRow row{"2", "intervals(8): radon 3, helly 2, tverberg(3) 5, TC1 0, caratheodory 2", true, false, ""};
    const ConvexityFamily family = intervals_family(8);
    PartitionOptions popts;
    popts.jobs = options.jobs;
    TcOptions topts;
    topts.subfamily_cap = 64;
    const std::vector<std::pair<InvariantResult, std::size_t>> checks = {
        {radon_number(family, 6, popts), 3},
        {helly_number(family, 8), 2},
        {tverberg_number(family, 3, 7, popts), 5},
        {topological_complexity(family, 1, topts), 0},
        {caratheodory_number(family, pool_cap(family), std::nullopt, options.jobs), 2},
    };
    for (std::size_t i = 0; i < checks.size(); ++i) {
        row.passed = row.passed && exact_is(checks[i].first, checks[i].second);
        row.detail += (i ? ", " : "") + describe(checks[i].first);
    }
    return row;
}

SuiteRow homology_check() {
    SuiteRow row{"3", "homology fixtures over Z2", true, false, ""};
    struct Case {
        std::string name;
        SimplicialComplex complex;
        std::vector<std::size_t> expected;
    };
    std::vector<Case> cases = {
        {"octahedron_sphere", octahedron_sphere(), {0, 0, 1}},
        {"torus7", torus7(), {0, 2, 1}},
        {"klein_bottle_min", klein_bottle_min(), {0, 2, 1}},
    };
    for (int n = 3; n <= 9; ++n) cases.push_back({"cycle(" + std::to_string(n) + ")", cycle_complex(n), {0, 1}});
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto betti = reduced_betti(cases[i].complex, static_cast<int>(cases[i].expected.size()));
        row.passed = row.passed && betti.values == cases[i].expected;
        row.detail += (i ? ", " : "") + cases[i].name + " " + join(betti.values);
    }
    return row;
}

struct ExactPair {
    std::uint64_t seed;
    std::size_t r_f;
    std::size_t r_g;
};

/// The first `count` seeds whose family F and random subfamily G both have
/// exact Radon numbers.
std::vector<ExactPair> radon_pairs(std::size_t count, unsigned jobs) {
    std::vector<ExactPair> pairs;
    PartitionOptions opts;
    opts.jobs = jobs;
    for (std::uint64_t seed = 5000; pairs.size() < count && seed < 5000 + 20 * count; ++seed) {
        const ConvexityFamily f = small_random_family(seed, 1, 6);
        Rng rng(mix64(seed));
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (rng.coin()) keep.push_back(i);
        const ConvexityFamily g = f.subfamily(keep);
        const auto rf = radon_number(f, pool_cap(f), opts);
        const auto rg = radon_number(g, pool_cap(g), opts);
        if (rf.marker != ValueMarker::exact || rg.marker != ValueMarker::exact) continue;
        pairs.push_back({seed, rf.value, rg.value});
    }
    return pairs;
}

SuiteRow levi_check(const SuiteOptions& options) {
    SuiteRow row{"4", "Levi: helly <= radon - 1 on 200 random families", true, false, ""};
    PartitionOptions opts;
    opts.jobs = options.jobs;
    std::size_t tested = 0;
    std::size_t violations = 0;
    std::string first;
    for (std::uint64_t seed = 1000; tested < 200 && seed < 5000; ++seed) {
        const ConvexityFamily family = small_random_family(seed, 1, 6);
        const auto r = radon_number(family, pool_cap(family), opts);
        if (r.marker != ValueMarker::exact) continue;
        const auto h = helly_number(family, static_cast<int>(std::max<std::size_t>(family.size(), 1)));
        ++tested;
        if (h.marker != ValueMarker::exact || h.value + 1 > r.value) {
            ++violations;
            if (first.empty()) first = "; first at seed " + std::to_string(seed) + ": " + describe(h) + ", " + describe(r);
        }
    }
    row.passed = tested == 200 && violations == 0;
    row.detail = std::to_string(tested) + " families, " + std::to_string(violations) + " violations" + first;
    return row;
}

SuiteRow monotone_check(const SuiteOptions& options, bool literal) {
    SuiteRow row;
    if (literal) {
        row = {"5", "anti-monotonicity as stated: r(F) <= r(G) for G a subfamily of F", true, false, ""};
    } else {
        row = {"5r", "reverse direction: r(G) <= r(F) for G a subfamily of F", true, true, ""};
    }
    const auto pairs = radon_pairs(100, options.jobs);
    std::size_t violations = 0;
    std::string first;
    for (const auto& p : pairs) {
        const bool ok = literal ? p.r_f <= p.r_g : p.r_g <= p.r_f;
        if (ok) continue;
        ++violations;
        if (first.empty())
            first = "; first at seed " + std::to_string(p.seed) + ": r(F)=" + std::to_string(p.r_f) +
                    ", r(G)=" + std::to_string(p.r_g);
    }
    row.passed = pairs.size() == 100 && violations == 0;
    row.detail = std::to_string(pairs.size()) + " pairs, " + std::to_string(violations) + " violations" + first;
    return row;
}

SuiteRow lemma7_check() {
    SuiteRow row{"6", "constrained chain maps are almost-embeddings (100 fixtures)", true, false, ""};
    std::map<std::string, std::size_t> counts;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const Lemma7Fixture fx = random_lemma7_fixture(seed);
        const Lemma7Report report = lemma7_harness(fx.map, fx.family, fx.phi, fx.points);
        ++counts[lemma7_status_name(report.status)];
    }
    row.passed = counts["hae_confirmed"] == 100;
    for (const auto& [name, n] : counts) row.detail += (row.detail.empty() ? "" : ", ") + name + " " + std::to_string(n);
    return row;
}

SuiteRow hae_micro_check(const std::string& id, const SuiteOptions& options) {
    const auto source = share(simplex_skeleton(2, 0));
    HaeSearchOptions opts;
    opts.jobs = options.jobs;
    SuiteRow row;
    ComplexPtr target;
    bool want_found = false;
    if (id == "7a") {
        row = {id, "three points into a one-point target: no almost-embedding", false, false, ""};
        target = share(simplex_skeleton(0, 0));
    } else if (id == "7b") {
        row = {id, "three points into a two-point target: almost-embedding exists", false, false, ""};
        target = share(simplex_skeleton(1, 0));
        want_found = true;
    } else {
        row = {id, "three points into path(2): almost-embedding exists", false, true, ""};
        target = share(path_complex(2));
        want_found = true;
    }
    const auto result = exhaustive_hae_search(source, target, 5, opts);
    const bool found = result.map.has_value();
    const bool valid = !found || verify_hae(*result.map).ok;
    row.passed = found == want_found && valid;
    row.detail = std::string(found ? "found" : "none") + " after " + std::to_string(result.nodes) + " nodes";
    if (found) {
        std::string images;
        for (std::size_t v = 0; v < 3; ++v) {
            std::vector<std::size_t> verts;
            for (std::size_t t : result.map->image(v)) verts.push_back(result.map->target().simplex(t)[0]);
            images += (v ? " " : "") + std::to_string(v) + "->" + join(verts);
        }
        row.detail += ": " + images;
    }
    return row;
}

/// Every c-coloring of `ground` elements, up to permuting elements: the
/// color sequence is non-decreasing.
template <class Visit>
void each_sorted_coloring(std::size_t ground, int c, Visit&& visit) {
    std::vector<int> colors(ground, 0);
    auto rec = [&](auto&& self, std::size_t i, int min_color) -> void {
        if (i == ground) {
            visit(static_cast<const std::vector<int>&>(colors));
            return;
        }
        for (int col = min_color; col < c; ++col) {
            colors[i] = col;
            self(self, i + 1, col);
        }
    };
    rec(rec, 0, 0);
}

bool forces_monochromatic(std::size_t ground, std::size_t n, int c) {
    bool all = true;
    each_sorted_coloring(ground, c, [&](const std::vector<int>& colors) {
        if (!all) return;
        GlobalColoring coloring = [&](std::span<const std::size_t> s) { return colors[s[0]]; };
        if (!find_monochromatic(ground, 1, c, coloring, n)) all = false;
    });
    return all;
}

bool balanced_coloring_defeats(std::size_t ground, std::size_t n, int c) {
    GlobalColoring coloring = [c](std::span<const std::size_t> s) { return static_cast<int>(s[0] % static_cast<std::size_t>(c)); };
    return !find_monochromatic(ground, 1, c, coloring, n).has_value();
}

SuiteRow ramsey_check(bool literal) {
    SuiteRow row;
    if (literal) {
        row = {"8", "one-element Ramsey number equals n(c-1)+1", true, false, ""};
    } else {
        row = {"8r", "one-element Ramsey number equals c(n-1)+1", true, true, ""};
    }
    const std::vector<std::pair<std::size_t, int>> cases = {{2, 3}, {3, 2}, {4, 4}};
    for (std::size_t i = 0; i < cases.size(); ++i) {
        const auto [n, c] = cases[i];
        const std::size_t g = literal ? n * static_cast<std::size_t>(c - 1) + 1 : pigeonhole_bound(n, static_cast<std::uint64_t>(c));
        const bool forced = forces_monochromatic(g, n, c);
        const bool defeated = balanced_coloring_defeats(g - 1, n, c);
        row.passed = row.passed && forced && defeated;
        row.detail += (i ? "; " : "") + std::string("(n,c)=(") + std::to_string(n) + "," + std::to_string(c) +
                      ") ground " + std::to_string(g) + ": " + (forced ? "forced" : "not forced") + ", at " +
                      std::to_string(g - 1) + " " + (defeated ? "defeated" : "not defeated");
    }
    return row;
}

SuiteRow nerve_count_check(const SuiteOptions& options) {
    SuiteRow row{"9a", "nerve face counts equal a subset recount (50 families)", true, false, ""};
    std::size_t mismatches = 0;
    std::uint64_t total_faces = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const ConvexityFamily family = small_random_family(7000 + seed, 2, 10);
        const std::size_t n = family.size();
        const auto profile = nerve(family, static_cast<int>(n) - 1, options.jobs).profile;
        std::vector<std::uint64_t> recount(n, 0);
        for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
            VertexSet meet = family.ambient_vertices();
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1U) meet &= family.member_vertices(i);
            if (meet.any()) ++recount[static_cast<std::size_t>(std::popcount(mask)) - 1];
        }
        if (profile.f != recount) ++mismatches;
        total_faces += std::accumulate(recount.begin(), recount.end(), std::uint64_t{0});
    }
    row.passed = mismatches == 0;
    row.detail = "50 families, " + std::to_string(total_faces) + " faces, " + std::to_string(mismatches) + " mismatches";
    return row;
}

std::uint64_t brute_partite_copies(const UniformHypergraph& graph, std::size_t t) {
    const std::size_t ell = graph.uniformity();
    const std::size_t n = graph.vertex_count();
    std::vector<std::vector<std::size_t>> classes;
    std::vector<bool> used(n, false);
    std::uint64_t ordered = 0;
    auto all_edges = [&]() {
        std::vector<std::size_t> pick(ell, 0);
        while (true) {
            std::vector<std::size_t> e;
            for (std::size_t i = 0; i < ell; ++i) e.push_back(classes[i][pick[i]]);
            std::sort(e.begin(), e.end());
            if (!graph.has_edge(e)) return false;
            std::size_t i = 0;
            while (i < ell && ++pick[i] == t) pick[i++] = 0;
            if (i == ell) return true;
        }
    };
    auto rec = [&](auto&& self) -> void {
        if (classes.size() == ell) {
            ordered += all_edges();
            return;
        }
        for_each_combination(n, t, [&](const std::vector<std::size_t>& cls) {
            for (std::size_t v : cls)
                if (used[v]) return true;
            for (std::size_t v : cls) used[v] = true;
            classes.push_back(cls);
            self(self);
            classes.pop_back();
            for (std::size_t v : cls) used[v] = false;
            return true;
        });
    };
    rec(rec);
    std::uint64_t factorial = 1;
    for (std::size_t i = 2; i <= ell; ++i) factorial *= i;
    return ordered / factorial;
}

SuiteRow partite_check() {
    SuiteRow row{"9b", "partite copy counts equal brute force (l in {2,3}, t in {1,2})", true, false, ""};
    std::size_t graphs = 0;
    std::size_t mismatches = 0;
    std::uint64_t copies = 0;
    Rng rng(90210);
    for (std::size_t ell = 2; ell <= 3; ++ell) {
        for (std::size_t t = 1; t <= 2; ++t) {
            for (int trial = 0; trial < 12; ++trial) {
                const std::size_t n = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(ell * t), 8));
                const std::uint64_t keep = trial == 0 ? 100 : 35 + rng.below(60);  // percent of edges kept
                std::vector<std::vector<std::size_t>> edges;
                for_each_combination(n, ell, [&](const std::vector<std::size_t>& e) {
                    if (rng.below(100) < keep) edges.push_back(e);
                    return true;
                });
                const UniformHypergraph graph(n, ell, edges);
                const std::uint64_t fast = count_partite_copies(graph, static_cast<int>(t));
                const std::uint64_t slow = brute_partite_copies(graph, t);
                ++graphs;
                copies += slow;
                if (fast != slow) ++mismatches;
            }
        }
    }
    row.passed = mismatches == 0;
    row.detail = std::to_string(graphs) + " hypergraphs, " + std::to_string(copies) + " copies, " +
                 std::to_string(mismatches) + " mismatches";
    return row;
}

void insert_sorted(Subset& s, std::size_t x) {
    if (std::find(s.begin(), s.end(), x) == s.end()) s.insert(std::lower_bound(s.begin(), s.end(), x), x);
}

SuiteRow selection_check(const SuiteOptions& options) {
    SuiteRow row{"10", "selection certificates validate; corrupted ones are rejected (50 oracles)", true, false, ""};
    std::size_t found = 0;
    std::size_t exhausted = 0;
    std::size_t false_rejects = 0;
    std::size_t false_accepts = 0;
    std::size_t mutants = 0;
    Rng rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t ground = static_cast<std::size_t>(rng.between(7, 9));
        const int k = static_cast<int>(rng.between(1, 2));
        const int c = static_cast<int>(rng.between(2, 3));
        const int m = static_cast<int>(rng.between(2, 3));
        const std::size_t n = static_cast<std::size_t>(m) + 1;
        const std::uint64_t seed = rng.next();
        const std::uint64_t pick = rng.below(10);
        const ColoringOracle oracle = pick == 0   ? ColoringOracle::constant(ground, k, c, static_cast<int>(seed % 2))
                                      : pick < 5 ? ColoringOracle::subset_only(ground, k, c, seed)
                                                 : ColoringOracle::random(ground, k, c, seed);
        SelectionResult result;
        try {
            result = selection_search(oracle, m, n, 2'000'000, options.jobs);
        } catch (const BudgetExceeded&) {
            ++exhausted;
            continue;
        }
        if (!result.certificate) {
            ++exhausted;
            continue;
        }
        ++found;
        const SelectionCertificate& cert = *result.certificate;
        if (!validate_selection(cert, oracle, m, n)) ++false_rejects;

        std::vector<SelectionCertificate> corrupted;
        {
            SelectionCertificate bad = cert;  // M_Z meets Y
            insert_sorted(bad.entries[0].m, cert.y[0]);
            corrupted.push_back(std::move(bad));
        }
        for (std::size_t x = 0; x < ground; ++x) {
            if (std::binary_search(cert.y.begin(), cert.y.end(), x)) continue;
            SelectionCertificate bad = cert;  // two M sets share x
            insert_sorted(bad.entries[0].m, x);
            insert_sorted(bad.entries[1].m, x);
            corrupted.push_back(std::move(bad));
            break;
        }
        for (std::size_t e = 0; e < cert.entries.size(); ++e) {
            if (cert.entries[e].color < 0) continue;
            SelectionCertificate bad = cert;  // recorded color differs from the true one
            bad.entries[e].color = (bad.entries[e].color + 1) % c;
            corrupted.push_back(std::move(bad));
            break;
        }
        for (const auto& bad : corrupted) {
            ++mutants;
            if (validate_selection(bad, oracle, m, n)) ++false_accepts;
        }
    }
    row.passed = found > 0 && false_rejects == 0 && false_accepts == 0;
    row.detail = std::to_string(found) + " certificates, " + std::to_string(exhausted) + " not found, " +
                 std::to_string(mutants) + " corrupted, " + std::to_string(false_rejects) + " false rejects, " +
                 std::to_string(false_accepts) + " false accepts";
    return row;
}

SuiteRow closure_check(const SuiteOptions& options) {
    SuiteRow row{"closure", "hull is extensive, monotone, idempotent and fixes members", true, false, ""};
    const HullFn hull_fn = options.hull ? options.hull : [](const ConvexityFamily& f, const VertexSet& s) {
        return f.hull_vertices(s);
    };
    std::size_t probes = 0;
    std::string failure;
    for (std::uint64_t seed = 0; seed < 50 && failure.empty(); ++seed) {
        const ConvexityFamily family = small_random_family(3000 + seed, 1, 6);
        const auto universe = family.ambient().vertex_count();
        const auto vertices = to_vertex_list(family.ambient_vertices());
        Rng rng(seed);
        for (std::size_t i = 0; i < family.size() && failure.empty(); ++i) {
            const VertexSet& a = family.member_vertices(i);
            if (!hull_fn(family, a).is_subset_of(a)) failure = "member not closed";
            ++probes;
        }
        for (int trial = 0; trial < 20 && failure.empty(); ++trial) {
            VertexSet s(universe);
            VertexSet t(universe);
            for (Vertex v : vertices) {
                const auto roll = rng.below(4);
                if (roll == 0) s.set(v);
                if (roll <= 1) t.set(v);
            }
            const VertexSet hs = hull_fn(family, s);
            if (!s.is_subset_of(hs)) failure = "not extensive";
            else if (!hs.is_subset_of(hull_fn(family, t))) failure = "not monotone";
            else if (hull_fn(family, hs) != hs) failure = "not idempotent";
            ++probes;
        }
        if (!failure.empty()) failure += " (family seed " + std::to_string(3000 + seed) + ")";
    }
    row.passed = failure.empty();
    row.detail = std::to_string(probes) + " probes" + (failure.empty() ? "" : ", " + failure);
    return row;
}

}  // namespace

ConvexityFamily small_random_family(std::uint64_t seed, int min_members, int max_members) {
    Rng rng(seed);
    SimplicialComplex ambient;
    switch (rng.below(7)) {
        case 0: ambient = grid_disk(3, 3); break;
        case 1: ambient = grid_disk(4, 3); break;
        case 2: ambient = cycle_complex(static_cast<int>(rng.between(5, 12))); break;
        case 3: ambient = path_complex(static_cast<int>(rng.between(4, 11))); break;
        case 4: ambient = octahedron_sphere(); break;
        case 5: ambient = torus7(); break;
        default: ambient = klein_bottle_min(); break;
    }
    const int m = static_cast<int>(rng.between(min_members, max_members));
    const int b = static_cast<int>(rng.between(0, 2));
    return random_family(share(std::move(ambient)), m, rng.next(), b);
}

std::vector<std::string> suite_check_ids() {
    return {"1", "2", "3", "4", "5", "5r", "6", "7a", "7b", "7r", "8", "8r", "9a", "9b", "10", "closure"};
}

std::vector<std::string> suite_ids_for_criterion(const std::string& criterion) {
    std::vector<std::string> out;
    for (const auto& id : suite_check_ids()) {
        if (id == criterion) out.push_back(id);
        else if (id.size() == criterion.size() + 1 && id.compare(0, criterion.size(), criterion) == 0 &&
                 std::isalpha(static_cast<unsigned char>(id.back())))
            out.push_back(id);
    }
    return out;
}

SuiteRow run_suite_check(const std::string& id, const SuiteOptions& options) {
    if (id == "1") return star_check(options);
    if (id == "2") return line_check(options);
    if (id == "3") return homology_check();
    if (id == "4") return levi_check(options);
    if (id == "5") return monotone_check(options, true);
    if (id == "5r") return monotone_check(options, false);
    if (id == "6") return lemma7_check();
    if (id == "7a" || id == "7b" || id == "7r") return hae_micro_check(id, options);
    if (id == "8") return ramsey_check(true);
    if (id == "8r") return ramsey_check(false);
    if (id == "9a") return nerve_count_check(options);
    if (id == "9b") return partite_check();
    if (id == "10") return selection_check(options);
    if (id == "closure") return closure_check(options);
    throw InvalidInput("unknown suite check \"" + id + "\"");
}

std::vector<SuiteRow> verify_paper_suite(const SuiteOptions& options, const std::vector<std::string>& only) {
    for (const auto& id : only) {
        const auto ids = suite_check_ids();
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) throw InvalidInput("unknown suite check \"" + id + "\"");
    }
    std::vector<SuiteRow> rows;
    for (const auto& id : suite_check_ids()) {
        if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) continue;
        rows.push_back(run_suite_check(id, options));
    }
    return rows;
}

bool suite_passed(const std::vector<SuiteRow>& rows) {
    return std::all_of(rows.begin(), rows.end(), [](const SuiteRow& r) { return r.passed || r.informational; });
}

Json suite_to_json(const std::vector<SuiteRow>& rows) {
    Json out = Json::array();
    for (const auto& r : rows)
        out.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"informational", r.informational},
                       {"detail", r.detail}});
    return out;
}

}  // namespace relconv
