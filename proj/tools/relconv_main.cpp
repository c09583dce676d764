// relconv: command-line front end for the convexity toolkit.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "relconv/chain_map.hpp"
#include "relconv/corpus.hpp"
#include "relconv/error.hpp"
#include "relconv/family_gallery.hpp"
#include "relconv/gallery.hpp"
#include "relconv/homology.hpp"
#include "relconv/io.hpp"
#include "relconv/nerve.hpp"
#include "relconv/ramsey.hpp"
#include "relconv/suite.hpp"

namespace fs = std::filesystem;
using namespace relconv;

namespace {

constexpr int exit_invalid = 2;
constexpr int exit_budget = 3;
constexpr int exit_suite = 4;

struct Globals {
    std::uint64_t seed = 0;
    unsigned jobs = 1;
    std::uint64_t budget = 10'000'000;
};

/// Relative output paths land under $RELCONV_OUT_DIR when it is set.
fs::path output_path(const std::string& out) {
    fs::path p(out);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("RELCONV_OUT_DIR"); dir && *dir) return fs::path(dir) / p;
    }
    return p;
}

void emit(const Json& doc, const std::string& out) {
    const std::string text = doc.dump(2) + "\n";
    if (out.empty()) {
        std::cout << text;
        return;
    }
    write_file_atomic(output_path(out), text);
}

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

struct Loaded {
    Json json;
    std::string text;
};

Loaded load(const std::string& path) {
    Loaded l;
    l.text = read_text_file(path);
    try {
        l.json = Json::parse(l.text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(path + ": " + e.what());
    }
    return l;
}

Json names_of(const ConvexityFamily& family, const std::vector<std::size_t>& indices) {
    Json out = Json::array();
    for (std::size_t i : indices) out.push_back(family.members()[i].name);
    return out;
}

Json map_check_json(const MapCheck& c) {
    Json out{{"ok", c.ok}, {"reason", c.reason}};
    out["simplex"] = c.simplex ? Json(*c.simplex) : Json(nullptr);
    out["pair"] = c.pair ? Json::array({c.pair->first, c.pair->second}) : Json(nullptr);
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string part;
    while (std::getline(in, part, ',')) {
        if (part.empty()) continue;
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(part, &used));
            if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
            throw InvalidInput("expected a comma-separated integer list, got \"" + text + "\"");
        }
    }
    return out;
}

/// "name" or "name:p1,p2".
std::pair<std::string, std::vector<int>> parse_gallery_ref(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return {text, {}};
    return {text.substr(0, colon), parse_int_list(text.substr(colon + 1))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relconv: convexity spaces, Z2 homology, chain maps and Ramsey tools"};
    app.require_subcommand(1);
    Globals g;
    app.add_option("--seed", g.seed, "Seed for randomized generators (mt19937_64)");
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
    app.add_option("--budget", g.budget, "Search node budget");

    std::function<int()> action;
    std::string out;

    // compute
    auto* compute = app.add_subcommand("compute", "Convexity invariants of a family");
    std::string family_path;
    std::string invariants = "radon:cap=6,helly:cap=6,caratheodory:cap=6,tc:k=1";
    compute->add_option("--family", family_path, "Family JSON")->required();
    compute->add_option("--invariants", invariants, "e.g. radon:cap=6,tverberg:k=3:cap=7,tc:inf");
    compute->add_option("--out", out, "Report path (default: stdout)");
    compute->callback([&] {
        action = [&] {
            Timer timer;
            const Loaded in = load(family_path);
            const ConvexityFamily family = family_from_json(in.json);
            const auto specs = parse_invariant_specs(invariants);
            Json results = Json::array();
            for (const auto& spec : specs) results.push_back(compute_invariant(family, spec, {g.jobs, g.seed}));
            Json result{{"members", family.size()}, {"ambient_vertices", family.ambient().vertex_count()},
                        {"results", std::move(results)}};
            ReportHeader h{"compute", {{"family", family_path}, {"invariants", invariants}}, sha256_hex(in.text), g.seed};
            emit(make_report(h, std::move(result), timer.seconds()), out);
            return 0;
        };
    });

    // homology
    auto* homology = app.add_subcommand("homology", "Reduced Z2 Betti numbers of a complex");
    std::string complex_path;
    int up_to = -1;
    homology->add_option("--complex", complex_path, "Complex JSON")->required();
    homology->add_option("--up-to", up_to, "Report dimensions 0..up_to-1 (default: all)");
    homology->add_option("--out", out, "Report path (default: stdout)");
    homology->callback([&] {
        action = [&] {
            Timer timer;
            const Loaded in = load(complex_path);
            const SimplicialComplex complex = complex_from_json(in.json);
            const int range = up_to < 0 ? std::max(complex.dimension() + 1, 1) : up_to;
            const BettiProfile betti = reduced_betti(complex, range);
            Json result{{"betti", betti.values}, {"empty", betti.complex_is_empty}, {"f_vector", complex.f_vector()}};
            ReportHeader h{"homology", {{"complex", complex_path}, {"up_to", range}}, sha256_hex(in.text), g.seed};
            emit(make_report(h, std::move(result), timer.seconds()), out);
            return 0;
        };
    });

    // nerve
    auto* nerve_cmd = app.add_subcommand("nerve", "Nerve of a family and its face counts");
    int max_dim = 3;
    nerve_cmd->add_option("--family", family_path, "Family JSON")->required();
    nerve_cmd->add_option("--max-dim", max_dim, "Largest nerve dimension explored");
    nerve_cmd->add_option("--out", out, "Report path (default: stdout)");
    nerve_cmd->callback([&] {
        action = [&] {
            Timer timer;
            const Loaded in = load(family_path);
            const ConvexityFamily family = family_from_json(in.json);
            Json result = nerve_to_json(nerve(family, max_dim, g.jobs));
            ReportHeader h{"nerve", {{"family", family_path}, {"max_dim", max_dim}}, sha256_hex(in.text), g.seed};
            emit(make_report(h, std::move(result), timer.seconds()), out);
            return 0;
        };
    });

    // fhelly
    auto* fhelly = app.add_subcommand("fhelly", "Fractional Helly statistics");
    int k = 2;
    fhelly->add_option("--family", family_path, "Family JSON")->required();
    fhelly->add_option("--k", k, "Tuple size");
    fhelly->add_option("--out", out, "Report path (default: stdout)");
    fhelly->callback([&] {
        action = [&] {
            Timer timer;
            const Loaded in = load(family_path);
            const ConvexityFamily family = family_from_json(in.json);
            const FractionalHellyStats s = fractional_helly_stats(family, k);
            Json result{{"alpha", ratio_to_json(s.alpha)}, {"beta", ratio_to_json(s.beta)}};
            result["deepest_vertex"] = s.deepest_vertex ? Json(*s.deepest_vertex) : Json(nullptr);
            ReportHeader h{"fhelly", {{"family", family_path}, {"k", k}}, sha256_hex(in.text), g.seed};
            emit(make_report(h, std::move(result), timer.seconds()), out);
            return 0;
        };
    });

    // pq
    auto* pq = app.add_subcommand("pq", "(p,q)-property and smallest transversal");
    int p = 2;
    int q = 2;
    int transversal_cap = 6;
    pq->add_option("--family", family_path, "Family JSON")->required();
    pq->add_option("--p", p, "Group size")->required();
    pq->add_option("--q", q, "Required intersecting members per group")->required();
    pq->add_option("--transversal-cap", transversal_cap, "Largest transversal size tried");
    pq->add_option("--out", out, "Report path (default: stdout)");
    pq->callback([&] {
        action = [&] {
            Timer timer;
            const Loaded in = load(family_path);
            const ConvexityFamily family = family_from_json(in.json);
            const PqResult r = pq_property(family, p, q);
            const TransversalResult t = min_transversal(family, transversal_cap);
            Json result{{"holds", r.holds}, {"witness", names_of(family, r.witness)},
                        {"transversal",
                         {{"value", t.value}, {"marker", marker_name(t.marker)}, {"witness", t.witness},
                          {"caps", {{"cap", transversal_cap}}}}}};
            ReportHeader h{"pq",
                           {{"family", family_path}, {"p", p}, {"q", q}, {"transversal_cap", transversal_cap}},
                           sha256_hex(in.text), g.seed};
            emit(make_report(h, std::move(result), timer.seconds()), out);
            return 0;
        };
    });

    // bootstrap
    auto* bootstrap = app.add_subcommand("bootstrap", "Intersecting-tuple densities at consecutive sizes");
    std::string alpha1 = "1/2";
    bool gz = false;
    bootstrap->add_option("--family", family_path, "Family JSON")->required();
    bootstrap->add_option("--k", k, "Nerve dimension k (counts (k+1)- and (k+2)-tuples)");
    bootstrap->add_option("--alpha1", alpha1, "Threshold as p/q or decimal");
    bootstrap->add_flag("--gz", gz, "Also report the face counts f_{k-1}, f_k, f_{k+1}");
    bootstrap->add_option("--out", out, "Report path (default: stdout)");
    bootstrap->callback([&] {
        action = [&] {
            Timer timer;
            const Loaded in = load(family_path);
            const ConvexityFamily family = family_from_json(in.json);
            const BootstrapReport b = bootstrap_check(family, k, parse_ratio(alpha1), g.jobs);
            Json result{{"n", b.n},
                        {"k", b.k},
                        {"f_k", b.f_k},
                        {"f_k1", b.f_k1},
                        {"alpha1_hat", ratio_to_json(b.alpha1_hat)},
                        {"alpha2_hat", ratio_to_json(b.alpha2_hat)},
                        {"alpha1", ratio_to_json(b.alpha1)},
                        {"meets_alpha1", b.meets_alpha1}};
            if (gz) {
                const GzProbe z = gz_inequality_probe(family, k, g.jobs);
                result["gz"] = {{"k", z.k}, {"applicable", z.applicable}, {"f_km1", z.f_km1}, {"f_k", z.f_k},
                                {"f_k1", z.f_k1}};
            }
            ReportHeader h{"bootstrap", {{"family", family_path}, {"k", k}, {"alpha1", alpha1}, {"gz", gz}},
                           sha256_hex(in.text), g.seed};
            emit(make_report(h, std::move(result), timer.seconds()), out);
            return 0;
        };
    });

    // chainmap
    auto* chainmap = app.add_subcommand("chainmap", "Chain map checks and almost-embedding search");
    std::string mode;
    std::string map_path;
    std::string source_path;
    std::string target_path;
    int support_cap = 3;
    chainmap->add_option("mode", mode, "verify | hae | constrained | search")
        ->required()
        ->check(CLI::IsMember({"verify", "hae", "constrained", "search"}));
    chainmap->add_option("--map", map_path, "Chain map JSON (verify, hae, constrained)");
    chainmap->add_option("--family", family_path, "Family JSON for constrained (else the map's \"family\")");
    chainmap->add_option("--source", source_path, "Source complex JSON (search)");
    chainmap->add_option("--target", target_path, "Target complex JSON (search)");
    chainmap->add_option("--cap", support_cap, "Largest image chain tried (search)");
    chainmap->add_option("--out", out, "Report path (default: stdout)");
    chainmap->callback([&] {
        action = [&] {
            Timer timer;
            Json result;
            std::string digest_input;
            Json params{{"mode", mode}};
            if (mode == "search") {
                if (source_path.empty() || target_path.empty())
                    throw InvalidInput("chainmap search needs --source and --target");
                const Loaded src = load(source_path);
                const Loaded tgt = load(target_path);
                digest_input = src.text + tgt.text;
                HaeSearchOptions opts{g.budget, g.jobs};
                const auto r = exhaustive_hae_search(share(complex_from_json(src.json)),
                                                     share(complex_from_json(tgt.json)), support_cap, opts);
                result = {{"found", r.map.has_value()}, {"nodes", r.nodes},
                          {"caps", {{"support_cap", support_cap}, {"budget", g.budget}}}};
                result["map"] = r.map ? chain_map_to_json(*r.map) : Json(nullptr);
                params["source"] = source_path;
                params["target"] = target_path;
                params["cap"] = support_cap;
                params["budget"] = g.budget;
            } else {
                if (map_path.empty()) throw InvalidInput("chainmap " + mode + " needs --map");
                const Loaded in = load(map_path);
                digest_input = in.text;
                params["map"] = map_path;
                const SimplicialChainMap map = chain_map_from_json(in.json);
                result["chain_map"] = map_check_json(verify_chain_map(map));
                result["nontrivial"] = verify_nontrivial(map);
                if (mode == "hae") result["hae"] = map_check_json(verify_hae(map));
                if (mode == "constrained") {
                    Json family_json;
                    if (!family_path.empty()) {
                        const Loaded f = load(family_path);
                        digest_input += f.text;
                        family_json = f.json;
                        params["family"] = family_path;
                    } else if (in.json.contains("family")) {
                        family_json = in.json["family"];
                    } else {
                        throw InvalidInput("chainmap constrained needs --family or a \"family\" field");
                    }
                    const ConvexityFamily family = family_from_json(family_json);
                    if (!(family.ambient() == map.target()))
                        throw InvalidInput("family ambient differs from the map's target");
                    if (!in.json.contains("phi")) throw InvalidInput("chainmap constrained needs a \"phi\" field");
                    const ConstraintMap phi =
                        constraint_map_from_json(in.json["phi"], map.source(), map.target().vertex_count());
                    const MapCheck constrained = verify_constrained(map, family, phi);
                    result["constrained"] = map_check_json(constrained);
                    if (in.json.contains("points")) {
                        std::vector<Vertex> points;
                        for (const auto& v : in.json["points"]) points.push_back(v.get<Vertex>());
                        const Lemma7Report rep = lemma7_harness(map, family, phi, points);
                        Json lemma{{"status", lemma7_status_name(rep.status)}, {"detail", rep.detail},
                                   {"hae", map_check_json(rep.hae)}};
                        lemma["overlapping_sets"] = rep.overlapping_sets
                                                        ? Json::array({rep.overlapping_sets->first,
                                                                       rep.overlapping_sets->second})
                                                        : Json(nullptr);
                        result["almost_embedding"] = std::move(lemma);
                    }
                }
            }
            ReportHeader h{"chainmap", std::move(params), sha256_hex(digest_input), g.seed};
            emit(make_report(h, std::move(result), timer.seconds()), out);
            return 0;
        };
    });

    // ramsey
    auto* ramsey = app.add_subcommand("ramsey", "Monochromatic sets and selection certificates");
    std::string ramsey_mode;
    std::string oracle_path;
    std::string certificate_path;
    std::size_t n = 3;
    int m = 2;
    ramsey->add_option("mode", ramsey_mode, "mono | select | validate")
        ->required()
        ->check(CLI::IsMember({"mono", "select", "validate"}));
    ramsey->add_option("--oracle,--coloring", oracle_path, "Coloring oracle JSON")->required();
    ramsey->add_option("--certificate", certificate_path, "Selection certificate JSON (validate)");
    ramsey->add_option("--n", n, "Size of the sought set");
    ramsey->add_option("--m", m, "Size of the subsets Z of Y (select, validate)");
    ramsey->add_option("--out", out, "Report path (default: stdout)");
    ramsey->callback([&] {
        action = [&] {
            Timer timer;
            const Loaded in = load(oracle_path);
            std::string digest_input = in.text;
            const ColoringOracle oracle = oracle_from_json(in.json);
            Json params{{"mode", ramsey_mode}, {"oracle", oracle_path}, {"n", n}};
            Json result;
            if (ramsey_mode == "mono") {
                Subset all(oracle.ground());
                for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
                const GlobalColoring coloring = [&](std::span<const std::size_t> s) { return oracle.color(all, s); };
                const auto found = find_monochromatic(oracle.ground(), oracle.k(), oracle.colors(), coloring, n);
                result = {{"found", found.has_value()}};
                result["subset"] = found ? Json(*found) : Json(nullptr);
                if (oracle.k() == 1) result["pigeonhole_bound"] = pigeonhole_bound(n, static_cast<std::uint64_t>(oracle.colors()));
            } else if (ramsey_mode == "select") {
                params["m"] = m;
                params["budget"] = g.budget;
                const SelectionResult r = selection_search(oracle, m, n, g.budget, g.jobs);
                result = {{"found", r.certificate.has_value()}, {"nodes", r.nodes}, {"caps", {{"budget", g.budget}}}};
                result["certificate"] = r.certificate ? certificate_to_json(*r.certificate) : Json(nullptr);
                if (r.certificate) result["valid"] = validate_selection(*r.certificate, oracle, m, n).ok;
                const auto bound = selection_bound(oracle.k(), m, n, oracle.colors());
                result["bound"] = bound ? Json(*bound) : Json(nullptr);
            } else {
                if (certificate_path.empty()) throw InvalidInput("ramsey validate needs --certificate");
                const Loaded c = load(certificate_path);
                digest_input += c.text;
                params["m"] = m;
                params["certificate"] = certificate_path;
                const SelectionCheck check = validate_selection(certificate_from_json(c.json), oracle, m, n);
                result = {{"ok", check.ok}, {"violation", check.violation}, {"detail", check.detail}};
            }
            ReportHeader h{"ramsey", std::move(params), sha256_hex(digest_input), g.seed};
            emit(make_report(h, std::move(result), timer.seconds()), out);
            return 0;
        };
    });

    // gen
    auto* gen = app.add_subcommand("gen", "Write a gallery family or complex as JSON");
    std::string gen_kind;
    int spines = 3;
    int length = 2;
    int gen_n = 8;
    std::string arcs_text;
    std::string ambient = "grid_disk:4,4";
    int members = 4;
    int b = 0;
    std::string complex_ref;
    gen->add_option("kind", gen_kind, "star | intervals | arcs | random | disks_on_surface | complex")
        ->required()
        ->check(CLI::IsMember({"star", "intervals", "arcs", "random", "disks_on_surface", "complex"}));
    gen->add_option("--spines", spines, "star: number of spines");
    gen->add_option("--length", length, "star: edges per spine");
    gen->add_option("--n", gen_n, "intervals: path length; arcs: cycle length");
    gen->add_option("--arcs", arcs_text, "arcs: list a:b,a:b,...");
    gen->add_option("--ambient", ambient, "random / disks_on_surface: gallery name[:params]");
    gen->add_option("--m", members, "random / disks_on_surface: number of members");
    gen->add_option("--b", b, "random: extra components per member");
    gen->add_option("--name", complex_ref, "complex: gallery name[:params], e.g. torus7 or grid_disk:4,4");
    gen->add_option("--out", out, "Output path (default: stdout)");
    gen->callback([&] {
        action = [&] {
            if (gen_kind == "complex") {
                if (complex_ref.empty()) throw InvalidInput("gen complex needs --name");
                const auto [name, params] = parse_gallery_ref(complex_ref);
                emit(complex_to_json(gallery(name, params)), out);
                return 0;
            }
            FamilySpec spec;
            spec.name = gen_kind;
            spec.seed = g.seed;
            if (gen_kind == "star") {
                spec.params = {spines, length};
            } else if (gen_kind == "intervals") {
                spec.params = {gen_n};
            } else if (gen_kind == "arcs") {
                spec.params = {gen_n};
                std::stringstream in(arcs_text);
                std::string part;
                while (std::getline(in, part, ',')) {
                    const auto colon = part.find(':');
                    if (colon == std::string::npos) throw InvalidInput("arcs: expected a:b, got \"" + part + "\"");
                    for (int v : parse_int_list(part.substr(0, colon) + "," + part.substr(colon + 1)))
                        spec.params.push_back(v);
                }
            } else {
                std::tie(spec.ambient, spec.ambient_params) = parse_gallery_ref(ambient);
                spec.params = gen_kind == "random" ? std::vector<int>{members, b} : std::vector<int>{members};
            }
            emit(family_to_json(family_gallery(spec)), out);
            return 0;
        };
    });

    // verify
    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    std::string suite = "paper";
    std::string only;
    verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember({"paper"}));
    verify->add_option("--only", only, "Comma-separated row ids");
    verify->add_option("--out", out, "Report path (default: stdout)");
    verify->callback([&] {
        action = [&] {
            Timer timer;
            std::vector<std::string> ids;
            std::stringstream in(only);
            std::string part;
            while (std::getline(in, part, ','))
                if (!part.empty()) ids.push_back(part);
            SuiteOptions opts;
            opts.jobs = g.jobs;
            const auto rows = verify_paper_suite(opts, ids);
            std::ostream& table = out.empty() ? std::cerr : std::cout;
            for (const auto& r : rows)
                table << (r.passed ? "PASS" : "FAIL") << (r.informational ? " (info)" : "") << "  [" << r.id << "] "
                      << r.name << ": " << r.detail << "\n";
            const bool passed = suite_passed(rows);
            Json result{{"suite", suite}, {"passed", passed}, {"rows", suite_to_json(rows)}};
            Json params{{"suite", suite}, {"only", ids}};
            ReportHeader h{"verify", params, sha256_hex(params.dump()), g.seed};
            emit(make_report(h, std::move(result), timer.seconds()), out);
            return passed ? 0 : exit_suite;
        };
    });

    // corpus
    auto* corpus = app.add_subcommand("corpus", "Run an experiment config over generated families");
    std::string config_path;
    corpus->add_option("--config", config_path, "Experiment config JSON")->required();
    corpus->callback([&] {
        action = [&] {
            const Loaded in = load(config_path);
            ExperimentConfig config = experiment_config_from_json(in.json);
            if (app.get_option("--jobs")->count() > 0) config.jobs = g.jobs;
            const CorpusOutput result = corpus_run(config);
            if (config.csv_path.empty())
                std::cout << result.csv;
            else
                write_file_atomic(output_path(config.csv_path), result.csv);
            for (const auto& [name, body] : result.reports)
                write_file_atomic(output_path(config.reports_dir) / name, body.dump(2) + "\n");
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_invalid;
    }
    try {
        return action ? action() : exit_invalid;
    } catch (const InvalidInput& e) {
        std::cerr << "relconv: invalid input: " << e.what() << "\n";
        return exit_invalid;
    } catch (const BudgetExceeded& e) {
        std::cerr << "relconv: budget exceeded: " << e.what() << "\n";
        return exit_budget;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "relconv: invalid input: " << e.what() << "\n";
        return exit_invalid;
    } catch (const fs::filesystem_error& e) {
        std::cerr << "relconv: file error: " << e.what() << "\n";
        return exit_invalid;
    } catch (const std::exception& e) {
        std::cerr << "relconv: internal error: " << e.what() << "\n";
        return 1;
    }
}
