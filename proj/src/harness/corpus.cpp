#include "relconv/corpus.hpp"

#include <chrono>
#include <sstream>

#include "relconv/combinatorics.hpp"
#include "relconv/error.hpp"
#include "relconv/family_gallery.hpp"
#include "relconv/nerve.hpp"

namespace relconv {

namespace {

void reject_unknown(const Json& j, std::initializer_list<const char*> keys, const std::string& context) {
    if (!j.is_object()) throw InvalidInput(context + ": expected a JSON object");
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* k : keys) known = known || item.key() == k;
        if (!known) throw InvalidInput(context + ": unknown key \"" + item.key() + "\"");
    }
}

template <class T>
T read(const Json& j, const char* key, const std::string& context, T fallback) {
    if (!j.contains(key)) return fallback;
    try {
        return j.at(key).get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(context + "." + key + ": " + e.what());
    }
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char ch : text) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return out + "\"";
}

std::string ratio_text(std::uint64_t count, std::size_t n, std::size_t size) {
    if (n < size) return "";
    const Ratio r(static_cast<std::int64_t>(count), static_cast<std::int64_t>(binomial(n, size)));
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string params_text(const GeneratorSpec& g) {
    std::string out;
    for (std::size_t i = 0; i < g.params.size(); ++i) out += (i ? " " : "") + std::to_string(g.params[i]);
    if (!g.ambient.empty()) {
        out += (out.empty() ? "" : " ") + std::string("on ") + g.ambient;
        for (int p : g.ambient_params) out += " " + std::to_string(p);
    }
    return out;
}

}  // namespace

ExperimentConfig experiment_config_from_json(const Json& j) {
    const std::string ctx = "config";
    reject_unknown(j, {"generators", "invariants", "output", "jobs", "tc_subfamily_cap", "gz_k"}, ctx);
    ExperimentConfig config;
    if (j.contains("generators")) {
        if (!j["generators"].is_array()) throw InvalidInput(ctx + ".generators: expected an array");
        for (const auto& g : j["generators"]) {
            const std::string gctx = ctx + ".generators[]";
            reject_unknown(g, {"family", "params", "ambient", "ambient_params", "seeds"}, gctx);
            GeneratorSpec spec;
            spec.family = read<std::string>(g, "family", gctx, "");
            if (spec.family.empty()) throw InvalidInput(gctx + ": missing family");
            spec.params = read<std::vector<int>>(g, "params", gctx, {});
            spec.ambient = read<std::string>(g, "ambient", gctx, "");
            spec.ambient_params = read<std::vector<int>>(g, "ambient_params", gctx, {});
            spec.seeds = read<std::vector<std::uint64_t>>(g, "seeds", gctx, {0});
            config.generators.push_back(std::move(spec));
        }
    }
    config.invariants = read<std::vector<std::string>>(j, "invariants", ctx, {});
    for (const auto& spec : config.invariants) parse_invariant_specs(spec);
    if (j.contains("output")) {
        const Json& out = j["output"];
        reject_unknown(out, {"csv", "reports_dir"}, ctx + ".output");
        config.csv_path = read<std::string>(out, "csv", ctx + ".output", "");
        config.reports_dir = read<std::string>(out, "reports_dir", ctx + ".output", "");
    }
    const int jobs = read<int>(j, "jobs", ctx, 1);
    if (jobs < 1 || jobs > 1024) throw InvalidInput(ctx + ".jobs: must be between 1 and 1024");
    config.jobs = static_cast<unsigned>(jobs);
    config.tc_subfamily_cap = read<int>(j, "tc_subfamily_cap", ctx, 16);
    if (config.tc_subfamily_cap < 0) throw InvalidInput(ctx + ".tc_subfamily_cap: must be non-negative");
    config.gz_k = read<int>(j, "gz_k", ctx, 2);
    if (config.gz_k < 2) throw InvalidInput(ctx + ".gz_k: must be at least 2");
    return config;
}

CorpusOutput corpus_run(const ExperimentConfig& config) {
    CorpusOutput output;
    std::ostringstream csv;
    csv << corpus_csv_header << '\n';
    std::size_t index = 0;
    for (const auto& g : config.generators) {
        for (std::uint64_t seed : g.seeds) {
            ++index;
            std::vector<std::string> cells(18);
            cells[0] = g.family;
            cells[1] = params_text(g);
            cells[2] = std::to_string(seed);
            cells[12] = std::to_string(config.gz_k);
            const auto start = std::chrono::steady_clock::now();
            const Json params{{"family", g.family}, {"params", g.params}, {"ambient", g.ambient},
                              {"ambient_params", g.ambient_params}, {"seed", seed}};
            Json report = Json::object();
            try {
                const ConvexityFamily family = family_gallery({g.family, g.params, g.ambient, g.ambient_params, seed});
                const std::size_t n = family.size();
                cells[3] = std::to_string(n);
                std::vector<std::uint64_t> f(4);
                for (std::size_t d = 0; d < 4; ++d) {
                    f[d] = count_intersecting(family, d + 1, config.jobs);
                    cells[4 + d] = std::to_string(f[d]);
                }
                cells[8] = ratio_text(f[1], n, 2);
                cells[9] = ratio_text(f[2], n, 3);
                report["n"] = n;
                report["f"] = f;
                TcOptions topts;
                topts.subfamily_cap = config.tc_subfamily_cap;
                const InvariantResult tc = topological_complexity(family, 1, topts);
                cells[10] = std::to_string(tc.value);
                cells[11] = marker_name(tc.marker);
                report["tc1"] = result_to_json(family, tc);
                const GzProbe gz = gz_inequality_probe(family, config.gz_k, config.jobs);
                cells[13] = gz.applicable ? "true" : "false";
                cells[14] = std::to_string(gz.f_km1);
                cells[15] = std::to_string(gz.f_k);
                cells[16] = std::to_string(gz.f_k1);
                report["gz"] = {{"k", gz.k}, {"applicable", gz.applicable}, {"f_km1", gz.f_km1}, {"f_k", gz.f_k},
                                {"f_k1", gz.f_k1}};
                Json results = Json::array();
                for (const auto& text : config.invariants)
                    for (const auto& spec : parse_invariant_specs(text))
                        results.push_back(compute_invariant(family, spec, {config.jobs, seed}));
                report["results"] = std::move(results);
                report["family_json"] = family_to_json(family);
            } catch (const std::exception& e) {
                cells[17] = e.what();
                report["error"] = e.what();
            }
            for (std::size_t i = 0; i < cells.size(); ++i) csv << (i ? "," : "") << csv_field(cells[i]);
            csv << '\n';
            if (!config.reports_dir.empty()) {
                std::string name = std::to_string(index);
                while (name.size() < 4) name = "0" + name;
                const double seconds =
                    std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
                const ReportHeader header{"corpus", params, sha256_hex(params.dump()), seed};
                output.reports.emplace_back(name + "_" + g.family + "_" + std::to_string(seed) + ".json",
                                            make_report(header, std::move(report), seconds));
            }
        }
    }
    output.csv = csv.str();
    return output;
}

}  // namespace relconv
