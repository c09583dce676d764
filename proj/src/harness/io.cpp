#include "relconv/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>
#include <unistd.h>

#include <openssl/evp.h>

#include "relconv/combinatorics.hpp"
#include "relconv/error.hpp"
#include "relconv/gallery.hpp"
#include "relconv/random.hpp"

#ifndef RELCONV_VERSION
#define RELCONV_VERSION "0.0.0"
#endif

namespace relconv {

namespace {

const Json& field(const Json& j, const char* key, const std::string& context) {
    if (!j.is_object()) throw InvalidInput(context + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end()) throw InvalidInput(context + ": missing field \"" + key + "\"");
    return *it;
}

template <class T>
T as(const Json& j, const std::string& context) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(context + ": " + e.what());
    }
}

void allow_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& context) {
    if (!j.is_object()) throw InvalidInput(context + ": expected a JSON object");
    for (const auto& item : j.items()) {
        const bool known = std::any_of(keys.begin(), keys.end(), [&](const char* k) { return item.key() == k; });
        if (!known) throw InvalidInput(context + ": unknown field \"" + item.key() + "\"");
    }
}

std::vector<Simplex> simplices_from_json(const Json& j, const std::string& context) {
    auto raw = as<std::vector<std::vector<std::int64_t>>>(j, context);
    std::vector<Simplex> out;
    for (const auto& s : raw) {
        Simplex simplex;
        for (auto v : s) {
            if (v < 0 || v > static_cast<std::int64_t>(UINT32_MAX)) throw InvalidInput(context + ": negative vertex");
            simplex.push_back(static_cast<Vertex>(v));
        }
        out.push_back(std::move(simplex));
    }
    return out;
}

Json simplices_to_json(const std::vector<Simplex>& simplices) {
    Json out = Json::array();
    for (const auto& s : simplices) out.push_back(s);
    return out;
}

std::size_t find_simplex(const SimplicialComplex& complex, Simplex s, const std::string& context) {
    std::sort(s.begin(), s.end());
    auto index = complex.find(s);
    if (!index) throw InvalidInput(context + ": simplex " + simplex_to_string(s) + " not in complex");
    return *index;
}

std::vector<std::size_t> parse_indices(const Json& j, const std::string& context) {
    auto raw = as<std::vector<std::int64_t>>(j, context);
    std::vector<std::size_t> out;
    for (auto v : raw) {
        if (v < 0) throw InvalidInput(context + ": negative element");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

long long parse_int(const std::string& text, const std::string& context) {
    long long value = 0;
    const auto* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end) throw InvalidInput(context + ": expected an integer, got \"" + text + "\"");
    return value;
}

int option_int(const InvariantSpec& spec, const std::string& key, int fallback, int min_value) {
    auto it = spec.options.find(key);
    if (it == spec.options.end()) return fallback;
    const long long v = parse_int(it->second, spec.name + ":" + key);
    if (v < min_value || v > 1'000'000) throw InvalidInput(spec.name + ":" + key + " out of range");
    return static_cast<int>(v);
}

bool option_flag(const InvariantSpec& spec, const std::string& key) {
    auto it = spec.options.find(key);
    if (it == spec.options.end()) return false;
    if (it->second == "true" || it->second == "1") return true;
    if (it->second == "false" || it->second == "0") return false;
    throw InvalidInput(spec.name + ":" + key + " expects true or false");
}

}  // namespace

std::string tool_version() { return RELCONV_VERSION; }

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot open " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Json read_json_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidInput(path.string() + ": " + e.what());
    }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    std::filesystem::path temp = path;
    temp += ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw InvalidInput("cannot write " + temp.string());
        out << content;
        out.flush();
        if (!out) throw InvalidInput("write failed for " + temp.string());
    }
    std::filesystem::rename(temp, path, ec);
    if (ec) {
        std::filesystem::remove(temp);
        throw InvalidInput("cannot rename onto " + path.string() + ": " + ec.message());
    }
}

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 failed");
    std::ostringstream out;
    for (unsigned int i = 0; i < length; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
    return out.str();
}

SimplicialComplex complex_from_json(const Json& j) {
    const std::string ctx = "complex";
    if (!j.is_object()) throw InvalidInput(ctx + ": expected a JSON object");
    if (j.contains("gallery")) {
        allow_keys(j, {"gallery", "params"}, ctx);
        const auto name = as<std::string>(j["gallery"], ctx + ".gallery");
        std::vector<int> params;
        if (j.contains("params")) params = as<std::vector<int>>(j["params"], ctx + ".params");
        return gallery(name, params);
    }
    allow_keys(j, {"vertex_count", "maximal_simplices", "labels"}, ctx);
    const auto n = as<std::int64_t>(field(j, "vertex_count", ctx), ctx + ".vertex_count");
    if (n < 0 || n > 1'000'000) throw InvalidInput(ctx + ": vertex_count out of range");
    const auto maximal = simplices_from_json(field(j, "maximal_simplices", ctx), ctx + ".maximal_simplices");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = as<std::vector<std::string>>(j["labels"], ctx + ".labels");
    return SimplicialComplex::from_maximal(maximal, static_cast<std::size_t>(n), std::move(labels));
}

Json complex_to_json(const SimplicialComplex& complex) {
    Json out;
    out["vertex_count"] = complex.vertex_count();
    out["maximal_simplices"] = simplices_to_json(complex.maximal_simplices());
    if (!complex.labels().empty()) out["labels"] = complex.labels();
    return out;
}

ConvexityFamily family_from_json(const Json& j) {
    const std::string ctx = "family";
    allow_keys(j, {"ambient", "members", "labeled_points"}, ctx);
    auto ambient = share(complex_from_json(field(j, "ambient", ctx)));
    const Json& members = field(j, "members", ctx);
    if (!members.is_array()) throw InvalidInput(ctx + ".members: expected an array");
    std::vector<NamedMember> named;
    for (std::size_t i = 0; i < members.size(); ++i) {
        const std::string mctx = ctx + ".members[" + std::to_string(i) + "]";
        allow_keys(members[i], {"name", "maximal_simplices"}, mctx);
        auto name = as<std::string>(field(members[i], "name", mctx), mctx + ".name");
        auto maximal = simplices_from_json(field(members[i], "maximal_simplices", mctx), mctx);
        named.push_back({std::move(name), Subcomplex::from_maximal(ambient, maximal)});
    }
    std::map<std::string, Vertex> labels;
    if (j.contains("labeled_points")) {
        for (const auto& item : j["labeled_points"].items()) {
            const auto v = as<std::int64_t>(item.value(), ctx + ".labeled_points");
            if (v < 0) throw InvalidInput(ctx + ".labeled_points: negative vertex");
            labels[item.key()] = static_cast<Vertex>(v);
        }
    }
    return ConvexityFamily(std::move(ambient), std::move(named), std::move(labels));
}

Json family_to_json(const ConvexityFamily& family) {
    Json out;
    out["ambient"] = complex_to_json(family.ambient());
    Json members = Json::array();
    for (const auto& m : family.members()) {
        Json entry;
        entry["name"] = m.name;
        entry["maximal_simplices"] = simplices_to_json(m.complex.maximal_simplices());
        members.push_back(std::move(entry));
    }
    out["members"] = std::move(members);
    Json labels = Json::object();
    for (const auto& [name, v] : family.labeled_points()) labels[name] = v;
    out["labeled_points"] = std::move(labels);
    return out;
}

std::string simplex_key(std::span<const Vertex> simplex) {
    std::string key;
    for (std::size_t i = 0; i < simplex.size(); ++i) {
        if (i) key += ',';
        key += std::to_string(simplex[i]);
    }
    return key;
}

Simplex parse_simplex_key(const std::string& key) {
    Simplex out;
    std::stringstream in(key);
    std::string part;
    while (std::getline(in, part, ',')) {
        const long long v = parse_int(part, "simplex key \"" + key + "\"");
        if (v < 0 || v > static_cast<long long>(UINT32_MAX)) throw InvalidInput("simplex key out of range: " + key);
        out.push_back(static_cast<Vertex>(v));
    }
    if (out.empty()) throw InvalidInput("empty simplex key");
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialChainMap chain_map_from_json(const Json& j) {
    const std::string ctx = "chain map";
    allow_keys(j, {"source", "target", "assignment", "phi", "family", "points"}, ctx);
    auto source = share(complex_from_json(field(j, "source", ctx)));
    auto target = share(complex_from_json(field(j, "target", ctx)));
    std::vector<Chain> images(source->size());
    std::vector<bool> seen(source->size(), false);
    const Json& assignment = field(j, "assignment", ctx);
    if (!assignment.is_object()) throw InvalidInput(ctx + ".assignment: expected an object");
    for (const auto& item : assignment.items()) {
        const std::size_t s = find_simplex(*source, parse_simplex_key(item.key()), ctx + ".assignment");
        if (seen[s]) throw InvalidInput(ctx + ".assignment: simplex listed twice: " + item.key());
        seen[s] = true;
        Chain chain;
        for (const auto& t : simplices_from_json(item.value(), ctx + ".assignment[" + item.key() + "]"))
            chain = chain_add(chain, Chain{find_simplex(*target, t, ctx + ".assignment")});
        images[s] = std::move(chain);
    }
    return SimplicialChainMap(std::move(source), std::move(target), std::move(images));
}

Json chain_map_to_json(const SimplicialChainMap& map) {
    Json out;
    out["source"] = complex_to_json(map.source());
    out["target"] = complex_to_json(map.target());
    Json assignment = Json::object();
    for (std::size_t s = 0; s < map.source().size(); ++s) {
        if (map.image(s).empty()) continue;
        Json chain = Json::array();
        for (std::size_t t : map.image(s)) chain.push_back(map.target().simplex(t));
        assignment[simplex_key(map.source().simplex(s))] = std::move(chain);
    }
    out["assignment"] = std::move(assignment);
    return out;
}

ConstraintMap constraint_map_from_json(const Json& j, const SimplicialComplex& source, std::size_t ambient_vertices) {
    if (!j.is_object()) throw InvalidInput("phi: expected an object keyed by source simplex");
    ConstraintMap phi(source.size(), VertexSet(ambient_vertices));
    for (const auto& item : j.items()) {
        const std::size_t s = find_simplex(source, parse_simplex_key(item.key()), "phi");
        for (std::size_t v : parse_indices(item.value(), "phi[" + item.key() + "]")) {
            if (v >= ambient_vertices) throw InvalidInput("phi: vertex " + std::to_string(v) + " outside the ambient");
            phi[s].set(v);
        }
    }
    return phi;
}

ColoringOracle oracle_from_json(const Json& j) {
    const std::string ctx = "oracle";
    allow_keys(j, {"ground", "k", "colors", "kind", "seed", "color", "table", "tabulate"}, ctx);
    const auto ground = as<std::size_t>(field(j, "ground", ctx), ctx + ".ground");
    const auto k = as<int>(field(j, "k", ctx), ctx + ".k");
    const auto c = as<int>(field(j, "colors", ctx), ctx + ".colors");
    const auto kind = as<std::string>(field(j, "kind", ctx), ctx + ".kind");
    if (ground > 64) throw InvalidInput(ctx + ": ground sets are limited to 64 elements");
    const std::uint64_t seed = j.contains("seed") ? as<std::uint64_t>(j["seed"], ctx + ".seed") : 0;

    auto build = [&]() -> ColoringOracle {
        if (kind == "constant")
            return ColoringOracle::constant(ground, k, c, j.contains("color") ? as<int>(j["color"], ctx + ".color") : 0);
        if (kind == "subset_only") return ColoringOracle::subset_only(ground, k, c, seed);
        if (kind == "random") return ColoringOracle::random(ground, k, c, seed);
        if (kind == "table") {
            if (k < 1 || static_cast<std::size_t>(k) > ground) throw InvalidInput(ctx + ": need 1 <= k <= ground");
            auto table = std::make_shared<std::map<Subset, int>>();
            for (const auto& entry : field(j, "table", ctx)) {
                allow_keys(entry, {"subset", "color"}, ctx + ".table");
                Subset s = parse_indices(field(entry, "subset", ctx + ".table"), ctx + ".table.subset");
                std::sort(s.begin(), s.end());
                if (s.size() != static_cast<std::size_t>(k) || std::adjacent_find(s.begin(), s.end()) != s.end() ||
                    s.back() >= ground)
                    throw InvalidInput(ctx + ".table: bad subset");
                const int color = as<int>(field(entry, "color", ctx + ".table"), ctx + ".table.color");
                if (color < 0 || color >= c) throw InvalidInput(ctx + ".table: color out of range");
                if (!table->emplace(std::move(s), color).second) throw InvalidInput(ctx + ".table: repeated subset");
            }
            if (table->size() != binomial(ground, static_cast<std::uint64_t>(k)))
                throw InvalidInput(ctx + ".table: every k-subset of the ground set needs a color");
            return ColoringOracle(
                ground, k, c,
                [table](std::span<const std::size_t>, std::span<const std::size_t> ks) {
                    return table->at(Subset(ks.begin(), ks.end()));
                },
                "table");
        }
        throw InvalidInput(ctx + ": unknown kind \"" + kind + "\"");
    };
    ColoringOracle oracle = build();
    if (j.contains("tabulate") && as<bool>(j["tabulate"], ctx + ".tabulate")) return oracle.tabulated();
    return oracle;
}

SelectionCertificate certificate_from_json(const Json& j) {
    const std::string ctx = "certificate";
    allow_keys(j, {"y", "entries"}, ctx);
    SelectionCertificate cert;
    cert.y = parse_indices(field(j, "y", ctx), ctx + ".y");
    const Json& entries = field(j, "entries", ctx);
    if (!entries.is_array()) throw InvalidInput(ctx + ".entries: expected an array");
    for (const auto& e : entries) {
        allow_keys(e, {"z", "m", "color"}, ctx + ".entries");
        SelectionEntry entry;
        entry.z = parse_indices(field(e, "z", ctx), ctx + ".z");
        entry.m = parse_indices(field(e, "m", ctx), ctx + ".m");
        entry.color = as<int>(field(e, "color", ctx), ctx + ".color");
        cert.entries.push_back(std::move(entry));
    }
    return cert;
}

Json certificate_to_json(const SelectionCertificate& cert) {
    Json out;
    out["y"] = cert.y;
    Json entries = Json::array();
    for (const auto& e : cert.entries) entries.push_back({{"z", e.z}, {"m", e.m}, {"color", e.color}});
    out["entries"] = std::move(entries);
    return out;
}

Json result_to_json(const ConvexityFamily& family, const InvariantResult& result) {
    Json out;
    out["invariant"] = kind_name(result.kind);
    if (result.kind == InvariantKind::tc)
        out["k"] = result.k == tc_infinity ? Json("inf") : Json(result.k);
    else if (result.kind == InvariantKind::tverberg || result.kind == InvariantKind::radon)
        out["k"] = result.k;
    out["value"] = result.value;
    out["marker"] = marker_name(result.marker);
    out["caps"] = result.caps;
    out["flags"] = result.flags;
    if (result.certificate) {
        const Certificate& c = *result.certificate;
        Json cert;
        cert["kind"] = c.kind;
        cert["points"] = c.points;
        if (c.point) cert["point"] = *c.point;
        std::vector<std::string> names;
        for (std::size_t m : c.members) names.push_back(family.members()[m].name);
        cert["members"] = names;
        cert["member_indices"] = c.members;
        cert["dimension"] = c.dimension;
        cert["value"] = c.value;
        cert["revalidated"] = revalidate(family, result);
        out["certificate"] = std::move(cert);
    } else {
        out["certificate"] = nullptr;
    }
    return out;
}

Json ratio_to_json(const Ratio& r) {
    return Json{{"num", r.numerator()}, {"den", r.denominator()}, {"text", std::to_string(r.numerator()) + "/" +
                                                                                std::to_string(r.denominator())}};
}

Ratio parse_ratio(const std::string& text) {
    const std::string ctx = "ratio \"" + text + "\"";
    if (auto slash = text.find('/'); slash != std::string::npos) {
        const long long num = parse_int(text.substr(0, slash), ctx);
        const long long den = parse_int(text.substr(slash + 1), ctx);
        if (den <= 0) throw InvalidInput(ctx + ": denominator must be positive");
        return Ratio(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        const std::string frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > 12) throw InvalidInput(ctx + ": bad decimal");
        long long den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        const std::string whole = text.substr(0, dot);
        const bool negative = !whole.empty() && whole[0] == '-';
        const long long w = whole.empty() || whole == "-" ? 0 : parse_int(whole, ctx);
        const long long f = parse_int(frac, ctx);
        return Ratio(w * den + (negative ? -f : f), den);
    }
    return Ratio(parse_int(text, ctx), 1);
}

Json nerve_to_json(const NerveResult& nerve) {
    Json out;
    out["n"] = nerve.profile.n;
    out["f"] = nerve.profile.f;
    out["max_dim_explored"] = nerve.profile.max_dim_explored;
    out["complex"] = complex_to_json(nerve.complex);
    return out;
}

std::vector<InvariantSpec> parse_invariant_specs(const std::string& text) {
    static const std::map<std::string, std::set<std::string>> allowed = {
        {"radon", {"cap", "nonempty"}},
        {"tverberg", {"k", "cap", "nonempty"}},
        {"helly", {"cap"}},
        {"caratheodory", {"cap"}},
        {"tc", {"k", "subfamily_cap", "include_empty", "samples", "seed"}},
        {"transversal", {"cap"}},
    };
    std::vector<InvariantSpec> specs;
    std::stringstream list(text);
    std::string item;
    while (std::getline(list, item, ',')) {
        if (item.empty()) throw InvalidInput("invariants: empty entry in \"" + text + "\"");
        std::stringstream parts(item);
        std::string token;
        InvariantSpec spec;
        std::getline(parts, spec.name, ':');
        auto rules = allowed.find(spec.name);
        if (rules == allowed.end()) throw InvalidInput("invariants: unknown invariant \"" + spec.name + "\"");
        while (std::getline(parts, token, ':')) {
            std::string key = token;
            std::string value = "true";
            if (auto eq = token.find('='); eq != std::string::npos) {
                key = token.substr(0, eq);
                value = token.substr(eq + 1);
            } else if (token == "inf") {
                key = "k";
                value = "inf";
            }
            if (!rules->second.count(key))
                throw InvalidInput("invariants: option \"" + key + "\" does not apply to " + spec.name);
            spec.options[key] = value;
        }
        specs.push_back(std::move(spec));
    }
    if (specs.empty()) throw InvalidInput("invariants: empty list");
    return specs;
}

Json compute_invariant(const ConvexityFamily& family, const InvariantSpec& spec, const ComputeSettings& settings) {
    constexpr int default_cap = 6;
    if (spec.name == "radon" || spec.name == "tverberg") {
        PartitionOptions opts;
        opts.nonempty_parts = option_flag(spec, "nonempty");
        opts.jobs = settings.jobs;
        const int cap = option_int(spec, "cap", default_cap, 1);
        if (spec.name == "radon") return result_to_json(family, radon_number(family, cap, opts));
        return result_to_json(family, tverberg_number(family, option_int(spec, "k", 2, 2), cap, opts));
    }
    if (spec.name == "helly") return result_to_json(family, helly_number(family, option_int(spec, "cap", default_cap, 1)));
    if (spec.name == "caratheodory")
        return result_to_json(family, caratheodory_number(family, option_int(spec, "cap", default_cap, 1), std::nullopt,
                                                          settings.jobs));
    if (spec.name == "tc") {
        int k = tc_infinity;
        if (auto it = spec.options.find("k"); it != spec.options.end() && it->second != "inf")
            k = option_int(spec, "k", 1, 1);
        TcOptions opts;
        opts.subfamily_cap = option_int(spec, "subfamily_cap", opts.subfamily_cap, 0);
        opts.include_empty_subfamily = option_flag(spec, "include_empty");
        opts.samples = option_int(spec, "samples", 0, 0);
        opts.seed = settings.seed;
        if (auto it = spec.options.find("seed"); it != spec.options.end())
            opts.seed = static_cast<std::uint64_t>(parse_int(it->second, "tc:seed"));
        return result_to_json(family, topological_complexity(family, k, opts));
    }
    if (spec.name == "transversal") {
        const int cap = option_int(spec, "cap", default_cap, 1);
        const TransversalResult t = min_transversal(family, cap);
        Json out;
        out["invariant"] = "transversal";
        out["value"] = t.value;
        out["marker"] = marker_name(t.marker);
        out["caps"] = Json{{"cap", cap}};
        out["witness"] = t.witness;
        return out;
    }
    throw InvalidInput("invariants: unknown invariant \"" + spec.name + "\"");
}

Json make_report(const ReportHeader& header, Json result, double wall_seconds) {
    Json out;
    out["tool"] = "relconv";
    out["version"] = tool_version();
    out["command"] = header.command;
    out["parameters"] = header.parameters;
    out["input_digest"] = header.input_digest;
    out["seed"] = header.seed;
    out["rng"] = Rng::algorithm;
    out["result"] = std::move(result);
    out["runtime"] = Json{{"wall_seconds", wall_seconds}};
    return out;
}

}  // namespace relconv
