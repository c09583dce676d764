#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "relconv/chain_map.hpp"
#include "relconv/complex.hpp"
#include "relconv/convexity.hpp"
#include "relconv/nerve.hpp"
#include "relconv/ramsey.hpp"

namespace relconv {

using Json = nlohmann::ordered_json;

/// Reads and parses a JSON file; InvalidInput on a missing file or bad JSON.
Json read_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);

/// Writes through a temporary file in the same directory and renames it.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string sha256_hex(const std::string& data);

/// {"vertex_count", "maximal_simplices", "labels"?} or {"gallery", "params"}.
SimplicialComplex complex_from_json(const Json& j);
Json complex_to_json(const SimplicialComplex& complex);

/// {"ambient", "members": [{"name", "maximal_simplices"}], "labeled_points"?}.
ConvexityFamily family_from_json(const Json& j);
Json family_to_json(const ConvexityFamily& family);

std::string simplex_key(std::span<const Vertex> simplex);
Simplex parse_simplex_key(const std::string& key);

/// {"source", "target", "assignment": {"0,1": [[...], ...]}}; unlisted
/// simplices map to the zero chain.
SimplicialChainMap chain_map_from_json(const Json& j);
Json chain_map_to_json(const SimplicialChainMap& map);

/// {"<simplex>": [points]} over the map's source; unlisted simplices get no points.
ConstraintMap constraint_map_from_json(const Json& j, const SimplicialComplex& source, std::size_t ambient_vertices);

/// {"ground", "k", "colors", "kind": constant|subset_only|random|table, "seed"?, "color"?, "table"?, "tabulate"?}.
ColoringOracle oracle_from_json(const Json& j);
SelectionCertificate certificate_from_json(const Json& j);
Json certificate_to_json(const SelectionCertificate& cert);

Json result_to_json(const ConvexityFamily& family, const InvariantResult& result);
Json nerve_to_json(const NerveResult& nerve);
Json ratio_to_json(const Ratio& r);
Ratio parse_ratio(const std::string& text);

/// One entry of a comma-separated list such as "tverberg:k=3:cap=7" or "tc:inf".
struct InvariantSpec {
    std::string name;
    std::map<std::string, std::string> options;
};

std::vector<InvariantSpec> parse_invariant_specs(const std::string& text);

struct ComputeSettings {
    unsigned jobs = 1;
    std::uint64_t seed = 0;
};

/// Runs one invariant; InvalidInput on unknown names or options.
Json compute_invariant(const ConvexityFamily& family, const InvariantSpec& spec, const ComputeSettings& settings);

/// Common report envelope. `runtime` is the only field that may differ
/// between identical runs.
struct ReportHeader {
    std::string command;
    Json parameters = Json::object();
    std::string input_digest;
    std::uint64_t seed = 0;
};

Json make_report(const ReportHeader& header, Json result, double wall_seconds);

std::string tool_version();

}  // namespace relconv
