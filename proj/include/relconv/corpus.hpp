#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "relconv/io.hpp"

namespace relconv {

/// One generator entry: a family gallery name with its parameters, run once
/// per seed.
struct GeneratorSpec {
    std::string family;
    std::vector<int> params;
    std::string ambient;
    std::vector<int> ambient_params;
    std::vector<std::uint64_t> seeds;
};

struct ExperimentConfig {
    std::vector<GeneratorSpec> generators;
    std::vector<std::string> invariants;  ///< invariant specs for the per-family reports
    std::string csv_path;                 ///< empty: CSV goes to standard output
    std::string reports_dir;              ///< empty: no per-family reports
    unsigned jobs = 1;
    int tc_subfamily_cap = 16;
    int gz_k = 2;
};

/// Parses and validates a config; unknown keys are rejected.
ExperimentConfig experiment_config_from_json(const Json& j);

struct CorpusOutput {
    std::string csv;
    /// (file name, report body) per generated family, when reports are requested.
    std::vector<std::pair<std::string, Json>> reports;
};

inline constexpr const char* corpus_csv_header =
    "family,params,seed,n,f0,f1,f2,f3,alpha1_hat,alpha2_hat,tc1,tc1_marker,gz_k,gz_applicable,gz_f_km1,gz_f_k,gz_f_k1,error";

/// One CSV row per (generator, seed). A failing family fills the error
/// column and the run goes on.
CorpusOutput corpus_run(const ExperimentConfig& config);

}  // namespace relconv
