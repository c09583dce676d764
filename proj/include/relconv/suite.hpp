#pragma once

#include <functional>
#include <string>
#include <vector>

#include "relconv/convexity.hpp"
#include "relconv/io.hpp"

namespace relconv {

/// One line of the verification table. Informational rows document a
/// related fact and never decide the overall outcome.
struct SuiteRow {
    std::string id;
    std::string name;
    bool passed = false;
    bool informational = false;
    std::string detail;
};

/// Vertex set of the hull of S; the closure-operator check runs against it.
using HullFn = std::function<VertexSet(const ConvexityFamily&, const VertexSet&)>;

struct SuiteOptions {
    unsigned jobs = 1;
    HullFn hull;  ///< defaults to ConvexityFamily::hull_vertices
};

/// Row ids in table order. A criterion number N selects the ids that are
/// N itself or N followed by a letter ("7" selects 7a, 7b, 7r).
std::vector<std::string> suite_check_ids();
std::vector<std::string> suite_ids_for_criterion(const std::string& criterion);

SuiteRow run_suite_check(const std::string& id, const SuiteOptions& options);

/// Every row, in table order; `only` restricts to the given ids.
std::vector<SuiteRow> verify_paper_suite(const SuiteOptions& options, const std::vector<std::string>& only = {});

/// True iff every non-informational row passed.
bool suite_passed(const std::vector<SuiteRow>& rows);

Json suite_to_json(const std::vector<SuiteRow>& rows);

/// Random family on a gallery ambient with at most 12 vertices and between
/// min_members and max_members members; used by the seeded checks.
ConvexityFamily small_random_family(std::uint64_t seed, int min_members, int max_members);

}  // namespace relconv
