// Acceptance runner: one PASS/FAIL line per criterion.

#include <chrono>
#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "relconv/suite.hpp"

using namespace relconv;

namespace {

/// Wall-clock limits in seconds; criteria without a stated limit get 120 s.
const std::map<int, double> time_limits = {{1, 10.0}, {2, 30.0}, {3, 1.0}, {4, 300.0}, {7, 1.0}};
constexpr double default_limit = 120.0;
constexpr int determinism_criterion = 11;
constexpr unsigned many_jobs = 8;

double limit_for(int criterion) {
    auto it = time_limits.find(criterion);
    return it == time_limits.end() ? default_limit : it->second;
}

bool run_criterion(int criterion, unsigned jobs) {
    const auto start = std::chrono::steady_clock::now();
    bool passed = true;
    std::string detail;
    std::vector<SuiteRow> info;
    if (criterion == determinism_criterion) {
        SuiteOptions one;
        SuiteOptions many;
        many.jobs = many_jobs;
        const auto a = suite_to_json(verify_paper_suite(one)).dump();
        const auto b = suite_to_json(verify_paper_suite(many)).dump();
        passed = a == b;
        detail = passed ? "suite tables identical for --jobs 1 and --jobs 8" : "suite tables differ between job counts";
    } else {
        SuiteOptions options;
        options.jobs = jobs;
        const auto ids = suite_ids_for_criterion(std::to_string(criterion));
        if (ids.empty()) throw std::invalid_argument("no such criterion");
        for (const auto& id : ids) {
            const SuiteRow row = run_suite_check(id, options);
            if (row.informational) {
                info.push_back(row);
                continue;
            }
            passed = passed && row.passed;
            detail += (detail.empty() ? "" : " | ") + std::string(row.passed ? "" : "FAILED ") + "[" + row.id + "] " +
                      row.name + ": " + row.detail;
        }
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double limit = limit_for(criterion);
    const bool in_time = elapsed <= limit;
    std::cout << "criterion " << criterion << ": " << (passed && in_time ? "PASS" : "FAIL") << " (" << elapsed
              << " s, limit " << limit << " s" << (in_time ? "" : ", OVER TIME") << ") " << detail << "\n";
    for (const auto& row : info)
        std::cout << "  info [" << row.id << "] " << (row.passed ? "holds" : "does not hold") << ": " << row.name << ": "
                  << row.detail << "\n";
    return passed && in_time;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"relconv acceptance criteria"};
    std::vector<int> criteria;
    unsigned jobs = 1;
    app.add_option("--criterion", criteria, "Criterion numbers (default: all)")->check(CLI::Range(1, 11));
    app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1U, 1024U));
    CLI11_PARSE(app, argc, argv);
    if (criteria.empty())
        for (int c = 1; c <= 11; ++c) criteria.push_back(c);
    bool all = true;
    for (int c : criteria) all = run_criterion(c, jobs) && all;
    return all ? 0 : 1;
}
