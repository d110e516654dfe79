#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace bisynth
{
    struct CriterionResult
    {
        int id = 0;
        std::string name;
        bool passed = false;
        std::string detail;
        double seconds = 0;
    };

    struct SuiteOptions
    {
        std::uint64_t seed = 20240917;
        // Multiplies the random instance counts; 1 is the full suite.
        double scale = 1.0;
    };

    inline constexpr int criterion_count = 12;

    auto run_criterion(int id, const SuiteOptions & opts) -> CriterionResult;

    // Runs every criterion in order, reporting each as it finishes.
    auto run_suite(const SuiteOptions & opts, const std::function<void(const CriterionResult &)> & report = {})
        -> std::vector<CriterionResult>;
}
