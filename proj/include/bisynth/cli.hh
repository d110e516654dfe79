#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace bisynth::cli
{
    inline constexpr int exit_feasible = 0;
    inline constexpr int exit_error = 1;
    inline constexpr int exit_infeasible = 2;
    inline constexpr int exit_defect = 3;

    // args excludes the program name. Writes one JSON document to out (or to
    // the --output file) and diagnostics to err.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}
