#include <bisynth/selftest.hh>

#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <string>

int main(int argc, char ** argv)
{
    bisynth::SuiteOptions opts;
    if (argc > 1)
        opts.seed = std::stoull(argv[1]);
    if (const char * scale = std::getenv("BISYNTH_ACCEPTANCE_SCALE"))
        opts.scale = std::stod(scale);

    int failed = 0;
    bisynth::run_suite(opts, [&](const bisynth::CriterionResult & r) {
        std::cout << (r.passed ? "PASS" : "FAIL") << " " << std::setw(2) << r.id << " " << r.name << " ("
                  << std::fixed << std::setprecision(2) << r.seconds << " s): " << r.detail << std::endl;
        failed += ! r.passed;
    });
    std::cout << (bisynth::criterion_count - failed) << "/" << bisynth::criterion_count << " criteria passed"
              << std::endl;
    return failed ? 1 : 0;
}
