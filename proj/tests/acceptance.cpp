// Runs every acceptance check and prints one PASS/FAIL line per criterion.
// Usage: listpack_acceptance [out-dir] [--skip-slow]

#include "listpack/repro.hpp"

#include <cstring>
#include <fstream>
#include <iomanip>
#include <iostream>

int main(int argc, char** argv)
{
    listpack::ReproOptions options;
    options.sweep.jobs = listpack::default_jobs();
    options.out_dir = "acceptance-out";
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--skip-slow") == 0) {
            options.skip_slow = true;
        } else {
            options.out_dir = argv[i];
        }
    }

    std::vector<listpack::CheckResult> results;
    int failed = 0;
    for (const auto& spec : listpack::repro_checks()) {
        auto r = listpack::run_check(spec, options);
        std::cout << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(15) << r.name << std::right
                  << std::fixed << std::setprecision(1) << std::setw(7) << r.seconds << "s  " << r.claim << '\n';
        for (const auto& line : r.observed) {
            if (!r.passed) {
                std::cout << "      " << line << '\n';
            }
        }
        for (const auto& s : r.skipped) {
            std::cout << "      skipped: " << s << '\n';
        }
        std::cout.flush();
        failed += !r.passed;
        results.push_back(std::move(r));
    }
    std::filesystem::create_directories(options.out_dir);
    std::ofstream(options.out_dir / "manifest.json") << listpack::manifest_json(results, options).dump(2) << '\n';
    std::cout << (failed ? "FAIL" : "PASS") << ": " << results.size() - failed << "/" << results.size()
              << " criteria hold\n";
    return failed ? 1 : 0;
}
