#pragma once

#include "listpack/json_io.hpp"
#include "listpack/sweep.hpp"

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace listpack {

struct ReproOptions {
    SweepOptions sweep;
    std::uint64_t seed = 20240611;
    /// Randomised Hall instances per (structure, m) pair.
    std::uint64_t hall_trials = 100'000;
    /// Skips the generic LP solve of the d=3 degeneracy-gap graph (several minutes); its
    /// explicit certificate is still checked.
    bool skip_slow = false;
    /// Certificates go to <out_dir>/<check>/; nothing is written when empty.
    std::filesystem::path out_dir;
};

struct CheckResult {
    std::string name;
    std::string claim;
    bool passed = false;
    /// One line per verified (or failed) fact.
    std::vector<std::string> observed;
    std::vector<std::string> skipped;
    /// Paths relative to out_dir.
    std::vector<std::string> certificates;
    double seconds = 0;
};

/// Collects facts and certificates while a check runs.
class CheckContext {
public:
    CheckContext(const ReproOptions& options, std::string name);

    const ReproOptions& options() const { return options_; }
    /// Deterministic per check.
    std::uint64_t seed() const { return seed_; }
    void expect(bool condition, const std::string& fact);
    void skip(const std::string& what) { result_.skipped.push_back(what); }
    void save(const std::string& file, const Json& document);
    CheckResult finish(double seconds);

private:
    const ReproOptions& options_;
    std::uint64_t seed_;
    CheckResult result_;
};

struct CheckSpec {
    std::string name;
    std::string claim;
    std::function<void(CheckContext&)> run;
};

/// The fourteen acceptance checks, in order.
const std::vector<CheckSpec>& repro_checks();

/// Exceptions are caught and recorded as a failed fact.
CheckResult run_check(const CheckSpec& spec, const ReproOptions& options);

/// {"schema": "listpack.manifest/1", "green", "seed", "checks": [...]}
Json manifest_json(const std::vector<CheckResult>& results, const ReproOptions& options);

}  // namespace listpack
