#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

namespace listpack {

struct SweepOptions {
    int jobs = 1;
    std::uint64_t shard_size = 1024;
    /// When set, finished shards are appended to <dir>/<tag>.ckpt and skipped on rerun.
    std::filesystem::path checkpoint_dir;
    /// Stop once a failing index is known; the reported failure is still the smallest one.
    bool stop_at_first = true;
};

struct SweepResult {
    std::uint64_t total = 0;
    /// Indices evaluated by this run; resumed shards are not counted.
    std::uint64_t checked = 0;
    /// Sorted failing indices (only the smallest when stop_at_first).
    std::vector<std::uint64_t> failures;
    std::uint64_t resumed_shards = 0;

    bool holds() const { return failures.empty(); }
};

/// Per-worker predicate; each worker thread builds its own via the factory.
using IndexPredicate = std::function<bool(std::uint64_t)>;

/// Evaluates `holds` on every index in [0, total), in contiguous shards spread over `jobs` threads.
SweepResult run_sweep(std::uint64_t total, const std::function<IndexPredicate()>& make_worker,
                      const SweepOptions& options, const std::string& tag = "sweep");

/// LISTPACK_JOBS if set to a positive integer, else 1.
int default_jobs();

}  // namespace listpack
