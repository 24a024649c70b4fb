#include "listpack/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace listpack {

int default_jobs()
{
    if (const char* env = std::getenv("LISTPACK_JOBS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 1024) {
            return static_cast<int>(v);
        }
    }
    return 1;
}

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

class Checkpoint {
public:
    Checkpoint(const std::filesystem::path& dir, const std::string& tag, std::uint64_t total, std::uint64_t shard)
    {
        if (dir.empty()) {
            return;
        }
        std::filesystem::create_directories(dir);
        path_ = dir / (tag + ".ckpt");
        header_ = "listpack-sweep " + tag + " total=" + std::to_string(total) + " shard=" + std::to_string(shard);
        std::ifstream in(path_);
        std::string line;
        if (in && std::getline(in, line) && line == header_) {
            while (std::getline(in, line)) {
                std::istringstream fields(line);
                std::string word;
                std::uint64_t s = 0;
                if (!(fields >> word >> s) || word != "done") {
                    continue;
                }
                done_.insert(s);
                std::uint64_t f = 0;
                while (fields >> f) {
                    failures_.push_back(f);
                }
            }
            in.close();
            out_.open(path_, std::ios::app);
        } else {
            in.close();
            out_.open(path_, std::ios::trunc);
            out_ << header_ << "\n";
            out_.flush();
        }
    }

    bool enabled() const { return !path_.empty(); }
    const std::set<std::uint64_t>& done() const { return done_; }
    const std::vector<std::uint64_t>& failures() const { return failures_; }

    void record(std::uint64_t shard, const std::vector<std::uint64_t>& fails)
    {
        if (!enabled()) {
            return;
        }
        std::lock_guard lock(mu_);
        out_ << "done " << shard;
        for (auto f : fails) {
            out_ << " " << f;
        }
        out_ << "\n";
        out_.flush();
    }

private:
    std::filesystem::path path_;
    std::string header_;
    std::set<std::uint64_t> done_;
    std::vector<std::uint64_t> failures_;
    std::ofstream out_;
    std::mutex mu_;
};

}  // namespace

SweepResult run_sweep(std::uint64_t total, const std::function<IndexPredicate()>& make_worker,
                      const SweepOptions& options, const std::string& tag)
{
    const std::uint64_t shard_size = std::max<std::uint64_t>(options.shard_size, 1);
    const std::uint64_t shards = total == 0 ? 0 : (total - 1) / shard_size + 1;
    Checkpoint ckpt(options.checkpoint_dir, tag, total, shard_size);

    SweepResult result;
    result.total = total;
    std::atomic<std::uint64_t> best_fail{kNone};
    std::mutex mu;
    std::vector<std::uint64_t> failures = ckpt.failures();
    for (auto f : failures) {
        best_fail = std::min(best_fail.load(), f);
    }
    result.resumed_shards = ckpt.done().size();
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> checked{0};
    std::exception_ptr error;

    auto work = [&] {
        try {
            IndexPredicate holds = make_worker();
            for (;;) {
                std::uint64_t s = next.fetch_add(1);
                if (s >= shards) {
                    return;
                }
                if (ckpt.done().count(s)) {
                    continue;
                }
                const std::uint64_t begin = s * shard_size;
                const std::uint64_t end = std::min(total, begin + shard_size);
                if (options.stop_at_first && begin > best_fail.load()) {
                    continue;
                }
                std::vector<std::uint64_t> local;
                bool finished = true;
                for (std::uint64_t i = begin; i < end; ++i) {
                    if (options.stop_at_first && i > best_fail.load()) {
                        finished = false;
                        break;
                    }
                    checked.fetch_add(1);
                    if (!holds(i)) {
                        local.push_back(i);
                        if (options.stop_at_first) {
                            std::uint64_t cur = best_fail.load();
                            while (i < cur && !best_fail.compare_exchange_weak(cur, i)) {
                            }
                            break;
                        }
                    }
                }
                if (finished || !local.empty()) {
                    ckpt.record(s, local);
                }
                std::lock_guard lock(mu);
                failures.insert(failures.end(), local.begin(), local.end());
            }
        } catch (...) {
            std::lock_guard lock(mu);
            if (!error) {
                error = std::current_exception();
            }
            next = shards;
        }
    };

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) {
            pool.emplace_back(work);
        }
        for (auto& t : pool) {
            t.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    std::sort(failures.begin(), failures.end());
    failures.erase(std::unique(failures.begin(), failures.end()), failures.end());
    if (options.stop_at_first && !failures.empty()) {
        failures.resize(1);
    }
    result.failures = std::move(failures);
    result.checked = checked.load();
    return result;
}

}  // namespace listpack
