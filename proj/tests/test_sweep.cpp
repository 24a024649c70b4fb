#include "listpack/packing.hpp"
#include "listpack/sweep.hpp"

#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>

using namespace listpack;

namespace {

std::function<IndexPredicate()> multiples_fail(std::uint64_t m)
{
    return [m] { return [m](std::uint64_t i) { return i % m != m - 1; }; };
}

std::filesystem::path fresh_dir(const std::string& name)
{
    auto dir = std::filesystem::temp_directory_path() / ("listpack-test-" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("sweep results do not depend on shard size or thread count")
{
    for (bool stop : {true, false}) {
        SweepOptions base;
        base.stop_at_first = stop;
        base.shard_size = 1000;
        const auto reference = run_sweep(5000, multiples_fail(777), base);
        CHECK(reference.total == 5000);
        CHECK(reference.failures.front() == 776);
        if (!stop) {
            CHECK(reference.failures.size() == 6);
            CHECK(reference.checked == 5000);
        }
        for (int jobs : {1, 2, 4}) {
            for (std::uint64_t shard : {1u, 7u, 64u, 10000u}) {
                SweepOptions o = base;
                o.jobs = jobs;
                o.shard_size = shard;
                const auto r = run_sweep(5000, multiples_fail(777), o);
                CHECK(r.failures.front() == 776);
                if (!stop) {
                    CHECK(r.failures == reference.failures);
                }
            }
        }
    }
    const auto clean = run_sweep(300, multiples_fail(1000), SweepOptions{});
    CHECK(clean.holds());
    CHECK(clean.checked == 300);
    CHECK(run_sweep(0, multiples_fail(3), SweepOptions{}).holds());
}

TEST_CASE("every worker gets its own predicate")
{
    std::atomic<int> made{0};
    SweepOptions o;
    o.jobs = 3;
    o.shard_size = 10;
    run_sweep(200, [&] {
        ++made;
        return IndexPredicate([](std::uint64_t) { return true; });
    }, o);
    CHECK(made.load() >= 1);
    CHECK(made.load() <= 3);
}

TEST_CASE("checkpointed sweeps resume without re-checking finished shards")
{
    const auto dir = fresh_dir("resume");
    SweepOptions o;
    o.shard_size = 100;
    o.stop_at_first = false;
    o.checkpoint_dir = dir;
    const auto first = run_sweep(1000, multiples_fail(333), o, "resume");
    CHECK(first.resumed_shards == 0);
    std::atomic<int> calls{0};
    const auto second = run_sweep(1000, [&] {
        return IndexPredicate([&](std::uint64_t i) {
            ++calls;
            return i % 333 != 332;
        });
    }, o, "resume");
    CHECK(second.resumed_shards == 10);
    CHECK(calls.load() == 0);
    CHECK(second.failures == first.failures);
    CHECK(first.checked == 1000);
    CHECK(second.checked == 0);
    std::filesystem::remove_all(dir);
}

TEST_CASE("correspondence sweeps agree across job counts")
{
    SweepOptions one;
    SweepOptions many;
    many.jobs = 3;
    many.shard_size = 17;
    for (int n = 3; n <= 6; ++n) {
        const auto a = correspondence_sweep(cycle_graph(n), 2, one);
        const auto b = correspondence_sweep(cycle_graph(n), 2, many);
        CHECK(a.holds() == b.holds());
        CHECK(a.failures == b.failures);
        CHECK(a.total == b.total);
        // the plain double cover packs only for even n, the twisted one only for odd n
        CHECK(!a.holds());
    }
}

TEST_CASE("LISTPACK_JOBS sets the default job count")
{
    const char* old = std::getenv("LISTPACK_JOBS");
    const std::string saved = old ? old : "";
    setenv("LISTPACK_JOBS", "3", 1);
    CHECK(default_jobs() == 3);
    setenv("LISTPACK_JOBS", "zero", 1);
    CHECK(default_jobs() == 1);
    setenv("LISTPACK_JOBS", "-2", 1);
    CHECK(default_jobs() == 1);
    unsetenv("LISTPACK_JOBS");
    CHECK(default_jobs() == 1);
    if (old) {
        setenv("LISTPACK_JOBS", saved.c_str(), 1);
    }
}
