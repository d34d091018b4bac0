#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <latch>
#include <set>
#include <thread>
#include <vector>

#include "kcore/atomic_cells.hpp"
#include "kcore/frontier.hpp"
#include "kcore/superstep.hpp"

using namespace kcore;

namespace {

template <class Body>
void run_threads(int count, Body body) {
  std::latch start(count);
  std::vector<std::thread> threads;
  for (int t = 0; t < count; ++t) {
    threads.emplace_back([&, t] {
      start.arrive_and_wait();
      body(t);
    });
  }
  for (auto& th : threads) th.join();
}

}  // namespace

TEST_CASE("clamped_decrement single-threaded cases") {
  AtomicCellArray cells(3);
  cells.store(0, 5);
  cells.store(1, 3);
  cells.store(2, 3);
  CHECK(clamped_decrement(cells, 0, 2) == 5);
  CHECK(cells.load(0) == 4);
  CHECK(clamped_decrement(cells, 1, 3) == 3);
  CHECK(cells.load(1) == 3);
  CHECK(clamped_decrement(cells, 2, 2) == 3);
  CHECK(cells.load(2) == 2);
  CHECK(clamped_decrement(cells, 2, 2) == 2);
  CHECK(cells.load(2) == 2);
  CHECK_THROWS_AS(clamped_decrement(cells, 3, 0), std::out_of_range);
}

TEST_CASE("fetch_add and fetch_sub return the previous value") {
  AtomicCellArray cells(1);
  cells.store(0, 7);
  CHECK(cells.fetch_sub(0, 1) == 7);
  CHECK(cells.fetch_add(0, 3) == 6);
  CHECK(cells.load(0) == 9);
  CHECK_THROWS_AS(cells.fetch_add(1, 1), std::out_of_range);
}

TEST_CASE("clamped_decrement is linearizable under contention") {
  constexpr int kThreads = 8;
  struct Case {
    std::int64_t d, k;
    int calls_per_thread;
  };
  for (const Case c : {Case{1000, 10, 200}, Case{50, 10, 200}, Case{11, 10, 5}, Case{200000, 0, 10000}}) {
    CAPTURE(c.d);
    CAPTURE(c.k);
    AtomicCellArray cells(1);
    cells.store(0, c.d);
    std::atomic<std::int64_t> above{0};
    run_threads(kThreads, [&](int) {
      std::int64_t mine = 0;
      for (int i = 0; i < c.calls_per_thread; ++i) {
        if (clamped_decrement(cells, 0, c.k) > c.k) ++mine;
      }
      above += mine;
    });
    const std::int64_t total = static_cast<std::int64_t>(kThreads) * c.calls_per_thread;
    CHECK(cells.load(0) == std::max(c.k, c.d - total));
    CHECK(above.load() == std::min(total, c.d - c.k));
  }
}

TEST_CASE("concurrent removers: compensated fetch_sub costs 2n-m, clamping costs n") {
  // A cell at k+m hit once by each of n concurrent removers at level k.
  constexpr std::int64_t k = 4;
  for (int trial = 0; trial < 50; ++trial) {
    for (const auto [n, m] : {std::pair{3, 1}, std::pair{8, 2}, std::pair{8, 7}}) {
      AtomicCellArray plain(1);
      AtomicCellArray clamped(1);
      plain.store(0, k + m);
      clamped.store(0, k + m);
      std::atomic<int> plain_ops{0};
      std::atomic<int> plain_hits{0};
      std::atomic<int> clamped_hits{0};
      run_threads(n, [&](int) {
        const auto old = plain.fetch_sub(0, 1);
        ++plain_ops;
        if (old == k + 1) ++plain_hits;
        if (old <= k) {
          plain.fetch_add(0, 1);
          ++plain_ops;
        }
        if (clamped_decrement(clamped, 0, k) == k + 1) ++clamped_hits;
      });
      CHECK(plain_ops.load() == 2 * n - m);
      CHECK(plain.load(0) == k);
      CHECK(clamped.load(0) == k);
      CHECK(plain_hits.load() == 1);
      CHECK(clamped_hits.load() == 1);
    }
  }
}

TEST_CASE("frontier dedups between drains") {
  FrontierQueue q(10);
  CHECK(q.push(3));
  CHECK_FALSE(q.push(3));
  CHECK(q.contains(3));
  CHECK(q.drain() == std::vector<vertex_t>{3});
  CHECK(q.drain().empty());
  CHECK(q.push(3));  // allowed again after a drain
  CHECK(q.size() == 1);
  CHECK_THROWS_AS(q.push(10), std::out_of_range);
}

TEST_CASE("frontier accepts pushes from many workers") {
  FrontierQueue q(64);
  std::atomic<int> accepted{0};
  run_threads(8, [&](int t) {
    if (q.push(static_cast<vertex_t>(t))) ++accepted;
    for (vertex_t v = 0; v < 64; ++v) {
      if (q.push(v)) ++accepted;
    }
  });
  auto items = q.drain();
  std::sort(items.begin(), items.end());
  std::vector<vertex_t> all(64);
  for (vertex_t v = 0; v < 64; ++v) all[v] = v;
  CHECK(items == all);
  CHECK(accepted.load() == 64);
}

TEST_CASE("frontier epochs survive many drains") {
  FrontierQueue q(4);
  for (int round = 0; round < 1000; ++round) {
    q.push(static_cast<vertex_t>(round % 4));
    q.push(static_cast<vertex_t>(round % 4));
    REQUIRE(q.drain().size() == 1);
  }
}

TEST_CASE("run_supersteps") {
  WorkCounters sink;
  auto noop_scan = [](std::span<const vertex_t>, FrontierQueue&, WorkCounters&) {};

  SUBCASE("empty frontier runs no cycles") {
    FrontierQueue q(4);
    auto scatter = [](vertex_t, FrontierQueue&, WorkCounters&) { FAIL("scatter on empty frontier"); };
    CHECK(run_supersteps(q, noop_scan, scatter, {}, sink) == 0);
  }

  // A chain 0 -> 1 -> ... -> 99: synchronous mode needs one cycle per link,
  // dynamic mode absorbs the whole chain into one cycle.
  for (int workers : {1, 2, 8}) {
    CAPTURE(workers);
    for (FrontierMode mode : {FrontierMode::kSynchronous, FrontierMode::kDynamic}) {
      FrontierQueue q(100);
      std::vector<int> visits(100, 0);
      auto scatter = [&](vertex_t v, FrontierQueue& out, WorkCounters& local) {
        ++visits[v];
        ++local.adjacency_reads;
        if (v + 1 < 100) out.push(v + 1);
      };
      q.push(0);
      const auto cycles = run_supersteps(q, noop_scan, scatter, {.workers = workers, .mode = mode}, sink);
      CHECK(cycles == (mode == FrontierMode::kSynchronous ? 100u : 1u));
      CHECK(std::all_of(visits.begin(), visits.end(), [](int x) { return x == 1; }));
    }
  }
}

TEST_CASE("parallel_for merges per-worker counters") {
  for (int workers : {1, 2, 8}) {
    WorkCounters sink;
    std::vector<std::uint8_t> seen(10000, 0);
    parallel_for(seen.size(), workers, sink, [&](std::size_t i, WorkCounters& local) {
      seen[i] = 1;
      ++local.atomic_rmw;
    }, 64);
    CHECK(sink.atomic_rmw == 10000);
    CHECK(std::count(seen.begin(), seen.end(), 1) == 10000);
  }
}
