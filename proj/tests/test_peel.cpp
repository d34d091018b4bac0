#include <doctest.h>

#include <vector>

#include "kcore/engine.hpp"
#include "kcore/generate.hpp"
#include "kcore/peel.hpp"
#include "support/oracle.hpp"

using namespace kcore;
namespace t = kcore::testing;

namespace {

const std::vector<core_t> kG1Coreness{1, 1, 2, 2, 2, 2};

}  // namespace

TEST_CASE("bz_serial on small graphs") {
  CHECK(bz_serial(t::g1()).coreness == kG1Coreness);
  CHECK(bz_serial(t::cycle(5)).coreness == std::vector<core_t>(5, 2));
  CHECK(bz_serial(t::k4_pendant()).coreness == std::vector<core_t>{3, 3, 3, 3, 1});
  CHECK(bz_serial(Graph{}).coreness.empty());
}

TEST_CASE("bz_serial agrees with brute-force removal") {
  for (const auto& [name, g] : t::corpus(40, 2, 17, 400)) {
    CAPTURE(name);
    CHECK(bz_serial(g).coreness == t::brute_force_coreness(g));
  }
}

TEST_CASE("gpp operation counts") {
  const CoreResult g1 = gpp(t::g1());
  CHECK(g1.coreness == kG1Coreness);
  CHECK(g1.metrics.iterations == 3);
  CHECK(g1.metrics.atomic_rmw == 8);

  const CoreResult k4 = gpp(t::complete(4));
  CHECK(k4.coreness == std::vector<core_t>(4, 3));
  CHECK(k4.metrics.iterations == 1);

  const Graph edgeless = Graph::from_edges(3, std::vector<std::pair<vertex_t, vertex_t>>{});
  const CoreResult e = gpp(edgeless);
  CHECK(e.coreness == std::vector<core_t>(3, 0));
  CHECK(e.metrics.atomic_rmw == 0);
  CHECK(e.metrics.iterations == 0);
}

TEST_CASE("peel_one operation counts") {
  const CoreResult r = peel_one(t::g1());
  CHECK(r.coreness == kG1Coreness);
  CHECK(r.metrics.iterations == 3);
  CHECK(r.metrics.atomic_rmw == 4);
  CHECK(peel_one(t::star(5)).coreness == std::vector<core_t>(6, 1));
}

TEST_CASE("peel_one_dynamic levels equal k_max") {
  const CoreResult r = peel_one_dynamic(t::g1());
  CHECK(r.coreness == kG1Coreness);
  CHECK(r.metrics.iterations == 2);
  CHECK(r.metrics.atomic_rmw == 4);
  CHECK(r.metrics.atomic_rmw < gpp(t::g1()).metrics.atomic_rmw);
  CHECK(peel_one_dynamic(t::complete(4)).metrics.iterations == 3);
}

TEST_CASE("pp_dynamic on G1 and the star-tail scenario") {
  const CoreResult r = pp_dynamic(t::g1());
  CHECK(r.coreness == kG1Coreness);
  CHECK(r.metrics.iterations == 2);
  CHECK(r.metrics.atomic_rmw > peel_one_dynamic(t::g1()).metrics.atomic_rmw);

  const Graph st = generate_graph({.model = GraphModel::kStarTail, .n = 3, .m = 1, .k = 2});
  for (int workers : {1, 2, 8}) {
    CAPTURE(workers);
    const CoreResult pp = pp_dynamic(st, {.workers = workers, .trace = true});
    const CoreResult po = peel_one_dynamic(st, {.workers = workers, .trace = true});
    CHECK(pp.metrics.trace->cell_atomics[0] == 5);
    CHECK(po.metrics.trace->cell_atomics[0] <= 3);
    CHECK(pp.coreness == bz_serial(st).coreness);
    CHECK(po.coreness == pp.coreness);
  }
}

TEST_CASE("live vertices never drop below the current level in debug mode") {
  for (const auto& [name, g] : t::corpus(20, 2, 23, 800)) {
    CAPTURE(name);
    for (auto algo : {peel_one, peel_one_dynamic}) {
      const CoreResult r = algo(g, {.workers = 2, .debug_invariants = true});
      REQUIRE(r.metrics.invariants);
      CHECK(r.metrics.invariants->ok());
    }
  }
}

TEST_CASE("peel family matches the oracle for several worker counts") {
  for (const auto& [name, g] : t::corpus(30, 3, 31, 2000)) {
    CAPTURE(name);
    const auto expected = bz_serial(g).coreness;
    const core_t k_max = bz_serial(g).k_max();
    for (int workers : {1, 2, 8}) {
      CAPTURE(workers);
      CHECK(gpp(g, {.workers = workers}).coreness == expected);
      CHECK(peel_one(g, {.workers = workers}).coreness == expected);
      const CoreResult po = peel_one_dynamic(g, {.workers = workers});
      const CoreResult pp = pp_dynamic(g, {.workers = workers});
      CHECK(po.coreness == expected);
      CHECK(pp.coreness == expected);
      CHECK(po.metrics.iterations == k_max);
      CHECK(pp.metrics.iterations == k_max);
      CHECK(po.metrics.atomic_rmw <= pp.metrics.atomic_rmw);
    }
  }
}

TEST_CASE("schedule-independent counters for gpp and peel_one") {
  const Graph g = generate_graph({.model = GraphModel::kChungLu, .n = 3000, .exponent = 2.3, .seed = 8});
  const CoreResult g1 = gpp(g, {.workers = 1});
  const CoreResult p1 = peel_one(g, {.workers = 1});
  for (int workers : {2, 8}) {
    const CoreResult gw = gpp(g, {.workers = workers});
    const CoreResult pw = peel_one(g, {.workers = workers});
    CHECK(gw.metrics.atomic_rmw == g1.metrics.atomic_rmw);
    CHECK(gw.metrics.adjacency_reads == g1.metrics.adjacency_reads);
    CHECK(gw.metrics.iterations == g1.metrics.iterations);
    CHECK(pw.metrics.atomic_rmw == p1.metrics.atomic_rmw);
    CHECK(pw.metrics.iterations == p1.metrics.iterations);
  }
}

TEST_CASE("engine dispatch and names") {
  CHECK(parse_algorithm("po-dyn") == Algorithm::kPoDyn);
  CHECK(algorithm_name(Algorithm::kHistoCore) == "histocore");
  CHECK_THROWS_AS(parse_algorithm("nosuch"), std::invalid_argument);
  CHECK(all_algorithms().size() == 8);
  CHECK(parallel_algorithms().size() == 7);
  for (Algorithm a : all_algorithms()) {
    const CoreResult r = run_algorithm(a, t::g1(), {.workers = 2});
    CHECK(r.algorithm == algorithm_name(a));
    CHECK(r.coreness == kG1Coreness);
  }
}
