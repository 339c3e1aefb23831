#include <doctest.h>

#include <string>
#include <vector>

#include "chains.hpp"
#include "generate.hpp"
#include "oracles.hpp"
#include "solver.hpp"
#include "trace_io.hpp"

using namespace disperse;

namespace {

ProblemInstance make(const std::vector<std::string>& positions, const std::string& delta) {
  return normalize_instance(positions, delta);
}

}  // namespace

TEST_CASE("two close points split the separation") {
  // derived with the exhaustive oracle: optima are [-1,1] and [0,2], and the
  // sweep returns the pointwise-minimal one
  ProblemInstance inst = make({"0", "1"}, "2");
  const SolveResult result = solve(inst);
  CHECK(result.configuration == Configuration{-1, 1});
  CHECK(result.total_cost == Int128{1});

  const OracleResult oracle = exhaustive_anchored_solve(inst);
  CHECK(oracle.best_cost == Int128{1});
  REQUIRE(oracle.all_optima.size() == 2);
  CHECK(oracle.all_optima[0] == Configuration{-1, 1});
  CHECK(oracle.all_optima[1] == Configuration{0, 2});
}

TEST_CASE("already independent input stays put") {
  ProblemInstance inst = make({"0", "10"}, "1");
  const SolveResult result = solve(inst);
  CHECK(result.configuration == inst.initial);
  CHECK(result.total_cost == 0);
  CHECK(result.counters.shifts == 0);
  CHECK(result.counters.merges == 0);
}

TEST_CASE("shift collides with the left chain and merges") {
  // exhaustive oracle cost 1.5; the second chain moves by the gap slack and merges
  ProblemInstance inst = make({"0", "3", "3.5"}, "2");
  const SolveResult result = solve(inst, {.want_trace = true, .debug_audit = true});
  CHECK(result.configuration == Configuration{0, 20, 40});  // scale 10
  CHECK(result.total_cost == Int128{15});                   // 1.5 at scale 10
  CHECK(result.counters.merges == 1);
  CHECK(exhaustive_anchored_solve(inst).best_cost == Int128{15});

  bool saw_merge = false;
  for (const TraceEvent& e : result.trace) {
    if (e.kind == TraceKind::Merge) {
      saw_merge = true;
      CHECK(e.chain_start == 0);
      CHECK(e.merged_with_start == 1);
    }
  }
  CHECK(saw_merge);
}

TEST_CASE("chain stops on its own stationary point before the neighbour") {
  ProblemInstance inst = make({"0", "4", "4.5"}, "2");
  const SolveResult result = solve(inst, {.want_trace = false, .debug_audit = true});
  CHECK(result.configuration == Configuration{0, 25, 45});  // scale 10
  CHECK(result.total_cost == Int128{15});
  CHECK(result.counters.merges == 0);
  CHECK(result.counters.shifts == 1);
  CHECK(exhaustive_anchored_solve(inst).best_cost == Int128{15});
}

TEST_CASE("degenerate sizes pass through") {
  CHECK(solve(make({}, "1")).configuration.empty());
  ProblemInstance one = make({"42"}, "5");
  const SolveResult result = solve(one);
  CHECK(result.configuration == one.initial);
  CHECK(result.total_cost == 0);
}

TEST_CASE("placement cases behave per the step contract") {
  // scale 10: initial [0, 20, 30, 35], delta 20
  ProblemInstance inst = make({"0", "2", "3", "3.5"}, "2");
  SolverState state(inst);

  CHECK_FALSE(state.place_next());  // first point: fresh chain
  REQUIRE(state.chains().size() == 1);
  CHECK(state.chains()[0].stationary_count == 1);

  CHECK_FALSE(state.place_next());  // lands exactly delta after the tail
  REQUIRE(state.chains().size() == 1);
  CHECK(state.chains()[0].last == 1);
  CHECK(state.chains()[0].stationary_count == 2);
  CHECK(state.chains()[0].right_count() == 0);

  CHECK_FALSE(state.place_next());  // appended right, but no count tie yet
  CHECK(state.chains()[0].right_count() == 1);

  CHECK(state.place_next());  // second appended member ties the counts
  CHECK(state.chains()[0].right_count() == 2);
  state.rebalance_last();
  CHECK(state.done());
  // pulled left by the smallest slack (1.0); the third point lands on its spot
  CHECK(state.positions() == Configuration{-10, 10, 30, 50});
  CHECK(pav_isotonic_solve(inst).best_cost == Int128{35});
}

TEST_CASE("appended point left of the tail still lands at tail plus delta") {
  // scale 10: initial [0, 10, 20, 21], delta 30; after three points the tail
  // sits at 4.0, right of the fourth input at 2.1
  ProblemInstance inst = make({"0", "1", "2", "2.1"}, "3");
  SolverState state(inst);
  state.step();
  state.step();
  state.step();
  CHECK(state.positions() == Configuration{-20, 10, 40});
  REQUIRE(inst.initial[3] < state.positions().back());

  CHECK(state.place_next());
  CHECK(state.positions().back() == Int128{70});  // tail 40 plus delta 30
  state.rebalance_last();
  CHECK(state.positions() == Configuration{-40, -10, 20, 50});
  CHECK(pav_isotonic_solve(inst).best_cost == Int128{89});
  CHECK(total_cost(inst, state.positions()) == Int128{89});
}

TEST_CASE("shift_chain pops members that land on their spot") {
  Chain c;
  c.first = 0;
  c.last = 2;
  c.base = 0;
  c.stationary_count = 0;
  c.left_count = 1;
  c.right_heap.insert(1);
  c.right_heap.insert(3);

  SUBCASE("exactly the smallest slack: one pop") {
    shift_chain(c, 1);
    CHECK(c.base == Int128{-1});
    CHECK(c.stationary_count == 1);
    CHECK(c.right_heap.size() == 1);
  }
  SUBCASE("amount outside (0, min slack] is an internal error") {
    CHECK_THROWS_AS(shift_chain(c, 2), std::logic_error);
    CHECK_THROWS_AS(shift_chain(c, 0), std::logic_error);
  }
}

TEST_CASE("shift_chain pops duplicated minimum slacks together") {
  Chain c;
  c.base = 0;
  c.left_count = 2;
  c.right_heap.insert(2);
  c.right_heap.insert(2);
  c.right_heap.insert(5);
  shift_chain(c, 2);
  CHECK(c.stationary_count == 2);
  CHECK(c.right_heap.size() == 1);
  CHECK(c.right_heap.find_min() == Int128{5});
}

TEST_CASE("shift below every slack leaves no stationary members") {
  Chain c;
  c.base = 0;
  c.stationary_count = 3;
  c.right_heap.insert(4);
  shift_chain(c, 2);
  CHECK(c.stationary_count == 0);
  CHECK(c.left_count == 3);
  CHECK(c.right_heap.size() == 1);
}

TEST_CASE("merge_chains joins adjacent equal-base chains") {
  Chain left;
  left.first = 0;
  left.last = 1;
  left.base = 5;
  left.stationary_count = 1;
  left.left_count = 1;
  left.total_left_shift = 7;

  Chain right;
  right.first = 2;
  right.last = 3;
  right.base = 5;
  right.left_count = 1;
  right.right_heap.insert(-2);
  right.total_left_shift = 3;

  Chain merged = merge_chains(std::move(left), std::move(right));
  CHECK(merged.first == 0);
  CHECK(merged.last == 3);
  CHECK(merged.left_count == 2);
  CHECK(merged.stationary_count == 1);
  CHECK(merged.right_count() == 1);
  CHECK(merged.total_left_shift == Int128{7});  // keeps the left chain's tally
}

TEST_CASE("merge_chains validates adjacency and bases") {
  Chain a, b;
  a.first = a.last = 0;
  b.first = b.last = 2;
  CHECK_THROWS_AS(merge_chains(std::move(a), std::move(b)), std::logic_error);
  Chain c, d;
  c.first = c.last = 0;
  d.first = d.last = 1;
  c.base = 0;
  d.base = 1;
  CHECK_THROWS_AS(merge_chains(std::move(c), std::move(d)), std::logic_error);
}

TEST_CASE("tied slack and room take the merge branch, pops after the merge") {
  // alpha == beta == 1: the chains merge and the appended point pops to
  // stationary inside the merged chain
  ProblemInstance inst = make({"0", "3", "4"}, "2");
  const SolveResult result = solve(inst, {.want_trace = false, .debug_audit = true});
  CHECK(result.configuration == Configuration{0, 2, 4});
  CHECK(result.total_cost == Int128{1});
  CHECK(result.counters.merges == 1);

  const AuditReport report = audit(inst, result.configuration);
  REQUIRE(report.chains.size() == 1);
  CHECK(report.chains[0].stationary_count == 2);  // both ends anchored

  const OracleResult oracle = exhaustive_anchored_solve(inst);
  CHECK(oracle.best_cost == Int128{1});
  // optima: [0,2,4] and [0,3,5]; the sweep returns the pointwise smallest
  REQUIRE(oracle.all_optima.size() == 2);
  for (const Configuration& optimum : oracle.all_optima) {
    for (std::size_t i = 0; i < optimum.size(); ++i) CHECK(result.configuration[i] <= optimum[i]);
  }
}

TEST_CASE("duplicate inputs are separated without error") {
  ProblemInstance inst = make({"5", "5"}, "2");
  const SolveResult result = solve(inst, {.want_trace = false, .debug_audit = true});
  CHECK(result.configuration == Configuration{3, 5});
  CHECK(result.total_cost == Int128{2});
  CHECK(pav_isotonic_solve(inst).best_cost == Int128{2});
}

TEST_CASE("debug audit holds on random instances from every family") {
  const Family families[] = {Family::Uniform, Family::Clustered, Family::AdversarialSingleChain,
                             Family::NearIndependent};
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GenSpec spec;
    spec.seed = child_seed(99, seed);
    spec.n = 1 + static_cast<std::size_t>(seed * 7 % 120);
    spec.family = families[seed % 4];
    spec.delta = "0.25";
    spec.coord_range = "40";
    const ProblemInstance inst = gen_instance(spec);
    const SolveResult result = solve(inst, {.want_trace = false, .debug_audit = true});
    CHECK(audit(inst, result.configuration).all_ok());
  }
}

TEST_CASE("traces replay to the exact final configuration") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GenSpec spec;
    spec.seed = child_seed(7, seed);
    spec.n = static_cast<std::size_t>(seed * 11 % 90);
    spec.family = seed % 2 == 0 ? Family::Uniform : Family::AdversarialSingleChain;
    spec.delta = "3";
    spec.coord_range = "100";
    const ProblemInstance inst = gen_instance(spec);
    const SolveResult result = solve(inst, {.want_trace = true, .debug_audit = false});

    const std::string jsonl = trace_to_jsonl(result.trace, inst.frac_digits);
    const std::vector<TraceEvent> parsed = trace_from_jsonl(jsonl, inst.frac_digits);
    CHECK(replay_trace(inst, parsed) == result.configuration);
  }
}

TEST_CASE("the recomputed cost matches an accumulated displacement sum") {
  GenSpec spec;
  spec.seed = 4242;
  spec.n = 500;
  spec.family = Family::Clustered;
  spec.delta = "1.5";
  spec.coord_range = "200";
  const ProblemInstance inst = gen_instance(spec);
  const SolveResult result = solve(inst);
  CHECK(result.total_cost == total_cost(inst, result.configuration));
}
