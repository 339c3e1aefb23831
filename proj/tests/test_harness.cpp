#include <doctest.h>

#include <string>

#include "verify.hpp"

using namespace disperse;

TEST_CASE("generation is deterministic in the spec") {
  GenSpec spec;
  spec.seed = 77;
  spec.n = 50;
  spec.family = Family::Uniform;
  spec.delta = "2";
  spec.coord_range = "120";
  const ProblemInstance a = gen_instance(spec);
  const ProblemInstance b = gen_instance(spec);
  CHECK(a.initial == b.initial);
  CHECK(a.perm == b.perm);
  CHECK(a.delta == b.delta);
}

TEST_CASE("adversarial family keeps every gap under delta") {
  GenSpec spec;
  spec.seed = 5;
  spec.n = 4;
  spec.family = Family::AdversarialSingleChain;
  spec.delta = "2";
  spec.coord_range = "100";
  const ProblemInstance inst = gen_instance(spec);
  for (std::size_t i = 1; i < inst.size(); ++i) {
    CHECK(inst.initial[i] - inst.initial[i - 1] < inst.delta);
    CHECK(inst.initial[i] > inst.initial[i - 1]);  // delta of 2 units allows strict growth
  }
}

TEST_CASE("clustered family stays within its spread") {
  GenSpec spec;
  spec.seed = 9;
  spec.n = 0;
  spec.family = Family::Clustered;
  spec.delta = "1";
  spec.coord_range = "50";
  CHECK(gen_instance(spec).size() == 0);  // empty instance is fine
  spec.n = 30;
  CHECK(gen_instance(spec).size() == 30);
}

TEST_CASE("generator validates its spec") {
  GenSpec spec;
  spec.seed = 1;
  spec.n = 3;
  spec.delta = "0";
  spec.coord_range = "10";
  CHECK_THROWS_AS(gen_instance(spec), std::invalid_argument);
  spec.delta = "1";
  spec.coord_range = "-4";
  CHECK_THROWS_AS(gen_instance(spec), std::invalid_argument);
  CHECK_THROWS_AS(family_from_name("bogus"), std::invalid_argument);
}

TEST_CASE("family names round trip") {
  for (Family f : {Family::Uniform, Family::Clustered, Family::AdversarialSingleChain, Family::NearIndependent}) {
    CHECK(family_from_name(family_name(f)) == f);
  }
}

TEST_CASE("verify passes clean batches and honours the size precondition") {
  VerifyOptions options;
  options.oracle = OracleKind::Exhaustive;
  options.count = 60;
  options.nmin = 1;
  options.nmax = 9;
  options.seed = 42;
  const VerifyReport report = run_verify(options);
  CHECK(report.checked == 60);
  CHECK(report.ok());

  options.nmax = 20;
  CHECK_THROWS_AS(run_verify(options), std::invalid_argument);
}

TEST_CASE("verify supports every oracle") {
  VerifyOptions options;
  options.count = 12;
  options.nmin = 1;
  options.nmax = 40;
  options.seed = 43;
  options.oracle = OracleKind::Pav;
  CHECK(run_verify(options).ok());
  options.oracle = OracleKind::Naive;
  CHECK(run_verify(options).ok());
}

TEST_CASE("empty batch produces an empty report") {
  VerifyOptions options;
  options.count = 0;
  const VerifyReport report = run_verify(options);
  CHECK(report.checked == 0);
  CHECK(report.ok());
  const std::string json = verify_report_json(options, report);
  CHECK(json.find("\"ok\":true") != std::string::npos);
}

TEST_CASE("bench rows satisfy the heap budget and stay monotone") {
  BenchOptions options;
  options.sizes = {1, 100, 1000, 5000};
  options.families = {Family::Uniform, Family::AdversarialSingleChain};
  options.seed = 11;
  const BenchReport report = run_bench(options);
  REQUIRE(report.rows.size() == 8);
  CHECK(report.all_within_bound());

  // n = 1 never touches the heap
  CHECK(report.rows[0].counters.heap_ops <= 1);

  // heap work grows with n within a family
  for (std::size_t k = 1; k < 4; ++k) CHECK(report.rows[k].counters.heap_ops >= report.rows[k - 1].counters.heap_ops);
  for (std::size_t k = 5; k < 8; ++k) CHECK(report.rows[k].counters.heap_ops >= report.rows[k - 1].counters.heap_ops);

  const std::string json = bench_report_json(options, report);
  CHECK(json.find("\"rows\"") != std::string::npos);
}

TEST_CASE("naive timing column appears on request") {
  BenchOptions options;
  options.sizes = {200};
  options.families = {Family::AdversarialSingleChain};
  options.include_naive = true;
  const BenchReport report = run_bench(options);
  REQUIRE(report.rows.size() == 1);
  CHECK(report.rows[0].wall_us_naive.has_value());
}
