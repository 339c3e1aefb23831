#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "generate.hpp"
#include "solver.hpp"

namespace disperse {

enum class OracleKind { Exhaustive, Pav, Naive };

const char* oracle_name(OracleKind kind);
OracleKind oracle_from_name(std::string_view name);  // throws std::invalid_argument

struct VerifyOptions {
  OracleKind oracle = OracleKind::Exhaustive;
  std::uint64_t count = 100;
  std::size_t nmin = 1;
  std::size_t nmax = 12;
  std::uint64_t seed = 1729;
};

struct VerifyMismatch {
  GenSpec spec;  // regenerates the offending instance bit-exactly
  std::string detail;
};

struct VerifyReport {
  std::uint64_t checked = 0;
  std::vector<VerifyMismatch> mismatches;

  bool ok() const { return mismatches.empty(); }
};

// Per instance: solve, audit every output invariant, compare against the
// chosen oracle (exhaustive also checks that the solver result is
// coordinatewise minimal over all anchored optima; naive requires the
// identical configuration). Families rotate per item in a fixed order;
// the separation and coordinate range vary per item.
VerifyReport run_verify(const VerifyOptions& options);

std::string verify_report_json(const VerifyOptions& options, const VerifyReport& report);

struct BenchOptions {
  std::vector<std::size_t> sizes;
  std::vector<Family> families;
  std::uint64_t seed = 1729;
  bool include_naive = false;
};

struct BenchRow {
  Family family = Family::Uniform;
  std::size_t n = 0;
  std::uint64_t wall_us = 0;  // median of 3 runs
  std::optional<std::uint64_t> wall_us_naive;
  SolveCounters counters;
  std::uint64_t heap_ops_bound = 0;  // floor(4 * n * log2(n + 2))
  bool within_bound = false;
};

struct BenchReport {
  std::vector<BenchRow> rows;

  bool all_within_bound() const;
};

// Wall times are advisory; the binding output is the exact operation
// counters against the 4 * n * log2(n + 2) budget.
BenchReport run_bench(const BenchOptions& options);

std::string bench_report_json(const BenchOptions& options, const BenchReport& report);

double heap_ops_budget(std::size_t n);

}  // namespace disperse
