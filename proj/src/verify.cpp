#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <json.hpp>
#include <stdexcept>

#include "chains.hpp"
#include "oracles.hpp"

namespace disperse {

const char* oracle_name(OracleKind kind) {
  switch (kind) {
    case OracleKind::Exhaustive: return "exhaustive";
    case OracleKind::Pav: return "pav";
    case OracleKind::Naive: return "naive";
  }
  throw std::logic_error("oracle_name: unknown oracle");
}

OracleKind oracle_from_name(std::string_view name) {
  if (name == "exhaustive") return OracleKind::Exhaustive;
  if (name == "pav") return OracleKind::Pav;
  if (name == "naive") return OracleKind::Naive;
  throw std::invalid_argument("unknown oracle '" + std::string(name) + "'");
}

namespace {

constexpr Family kFamilyRotation[] = {Family::Uniform, Family::Clustered, Family::AdversarialSingleChain,
                                      Family::NearIndependent};

std::string audit_failures(const AuditReport& report) {
  std::string out;
  auto add = [&](const char* what) {
    if (!out.empty()) out += ", ";
    out += what;
  };
  if (!report.independent) add("independent");
  if (!report.order_preserved) add("order_preserved");
  if (std::find(report.left_move_worsens.begin(), report.left_move_worsens.end(), false) !=
      report.left_move_worsens.end())
    add("left_move_worsens");
  if (std::find(report.right_move_no_gain.begin(), report.right_move_no_gain.end(), false) !=
      report.right_move_no_gain.end())
    add("right_move_no_gain");
  if (!report.prefix_left_move_worsens) add("prefix_left_move_worsens");
  if (!report.stationary_per_chain) add("stationary_per_chain");
  return out;
}

std::optional<std::string> check_instance(const GenSpec& spec, OracleKind oracle) {
  const ProblemInstance inst = gen_instance(spec);
  const SolveResult solved = solve(inst);

  const AuditReport report = audit(inst, solved.configuration);
  if (!report.all_ok()) return "audit failed: " + audit_failures(report);

  switch (oracle) {
    case OracleKind::Exhaustive: {
      const OracleResult oracle_result = exhaustive_anchored_solve(inst);
      if (oracle_result.best_cost != solved.total_cost) {
        return "cost " + format_scaled(solved.total_cost, inst.frac_digits) + " != exhaustive " +
               format_scaled(oracle_result.best_cost, inst.frac_digits);
      }
      for (const Configuration& optimum : oracle_result.all_optima) {
        for (std::size_t i = 0; i < optimum.size(); ++i) {
          if (solved.configuration[i] > optimum[i]) return "solver position exceeds an optimum (not pointwise minimal)";
        }
      }
      break;
    }
    case OracleKind::Pav: {
      const OracleResult oracle_result = pav_isotonic_solve(inst);
      if (oracle_result.best_cost != solved.total_cost) {
        return "cost " + format_scaled(solved.total_cost, inst.frac_digits) + " != isotonic " +
               format_scaled(oracle_result.best_cost, inst.frac_digits);
      }
      if (total_cost(inst, oracle_result.witness) != oracle_result.best_cost) return "isotonic witness cost mismatch";
      break;
    }
    case OracleKind::Naive: {
      const OracleResult oracle_result = naive_quadratic_solve(inst);
      if (oracle_result.witness != solved.configuration) return "naive sweep produced different coordinates";
      if (oracle_result.best_cost != solved.total_cost) return "naive sweep produced a different cost";
      break;
    }
  }
  return std::nullopt;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.nmin > options.nmax) throw std::invalid_argument("verify: nmin exceeds nmax");
  if (options.oracle == OracleKind::Exhaustive && options.nmax > 14)
    throw std::invalid_argument("verify: the exhaustive oracle requires nmax <= 14");

  VerifyReport report;
  for (std::uint64_t item = 0; item < options.count; ++item) {
    SplitMix64 params(child_seed(options.seed, 2 * item));

    GenSpec spec;
    spec.seed = child_seed(options.seed, 2 * item + 1);
    spec.n = options.nmin + static_cast<std::size_t>(params.below(options.nmax - options.nmin + 1));
    spec.family = kFamilyRotation[item % 4];
    const int frac = static_cast<int>(params.below(3));
    const std::uint64_t delta_units = 1 + params.below(50);
    spec.delta = format_scaled(static_cast<Int128>(delta_units), frac);
    const std::uint64_t range_units = delta_units * (1 + params.below(2 * spec.n + 2));
    spec.coord_range = format_scaled(static_cast<Int128>(range_units), frac);

    if (auto detail = check_instance(spec, options.oracle)) {
      report.mismatches.push_back(VerifyMismatch{spec, *detail});
    }
    ++report.checked;
  }
  return report;
}

std::string verify_report_json(const VerifyOptions& options, const VerifyReport& report) {
  nlohmann::ordered_json j;
  j["oracle"] = oracle_name(options.oracle);
  j["count"] = options.count;
  j["nmin"] = options.nmin;
  j["nmax"] = options.nmax;
  j["seed"] = options.seed;
  j["checked"] = report.checked;
  j["mismatches"] = nlohmann::json::array();
  for (const VerifyMismatch& m : report.mismatches) {
    nlohmann::ordered_json item;
    item["seed"] = m.spec.seed;
    item["n"] = m.spec.n;
    item["range"] = m.spec.coord_range;
    item["delta"] = m.spec.delta;
    item["family"] = family_name(m.spec.family);
    item["detail"] = m.detail;
    j["mismatches"].push_back(item);
  }
  j["ok"] = report.ok();
  return j.dump();
}

double heap_ops_budget(std::size_t n) { return 4.0 * static_cast<double>(n) * std::log2(static_cast<double>(n) + 2.0); }

bool BenchReport::all_within_bound() const {
  return std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) { return r.within_bound; });
}

namespace {

std::uint64_t median_of_three(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  if (a > b) std::swap(a, b);
  if (b > c) std::swap(b, c);
  return std::max(a, b);
}

template <typename F>
std::uint64_t timed_median_us(F&& run) {
  std::uint64_t samples[3];
  for (std::uint64_t& s : samples) {
    const auto start = std::chrono::steady_clock::now();
    run();
    const auto stop = std::chrono::steady_clock::now();
    s = static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count());
  }
  return median_of_three(samples[0], samples[1], samples[2]);
}

}  // namespace

BenchReport run_bench(const BenchOptions& options) {
  BenchReport report;
  std::uint64_t cell = 0;
  for (Family family : options.families) {
    for (std::size_t n : options.sizes) {
      GenSpec spec;
      spec.seed = child_seed(options.seed, cell++);
      spec.n = n;
      spec.family = family;
      spec.delta = "10";
      spec.coord_range = format_scaled(checked_mul(Int128{10}, static_cast<Int128>(n) + 1), 0);
      const ProblemInstance inst = gen_instance(spec);

      BenchRow row;
      row.family = family;
      row.n = n;
      SolveResult solved;
      row.wall_us = timed_median_us([&] { solved = solve(inst); });
      row.counters = solved.counters;
      row.heap_ops_bound = static_cast<std::uint64_t>(heap_ops_budget(n));
      row.within_bound = static_cast<double>(solved.counters.heap_ops) <= heap_ops_budget(n);
      if (options.include_naive) {
        row.wall_us_naive = timed_median_us([&] { (void)naive_quadratic_solve(inst); });
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

std::string bench_report_json(const BenchOptions& options, const BenchReport& report) {
  nlohmann::ordered_json j;
  j["seed"] = options.seed;
  j["rows"] = nlohmann::json::array();
  for (const BenchRow& row : report.rows) {
    nlohmann::ordered_json item;
    item["family"] = family_name(row.family);
    item["n"] = row.n;
    item["wall_us"] = row.wall_us;
    if (row.wall_us_naive) {
      item["wall_us_naive"] = *row.wall_us_naive;
    } else {
      item["wall_us_naive"] = nullptr;
    }
    item["heap_ops"] = row.counters.heap_ops;
    item["shifts"] = row.counters.shifts;
    item["merges"] = row.counters.merges;
    item["heap_ops_bound"] = row.heap_ops_bound;
    item["within_bound"] = row.within_bound;
    j["rows"].push_back(item);
  }
  j["ok"] = report.all_within_bound();
  return j.dump();
}

}  // namespace disperse
