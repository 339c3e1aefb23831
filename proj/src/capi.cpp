#include "disperse/disperse.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "chains.hpp"
#include "generate.hpp"
#include "instance.hpp"
#include "oracles.hpp"
#include "solver.hpp"
#include "trace_io.hpp"
#include "verify.hpp"

struct dsp_instance {
  disperse::ProblemInstance inst;
  std::string delta_text;
};

struct dsp_result {
  std::string total_cost;
  std::vector<std::string> positions;      // original input order
  std::vector<std::string> displacements;  // original input order
  disperse::SolveCounters counters;
  std::string trace_jsonl;
};

namespace {

thread_local std::string t_last_error;

dsp_status fail(dsp_status status, const std::string& message) {
  t_last_error = message;
  return status;
}

// Exceptions from the core map onto the status table.
template <typename F>
dsp_status guarded(F&& body) {
  try {
    return body();
  } catch (const disperse::ParseError& e) {
    return fail(DSP_PARSE, e.what());
  } catch (const disperse::OverflowError& e) {
    return fail(DSP_OVERFLOW, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(DSP_USAGE, e.what());
  } catch (const std::exception& e) {
    return fail(DSP_INTERNAL, e.what());
  }
}

char* copy_text(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

dsp_instance* wrap_instance(disperse::ProblemInstance inst) {
  auto* handle = new dsp_instance;
  handle->delta_text = disperse::format_scaled(inst.delta, inst.frac_digits);
  handle->inst = std::move(inst);
  return handle;
}

dsp_result* wrap_result(const disperse::ProblemInstance& inst, const disperse::Configuration& cfg,
                        disperse::Int128 cost, const disperse::SolveCounters& counters, std::string trace_jsonl) {
  auto* handle = new dsp_result;
  handle->total_cost = disperse::format_scaled(cost, inst.frac_digits);
  handle->positions.resize(inst.size());
  handle->displacements.resize(inst.size());
  for (std::size_t i = 0; i < inst.size(); ++i) {
    const std::size_t original = inst.perm[i];
    handle->positions[original] = disperse::format_scaled(cfg[i], inst.frac_digits);
    handle->displacements[original] =
        disperse::format_scaled(disperse::checked_sub(cfg[i], inst.initial[i]), inst.frac_digits);
  }
  handle->counters = counters;
  handle->trace_jsonl = std::move(trace_jsonl);
  return handle;
}

std::vector<std::string> tokenize_instance_text(const std::string& text) {
  std::vector<std::string> tokens;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::istringstream words(line);
    std::string word;
    while (words >> word) tokens.push_back(word);
  }
  return tokens;
}

bool all_true(const std::vector<bool>& flags) {
  for (bool f : flags)
    if (!f) return false;
  return true;
}

}  // namespace

extern "C" {

const char* dsp_version(void) { return "1.0.0"; }

const char* dsp_last_error(void) { return t_last_error.c_str(); }

void dsp_free_text(char* text) { std::free(text); }

dsp_status dsp_instance_parse_text(const char* text, dsp_instance** out) {
  return guarded([&]() -> dsp_status {
    if (!text || !out) return fail(DSP_USAGE, "null argument");
    std::vector<std::string> tokens = tokenize_instance_text(text);
    if (tokens.empty()) return fail(DSP_PARSE, "instance text holds no separation value");
    const std::string delta = tokens.front();
    tokens.erase(tokens.begin());
    *out = wrap_instance(disperse::normalize_instance(tokens, delta));
    return DSP_OK;
  });
}

dsp_status dsp_instance_from_strings(const char* delta, const char* const* positions, size_t count,
                                     dsp_instance** out) {
  return guarded([&]() -> dsp_status {
    if (!delta || !out || (count > 0 && !positions)) return fail(DSP_USAGE, "null argument");
    std::vector<std::string> raw(positions, positions + count);
    *out = wrap_instance(disperse::normalize_instance(raw, delta));
    return DSP_OK;
  });
}

dsp_status dsp_instance_generate(uint64_t seed, size_t n, const char* range, const char* delta,
                                 const char* family, dsp_instance** out) {
  return guarded([&]() -> dsp_status {
    if (!range || !delta || !family || !out) return fail(DSP_USAGE, "null argument");
    disperse::GenSpec spec;
    spec.seed = seed;
    spec.n = n;
    spec.coord_range = range;
    spec.delta = delta;
    spec.family = disperse::family_from_name(family);
    *out = wrap_instance(disperse::gen_instance(spec));
    return DSP_OK;
  });
}

void dsp_instance_free(dsp_instance* inst) { delete inst; }

size_t dsp_instance_size(const dsp_instance* inst) { return inst->inst.size(); }

const char* dsp_instance_delta(const dsp_instance* inst) { return inst->delta_text.c_str(); }

dsp_status dsp_instance_to_text(const dsp_instance* inst, char** out_text) {
  return guarded([&]() -> dsp_status {
    if (!inst || !out_text) return fail(DSP_USAGE, "null argument");
    *out_text = copy_text(disperse::instance_to_text(inst->inst));
    return DSP_OK;
  });
}

dsp_status dsp_solve(const dsp_instance* inst, unsigned flags, dsp_result** out) {
  return guarded([&]() -> dsp_status {
    if (!inst || !out) return fail(DSP_USAGE, "null argument");
    disperse::SolveOptions options;
    options.want_trace = (flags & DSP_SOLVE_TRACE) != 0;
    options.debug_audit = (flags & DSP_SOLVE_DEBUG_AUDIT) != 0;
    const disperse::SolveResult solved = disperse::solve(inst->inst, options);
    std::string trace;
    if (options.want_trace) trace = disperse::trace_to_jsonl(solved.trace, inst->inst.frac_digits);
    *out = wrap_result(inst->inst, solved.configuration, solved.total_cost, solved.counters, std::move(trace));
    return DSP_OK;
  });
}

void dsp_result_free(dsp_result* result) { delete result; }

size_t dsp_result_size(const dsp_result* result) { return result->positions.size(); }

const char* dsp_result_total_cost(const dsp_result* result) { return result->total_cost.c_str(); }

const char* dsp_result_position(const dsp_result* result, size_t input_index) {
  return result->positions.at(input_index).c_str();
}

const char* dsp_result_displacement(const dsp_result* result, size_t input_index) {
  return result->displacements.at(input_index).c_str();
}

uint64_t dsp_result_counter(const dsp_result* result, dsp_counter which) {
  switch (which) {
    case DSP_COUNTER_HEAP_OPS: return result->counters.heap_ops;
    case DSP_COUNTER_SHIFTS: return result->counters.shifts;
    case DSP_COUNTER_MERGES: return result->counters.merges;
    case DSP_COUNTER_ITERATIONS: return result->counters.iterations;
  }
  return 0;
}

const char* dsp_result_trace_jsonl(const dsp_result* result) { return result->trace_jsonl.c_str(); }

dsp_status dsp_check(const dsp_instance* inst, const dsp_result* result, char** report_json) {
  return guarded([&]() -> dsp_status {
    if (!inst || !result) return fail(DSP_USAGE, "null argument");
    const disperse::ProblemInstance& instance = inst->inst;
    if (result->positions.size() != instance.size()) return fail(DSP_USAGE, "result does not match the instance");

    // rebuild the sorted-order configuration from the result strings
    disperse::Configuration cfg(instance.size());
    for (std::size_t i = 0; i < instance.size(); ++i) {
      const disperse::Decimal d = disperse::parse_decimal(result->positions[instance.perm[i]]);
      cfg[i] = disperse::rescale(d, instance.frac_digits);
    }

    const disperse::AuditReport report = disperse::audit(instance, cfg);
    const disperse::Int128 cost = disperse::total_cost(instance, cfg);
    const disperse::OracleResult isotonic = disperse::pav_isotonic_solve(instance);
    const bool cost_match = cost == isotonic.best_cost;
    const bool ok = report.all_ok() && cost_match;

    if (report_json) {
      nlohmann::ordered_json j;
      j["independent"] = report.independent;
      j["order_preserved"] = report.order_preserved;
      j["left_move_worsens"] = all_true(report.left_move_worsens);
      j["right_move_no_gain"] = all_true(report.right_move_no_gain);
      j["prefix_left_move_worsens"] = report.prefix_left_move_worsens;
      j["stationary_per_chain"] = report.stationary_per_chain;
      j["chains"] = report.chains.size();
      j["total_cost"] = disperse::format_scaled(cost, instance.frac_digits);
      j["isotonic_cost"] = disperse::format_scaled(isotonic.best_cost, instance.frac_digits);
      j["cost_match"] = cost_match;
      j["ok"] = ok;
      *report_json = copy_text(j.dump());
    }
    if (!ok) return fail(DSP_CHECK_FAILED, "solution check failed");
    return DSP_OK;
  });
}

dsp_status dsp_replay(const dsp_instance* inst, const char* trace_jsonl, dsp_result** out) {
  return guarded([&]() -> dsp_status {
    if (!inst || !trace_jsonl || !out) return fail(DSP_USAGE, "null argument");
    const std::vector<disperse::TraceEvent> events =
        disperse::trace_from_jsonl(trace_jsonl, inst->inst.frac_digits);
    const disperse::Configuration cfg = disperse::replay_trace(inst->inst, events);
    *out = wrap_result(inst->inst, cfg, disperse::total_cost(inst->inst, cfg), disperse::SolveCounters{}, "");
    return DSP_OK;
  });
}

dsp_status dsp_verify(const char* oracle, uint64_t count, size_t nmin, size_t nmax, uint64_t seed,
                      char** report_json) {
  return guarded([&]() -> dsp_status {
    if (!oracle) return fail(DSP_USAGE, "null argument");
    disperse::VerifyOptions options;
    options.oracle = disperse::oracle_from_name(oracle);
    options.count = count;
    options.nmin = nmin;
    options.nmax = nmax;
    options.seed = seed;
    const disperse::VerifyReport report = disperse::run_verify(options);
    if (report_json) *report_json = copy_text(disperse::verify_report_json(options, report));
    if (!report.ok()) return fail(DSP_CHECK_FAILED, "verification found mismatches");
    return DSP_OK;
  });
}

dsp_status dsp_bench(const char* sizes, const char* families, uint64_t seed, int include_naive,
                     char** report_json) {
  return guarded([&]() -> dsp_status {
    if (!sizes || !families) return fail(DSP_USAGE, "null argument");
    disperse::BenchOptions options;
    options.seed = seed;
    options.include_naive = include_naive != 0;

    const auto split = [](const std::string& text) {
      std::vector<std::string> parts;
      std::string current;
      for (char c : text + ",") {
        if (c == ',') {
          if (!current.empty()) parts.push_back(current);
          current.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
          current.push_back(c);
        }
      }
      return parts;
    };
    for (const std::string& part : split(sizes)) {
      std::size_t consumed = 0;
      unsigned long long value = 0;
      try {
        value = std::stoull(part, &consumed);
      } catch (const std::exception&) {
        return fail(DSP_USAGE, "bad size '" + part + "'");
      }
      if (consumed != part.size()) return fail(DSP_USAGE, "bad size '" + part + "'");
      options.sizes.push_back(static_cast<std::size_t>(value));
    }
    for (const std::string& part : split(families)) options.families.push_back(disperse::family_from_name(part));
    if (options.sizes.empty() || options.families.empty()) return fail(DSP_USAGE, "sizes and families must be non-empty");

    const disperse::BenchReport report = disperse::run_bench(options);
    if (report_json) *report_json = copy_text(disperse::bench_report_json(options, report));
    if (!report.all_within_bound()) return fail(DSP_CHECK_FAILED, "heap operation budget exceeded");
    return DSP_OK;
  });
}

}  // extern "C"
