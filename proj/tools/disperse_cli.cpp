// disperse command line front end. Everything goes through the C API in
// disperse/disperse.h; this translation unit only shuffles text around.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "disperse/disperse.h"

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

int fail(dsp_status status) {
  std::cerr << "error: " << dsp_last_error() << "\n";
  return static_cast<int>(status);
}

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return static_cast<int>(DSP_USAGE);
}

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    out = buffer.str();
    return true;
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) return false;
  std::ostringstream buffer;
  buffer << file.rdbuf();
  out = buffer.str();
  return true;
}

using InstancePtr = std::unique_ptr<dsp_instance, decltype(&dsp_instance_free)>;
using ResultPtr = std::unique_ptr<dsp_result, decltype(&dsp_result_free)>;

// --format plain|csv|json selects how the input text is interpreted; csv
// carries no separation, which then must come from --delta.
int load_instance(const std::string& path, const std::string& format, const std::string& delta_flag,
                  InstancePtr& out) {
  std::string text;
  if (!read_input(path, text)) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return static_cast<int>(DSP_PARSE);
  }

  dsp_instance* raw = nullptr;
  if (format == "plain") {
    if (!delta_flag.empty()) return fail_usage("--delta only applies to --format csv");
    const dsp_status status = dsp_instance_parse_text(text.c_str(), &raw);
    if (status != DSP_OK) return fail(status);
  } else if (format == "csv") {
    if (delta_flag.empty()) return fail_usage("--format csv requires --delta");
    std::vector<std::string> positions;
    std::istringstream lines(text);
    std::string line;
    bool saw_header = false;
    while (std::getline(lines, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
      std::size_t start = line.find_first_not_of(" \t");
      if (start == std::string::npos) continue;
      std::string token = line.substr(start);
      if (!saw_header) {
        if (token != "position") {
          std::cerr << "error: csv input must start with a 'position' header\n";
          return static_cast<int>(DSP_PARSE);
        }
        saw_header = true;
        continue;
      }
      positions.push_back(token);
    }
    if (!saw_header) {
      std::cerr << "error: csv input must start with a 'position' header\n";
      return static_cast<int>(DSP_PARSE);
    }
    std::vector<const char*> pointers;
    pointers.reserve(positions.size());
    for (const std::string& p : positions) pointers.push_back(p.c_str());
    const dsp_status status =
        dsp_instance_from_strings(delta_flag.c_str(), pointers.data(), pointers.size(), &raw);
    if (status != DSP_OK) return fail(status);
  } else {  // json
    if (!delta_flag.empty()) return fail_usage("--delta only applies to --format csv");
    nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("delta") || !j.contains("points")) {
      std::cerr << "error: json input must be {\"delta\": \"...\", \"points\": [\"...\"]}\n";
      return static_cast<int>(DSP_PARSE);
    }
    if (!j["delta"].is_string() || !j["points"].is_array()) {
      std::cerr << "error: json input carries numbers as decimal strings\n";
      return static_cast<int>(DSP_PARSE);
    }
    std::vector<std::string> positions;
    for (const auto& p : j["points"]) {
      if (!p.is_string()) {
        std::cerr << "error: json input carries numbers as decimal strings\n";
        return static_cast<int>(DSP_PARSE);
      }
      positions.push_back(p.get<std::string>());
    }
    const std::string delta = j["delta"].get<std::string>();
    std::vector<const char*> pointers;
    pointers.reserve(positions.size());
    for (const std::string& p : positions) pointers.push_back(p.c_str());
    const dsp_status status = dsp_instance_from_strings(delta.c_str(), pointers.data(), pointers.size(), &raw);
    if (status != DSP_OK) return fail(status);
  }
  out = InstancePtr(raw, &dsp_instance_free);
  return 0;
}

int run_solve(const std::string& path, const std::string& format, const std::string& delta_flag,
              const std::string& out_format, const std::string& trace_path, bool check) {
  InstancePtr inst(nullptr, &dsp_instance_free);
  if (int code = load_instance(path, format, delta_flag, inst)) return code;

  dsp_result* raw = nullptr;
  const unsigned flags = trace_path.empty() ? 0u : DSP_SOLVE_TRACE;
  if (dsp_status status = dsp_solve(inst.get(), flags, &raw); status != DSP_OK) return fail(status);
  ResultPtr result(raw, &dsp_result_free);

  if (!trace_path.empty()) {
    std::ofstream file(trace_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write '" << trace_path << "'\n";
      return static_cast<int>(DSP_PARSE);
    }
    file << dsp_result_trace_jsonl(result.get());
  }

  if (check) {
    char* report = nullptr;
    const dsp_status status = dsp_check(inst.get(), result.get(), &report);
    if (status != DSP_OK) {
      if (report) std::cerr << report << "\n";
      dsp_free_text(report);
      return fail(status);
    }
    dsp_free_text(report);
  }

  const std::size_t n = dsp_result_size(result.get());
  if (out_format == "json") {
    nlohmann::ordered_json j;
    j["delta"] = dsp_instance_delta(inst.get());
    j["total_cost"] = dsp_result_total_cost(result.get());
    j["positions"] = nlohmann::json::array();
    j["displacements"] = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
      j["positions"].push_back(dsp_result_position(result.get(), i));
      j["displacements"].push_back(dsp_result_displacement(result.get(), i));
    }
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "delta " << dsp_instance_delta(inst.get()) << "\n";
    std::cout << "total_cost " << dsp_result_total_cost(result.get()) << "\n";
    std::cout << "positions";
    for (std::size_t i = 0; i < n; ++i) std::cout << ' ' << dsp_result_position(result.get(), i);
    std::cout << "\ndisplacements";
    for (std::size_t i = 0; i < n; ++i) std::cout << ' ' << dsp_result_displacement(result.get(), i);
    std::cout << "\n";
  }
  return 0;
}

void print_aligned(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::cout << row[c];
      if (c + 1 < row.size()) std::cout << std::string(widths[c] - row[c].size() + 2, ' ');
    }
    std::cout << "\n";
  }
}

int run_verify_cmd(const std::string& oracle, std::uint64_t count, std::size_t nmin, std::size_t nmax,
                   std::uint64_t seed, const std::string& out_format) {
  char* report_raw = nullptr;
  const dsp_status status = dsp_verify(oracle.c_str(), count, nmin, nmax, seed, &report_raw);
  if (status != DSP_OK && status != DSP_CHECK_FAILED) return fail(status);
  std::unique_ptr<char, decltype(&dsp_free_text)> report(report_raw, &dsp_free_text);

  if (out_format == "json") {
    std::cout << report.get() << "\n";
  } else {
    const nlohmann::json j = nlohmann::json::parse(report.get());
    std::cout << "oracle=" << j["oracle"].get<std::string>() << " checked=" << j["checked"]
              << " mismatches=" << j["mismatches"].size() << " -> " << (j["ok"].get<bool>() ? "ok" : "FAILED")
              << "\n";
    if (!j["mismatches"].empty()) {
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"seed", "n", "family", "delta", "range", "detail"});
      for (const auto& m : j["mismatches"]) {
        rows.push_back({m["seed"].dump(), m["n"].dump(), m["family"].get<std::string>(),
                        m["delta"].get<std::string>(), m["range"].get<std::string>(),
                        m["detail"].get<std::string>()});
      }
      print_aligned(rows);
    }
  }
  return static_cast<int>(status);
}

int run_bench_cmd(const std::string& sizes, const std::string& families, std::uint64_t seed, bool include_naive,
                  const std::string& out_format) {
  char* report_raw = nullptr;
  const dsp_status status = dsp_bench(sizes.c_str(), families.c_str(), seed, include_naive ? 1 : 0, &report_raw);
  if (status != DSP_OK && status != DSP_CHECK_FAILED) return fail(status);
  std::unique_ptr<char, decltype(&dsp_free_text)> report(report_raw, &dsp_free_text);

  if (out_format == "json") {
    std::cout << report.get() << "\n";
  } else {
    const nlohmann::json j = nlohmann::json::parse(report.get());
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"family", "n", "wall_us", "wall_us_naive", "heap_ops", "heap_ops_bound", "shifts", "merges",
                    "within_bound"});
    for (const auto& r : j["rows"]) {
      rows.push_back({r["family"].get<std::string>(), r["n"].dump(), r["wall_us"].dump(),
                      r["wall_us_naive"].is_null() ? "-" : r["wall_us_naive"].dump(), r["heap_ops"].dump(),
                      r["heap_ops_bound"].dump(), r["shifts"].dump(), r["merges"].dump(),
                      r["within_bound"].get<bool>() ? "yes" : "NO"});
    }
    print_aligned(rows);
    std::cout << (j["ok"].get<bool>() ? "ok" : "FAILED") << "\n";
  }
  return static_cast<int>(status);
}

int run_gen(std::uint64_t seed, std::size_t n, const std::string& range, const std::string& delta,
            const std::string& family, const std::string& out_path) {
  dsp_instance* raw = nullptr;
  if (dsp_status status = dsp_instance_generate(seed, n, range.c_str(), delta.c_str(), family.c_str(), &raw);
      status != DSP_OK)
    return fail(status);
  InstancePtr inst(raw, &dsp_instance_free);

  char* text_raw = nullptr;
  if (dsp_status status = dsp_instance_to_text(inst.get(), &text_raw); status != DSP_OK) return fail(status);
  std::unique_ptr<char, decltype(&dsp_free_text)> text(text_raw, &dsp_free_text);

  if (out_path.empty() || out_path == "-") {
    std::cout << text.get();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return static_cast<int>(DSP_PARSE);
    }
    file << text.get();
  }
  return 0;
}

int run_replay(const std::string& instance_path, const std::string& trace_path) {
  InstancePtr inst(nullptr, &dsp_instance_free);
  if (int code = load_instance(instance_path, "plain", "", inst)) return code;

  std::string trace_text;
  if (!read_input(trace_path, trace_text)) {
    std::cerr << "error: cannot read '" << trace_path << "'\n";
    return static_cast<int>(DSP_PARSE);
  }

  dsp_result* replayed_raw = nullptr;
  if (dsp_status status = dsp_replay(inst.get(), trace_text.c_str(), &replayed_raw); status != DSP_OK)
    return fail(status);
  ResultPtr replayed(replayed_raw, &dsp_result_free);

  dsp_result* solved_raw = nullptr;
  if (dsp_status status = dsp_solve(inst.get(), 0, &solved_raw); status != DSP_OK) return fail(status);
  ResultPtr solved(solved_raw, &dsp_result_free);

  const std::size_t n = dsp_result_size(solved.get());
  for (std::size_t i = 0; i < n; ++i) {
    const std::string a = dsp_result_position(replayed.get(), i);
    const std::string b = dsp_result_position(solved.get(), i);
    if (a != b) {
      std::cerr << "replay mismatch at input index " << i << ": trace " << a << ", solver " << b << "\n";
      return static_cast<int>(DSP_CHECK_FAILED);
    }
  }
  std::cout << "replay reproduces the solver configuration (" << n << " points, cost "
            << dsp_result_total_cost(solved.get()) << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact minimum-total-movement point separation on a line"};
  app.require_subcommand(1);

  // solve
  std::string solve_file;
  std::string solve_format = "plain";
  std::string solve_delta;
  std::string solve_out = "json";
  std::string solve_trace;
  bool solve_check = false;
  CLI::App* solve = app.add_subcommand("solve", "solve one instance");
  solve->add_option("file", solve_file, "instance file, or - for stdin")->required();
  solve->add_option("--format", solve_format, "input format")->check(CLI::IsMember({"plain", "csv", "json"}));
  solve->add_option("--delta", solve_delta, "separation (csv input only)");
  solve->add_option("--out", solve_out, "output format")->check(CLI::IsMember({"json", "plain"}));
  solve->add_option("--trace", solve_trace, "write a JSONL event trace to this path");
  solve->add_flag("--check", solve_check, "audit the result and cross-check the cost");

  // verify
  std::string verify_oracle;
  std::uint64_t verify_count = 100;
  std::size_t verify_nmin = 1, verify_nmax = 12;
  std::uint64_t verify_seed = kDefaultSeed;
  std::string verify_out = "plain";
  CLI::App* verify = app.add_subcommand("verify", "compare the solver against an oracle on random instances");
  verify->add_option("--oracle", verify_oracle, "oracle to compare against")
      ->required()
      ->check(CLI::IsMember({"exhaustive", "pav", "naive"}));
  verify->add_option("--count", verify_count, "number of instances");
  verify->add_option("--nmin", verify_nmin, "smallest point count");
  verify->add_option("--nmax", verify_nmax, "largest point count");
  verify->add_option("--seed", verify_seed, "master seed");
  verify->add_option("--out", verify_out, "output format")->check(CLI::IsMember({"json", "plain"}));

  // bench
  std::string bench_sizes = "1000,10000,100000";
  std::string bench_families = "uniform,adversarial_single_chain";
  std::uint64_t bench_seed = kDefaultSeed;
  bool bench_naive = false;
  std::string bench_out = "plain";
  CLI::App* bench = app.add_subcommand("bench", "time the solver and check operation budgets");
  bench->add_option("--sizes", bench_sizes, "comma separated point counts");
  bench->add_option("--families", bench_families, "comma separated families");
  bench->add_option("--seed", bench_seed, "master seed");
  bench->add_flag("--naive", bench_naive, "also time the quadratic sweep");
  bench->add_option("--out", bench_out, "output format")->check(CLI::IsMember({"json", "plain"}));

  // gen
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = kDefaultSeed;
  std::string gen_range = "1000";
  std::string gen_delta = "1";
  std::string gen_family = "uniform";
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a random instance");
  gen->add_option("--n", gen_n, "point count")->required();
  gen->add_option("--seed", gen_seed, "seed");
  gen->add_option("--range", gen_range, "coordinate range");
  gen->add_option("--delta", gen_delta, "separation");
  gen->add_option("--family", gen_family, "instance family")
      ->check(CLI::IsMember({"uniform", "clustered", "adversarial_single_chain", "near_independent"}));
  gen->add_option("--out", gen_out, "output file (default stdout)");

  // replay: developer tool, hidden from help
  std::string replay_instance, replay_trace;
  CLI::App* replay = app.add_subcommand("replay", "recompute a configuration from a trace");
  replay->group("");
  replay->add_option("instance", replay_instance, "instance file")->required();
  replay->add_option("trace", replay_trace, "trace file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(DSP_USAGE);
  }

  if (solve->parsed()) return run_solve(solve_file, solve_format, solve_delta, solve_out, solve_trace, solve_check);
  if (verify->parsed()) return run_verify_cmd(verify_oracle, verify_count, verify_nmin, verify_nmax, verify_seed, verify_out);
  if (bench->parsed()) return run_bench_cmd(bench_sizes, bench_families, bench_seed, bench_naive, bench_out);
  if (gen->parsed()) return run_gen(gen_seed, gen_n, gen_range, gen_delta, gen_family, gen_out);
  if (replay->parsed()) return run_replay(replay_instance, replay_trace);
  return static_cast<int>(DSP_USAGE);
}
