#include "chains.hpp"

#include <algorithm>
#include <stdexcept>

namespace disperse {

namespace {

bool gaps_at_least_delta(const ProblemInstance& inst, const Configuration& cfg) {
  for (std::size_t i = 1; i < cfg.size(); ++i) {
    if (checked_sub(cfg[i], cfg[i - 1]) < inst.delta) return false;
  }
  return true;
}

void classify(ChainView& c, const ProblemInstance& inst, const Configuration& cfg, std::size_t i) {
  if (cfg[i] < inst.initial[i]) {
    ++c.left_count;
  } else if (cfg[i] == inst.initial[i]) {
    ++c.stationary_count;
  } else {
    ++c.right_count;
  }
}

}  // namespace

std::vector<ChainView> decompose_chains(const ProblemInstance& inst, const Configuration& cfg) {
  if (cfg.size() != inst.size()) throw std::invalid_argument("decompose_chains: configuration size mismatch");
  if (!gaps_at_least_delta(inst, cfg)) throw std::invalid_argument("decompose_chains: configuration is not independent");

  std::vector<ChainView> chains;
  for (std::size_t i = 0; i < cfg.size(); ++i) {
    if (chains.empty() || checked_sub(cfg[i], cfg[i - 1]) != inst.delta) {
      chains.push_back(ChainView{i, i, 0, 0, 0});
    } else {
      chains.back().last = i;
    }
    classify(chains.back(), inst, cfg, i);
  }
  return chains;
}

bool AuditReport::all_ok() const {
  if (!independent || !order_preserved || !prefix_left_move_worsens || !stationary_per_chain) return false;
  if (std::find(left_move_worsens.begin(), left_move_worsens.end(), false) != left_move_worsens.end()) return false;
  if (std::find(right_move_no_gain.begin(), right_move_no_gain.end(), false) != right_move_no_gain.end()) return false;
  return true;
}

AuditReport audit(const ProblemInstance& inst, const Configuration& cfg) {
  if (cfg.size() != inst.size()) throw std::invalid_argument("audit: configuration size mismatch");

  AuditReport report;
  report.independent = gaps_at_least_delta(inst, cfg);

  report.order_preserved = true;
  for (std::size_t i = 1; i < cfg.size(); ++i) {
    // ties in the input may stay ties; strict input order must stay strict
    bool ok = inst.initial[i - 1] < inst.initial[i] ? cfg[i - 1] < cfg[i] : cfg[i - 1] <= cfg[i];
    if (!ok) {
      report.order_preserved = false;
      break;
    }
  }

  if (!report.independent) return report;

  report.chains = decompose_chains(inst, cfg);
  report.prefix_left_move_worsens = true;
  report.stationary_per_chain = true;
  for (const ChainView& c : report.chains) {
    report.left_move_worsens.push_back(c.left_count + c.stationary_count > c.right_count);
    report.right_move_no_gain.push_back(c.left_count <= c.stationary_count + c.right_count);
    if (c.stationary_count == 0) report.stationary_per_chain = false;

    std::size_t left = 0, stationary = 0, right = 0;
    for (std::size_t i = c.first; i <= c.last; ++i) {
      if (cfg[i] < inst.initial[i]) {
        ++left;
      } else if (cfg[i] == inst.initial[i]) {
        ++stationary;
      } else {
        ++right;
      }
      if (left + stationary <= right) report.prefix_left_move_worsens = false;
    }
  }
  return report;
}

}  // namespace disperse
