#include "trace_io.hpp"

#include <json.hpp>
#include <stdexcept>

namespace disperse {

const char* trace_kind_name(TraceKind kind) {
  switch (kind) {
    case TraceKind::PlaceInitial: return "place_initial";
    case TraceKind::PlaceAppended: return "place_appended";
    case TraceKind::NewChain: return "new_chain";
    case TraceKind::JoinChain: return "join_chain";
    case TraceKind::Shift: return "shift";
    case TraceKind::Merge: return "merge";
  }
  throw std::logic_error("trace_kind_name: unknown kind");
}

namespace {

TraceKind kind_from_name(const std::string& name) {
  if (name == "place_initial") return TraceKind::PlaceInitial;
  if (name == "place_appended") return TraceKind::PlaceAppended;
  if (name == "new_chain") return TraceKind::NewChain;
  if (name == "join_chain") return TraceKind::JoinChain;
  if (name == "shift") return TraceKind::Shift;
  if (name == "merge") return TraceKind::Merge;
  throw ParseError("trace: unknown event kind '" + name + "'");
}

}  // namespace

std::string trace_to_jsonl(const std::vector<TraceEvent>& trace, int frac_digits) {
  std::string out;
  for (const TraceEvent& e : trace) {
    nlohmann::ordered_json j;
    j["iter"] = e.iter;
    j["kind"] = trace_kind_name(e.kind);
    j["chain_start"] = e.chain_start;
    if (e.kind == TraceKind::Shift) j["amount"] = format_scaled(e.amount, frac_digits);
    if (e.kind == TraceKind::Merge) j["merged_with_start"] = e.merged_with_start;
    out += j.dump();
    out.push_back('\n');
  }
  return out;
}

std::vector<TraceEvent> trace_from_jsonl(std::string_view text, int frac_digits) {
  std::vector<TraceEvent> events;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    if (line.empty()) continue;

    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ParseError("trace: line is not a JSON object");

    TraceEvent e;
    e.iter = j.at("iter").get<std::size_t>();
    e.kind = kind_from_name(j.at("kind").get<std::string>());
    e.chain_start = j.at("chain_start").get<std::size_t>();
    if (e.kind == TraceKind::Shift) {
      Decimal d = parse_decimal(j.at("amount").get<std::string>());
      if (d.frac_digits > frac_digits) throw ParseError("trace: shift amount finer than the instance grid");
      e.amount = rescale(d, frac_digits);
    }
    if (e.kind == TraceKind::Merge) e.merged_with_start = j.at("merged_with_start").get<std::size_t>();
    events.push_back(e);
  }
  return events;
}

Configuration replay_trace(const ProblemInstance& inst, const std::vector<TraceEvent>& trace) {
  struct ReplayChain {
    std::size_t first, last;
    Int128 base;
  };
  std::vector<ReplayChain> chains;
  std::size_t placed = 0;
  auto fail = [](const char* what) { throw std::logic_error(std::string("replay: ") + what); };

  for (const TraceEvent& e : trace) {
    switch (e.kind) {
      case TraceKind::NewChain: {
        if (e.chain_start != placed - 1) fail("new_chain start out of order");
        std::size_t i = e.chain_start;
        chains.push_back(
            {i, i, checked_sub(inst.initial[i], checked_mul(static_cast<Int128>(i), inst.delta))});
        break;
      }
      case TraceKind::JoinChain: {
        if (chains.empty() || chains.back().first != e.chain_start) fail("join_chain targets a non-tail chain");
        chains.back().last = placed - 1;
        break;
      }
      case TraceKind::PlaceInitial: {
        std::size_t i = placed++;
        if (i >= inst.size()) fail("more placements than points");
        // consistency: the spot delta after the tail must be the input spot,
        // unless this placement opens a fresh chain
        if (!chains.empty() && chains.back().last + 1 == i && e.chain_start == chains.back().first) {
          Int128 spot = checked_add(chains.back().base, checked_mul(static_cast<Int128>(i), inst.delta));
          if (spot != inst.initial[i]) fail("place_initial does not land on the input spot");
        }
        break;
      }
      case TraceKind::PlaceAppended: {
        ++placed;
        if (placed > inst.size()) fail("more placements than points");
        break;
      }
      case TraceKind::Shift: {
        if (chains.empty() || chains.back().first != e.chain_start) fail("shift targets a non-tail chain");
        if (e.amount <= 0) fail("non-positive shift amount");
        chains.back().base = checked_sub(chains.back().base, e.amount);
        break;
      }
      case TraceKind::Merge: {
        if (chains.size() < 2) fail("merge without two chains");
        ReplayChain right = chains.back();
        chains.pop_back();
        ReplayChain& left = chains.back();
        if (left.first != e.chain_start || right.first != e.merged_with_start) fail("merge indices mismatch");
        if (right.first != left.last + 1 || right.base != left.base) fail("merged chains do not abut");
        left.last = right.last;
        break;
      }
    }
  }
  if (placed != inst.size()) fail("trace does not place every point");

  Configuration cfg(inst.size());
  std::size_t covered = 0;
  for (const ReplayChain& c : chains) {
    if (c.first != covered) fail("chains do not tile the index range");
    covered = c.last + 1;
    for (std::size_t i = c.first; i <= c.last; ++i) {
      cfg[i] = checked_add(c.base, checked_mul(static_cast<Int128>(i), inst.delta));
    }
  }
  if (covered != inst.size()) fail("chains do not cover every point");
  return cfg;
}

}  // namespace disperse
