#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "solver.hpp"

namespace disperse {

// Trace wire format: one JSON object per line with keys iter, kind,
// chain_start, plus amount (decimal string) on shift events and
// merged_with_start on merge events.
std::string trace_to_jsonl(const std::vector<TraceEvent>& trace, int frac_digits);
std::vector<TraceEvent> trace_from_jsonl(std::string_view text, int frac_digits);

// Rebuilds the final configuration from a trace alone: new_chain/join_chain
// fix the chain layout, shift/merge move it. The place_* events are used as
// consistency checks. Throws std::logic_error on an inconsistent trace.
Configuration replay_trace(const ProblemInstance& inst, const std::vector<TraceEvent>& trace);

const char* trace_kind_name(TraceKind kind);

}  // namespace disperse
