/* disperse — exact minimum-total-movement point separation on a line.
 *
 * C interface to the solver library. Handles are opaque; every function
 * that can fail returns a dsp_status, and the values line up with the CLI
 * exit codes. All numeric inputs and outputs are decimal strings so the
 * exact fixed-point arithmetic is never routed through binary floats.
 *
 * Strings returned as `const char*` are owned by the handle they came from
 * and stay valid until that handle is freed. Strings returned through
 * `char**` are heap-allocated; release them with dsp_free_text().
 */

#ifndef DISPERSE_DISPERSE_H
#define DISPERSE_DISPERSE_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dsp_status {
  DSP_OK = 0,
  DSP_CHECK_FAILED = 1, /* a verification or --check style comparison failed */
  DSP_USAGE = 2,        /* invalid argument or option combination */
  DSP_PARSE = 3,        /* malformed input, including non-positive separation */
  DSP_OVERFLOW = 4,     /* value outside the 128-bit grid */
  DSP_INTERNAL = 5      /* invariant breach; indicates a library bug */
} dsp_status;

typedef struct dsp_instance dsp_instance;
typedef struct dsp_result dsp_result;

const char* dsp_version(void);

/* Message for the most recent failing call on this thread. */
const char* dsp_last_error(void);

void dsp_free_text(char* text);

/* --- instances ---------------------------------------------------------- */

/* Plain text: first token is the separation, remaining whitespace-separated
 * tokens are positions; lines starting with '#' are ignored. */
dsp_status dsp_instance_parse_text(const char* text, dsp_instance** out);

dsp_status dsp_instance_from_strings(const char* delta, const char* const* positions, size_t count,
                                     dsp_instance** out);

/* family: uniform | clustered | adversarial_single_chain | near_independent */
dsp_status dsp_instance_generate(uint64_t seed, size_t n, const char* range, const char* delta,
                                 const char* family, dsp_instance** out);

void dsp_instance_free(dsp_instance* inst);

size_t dsp_instance_size(const dsp_instance* inst);
const char* dsp_instance_delta(const dsp_instance* inst);

/* Serializes back to the plain text format, positions in input order. */
dsp_status dsp_instance_to_text(const dsp_instance* inst, char** out_text);

/* --- solving ------------------------------------------------------------ */

#define DSP_SOLVE_TRACE 1u       /* record a replayable event trace */
#define DSP_SOLVE_DEBUG_AUDIT 2u /* re-audit after every iteration (slow) */

dsp_status dsp_solve(const dsp_instance* inst, unsigned flags, dsp_result** out);

void dsp_result_free(dsp_result* result);

size_t dsp_result_size(const dsp_result* result);
const char* dsp_result_total_cost(const dsp_result* result);

/* Positions and signed displacements in the original input order. */
const char* dsp_result_position(const dsp_result* result, size_t input_index);
const char* dsp_result_displacement(const dsp_result* result, size_t input_index);

typedef enum dsp_counter {
  DSP_COUNTER_HEAP_OPS = 0, /* key comparisons inside heap operations */
  DSP_COUNTER_SHIFTS = 1,
  DSP_COUNTER_MERGES = 2,
  DSP_COUNTER_ITERATIONS = 3
} dsp_counter;

uint64_t dsp_result_counter(const dsp_result* result, dsp_counter which);

/* JSONL trace; empty string unless the solve ran with DSP_SOLVE_TRACE. */
const char* dsp_result_trace_jsonl(const dsp_result* result);

/* Audits the result and cross-checks its cost against the isotonic
 * regression route. DSP_OK or DSP_CHECK_FAILED; *report_json gets the
 * detailed flags either way. */
dsp_status dsp_check(const dsp_instance* inst, const dsp_result* result, char** report_json);

/* Reconstructs a configuration from a JSONL trace. */
dsp_status dsp_replay(const dsp_instance* inst, const char* trace_jsonl, dsp_result** out);

/* --- batch verification and benchmarking -------------------------------- */

/* oracle: exhaustive | pav | naive. DSP_CHECK_FAILED when any instance
 * mismatches; the JSON report carries the regenerating parameters. */
dsp_status dsp_verify(const char* oracle, uint64_t count, size_t nmin, size_t nmax, uint64_t seed,
                      char** report_json);

/* sizes: comma-separated point counts; families: comma-separated family
 * names. DSP_CHECK_FAILED when a heap-operation counter exceeds its
 * 4*n*log2(n+2) budget. */
dsp_status dsp_bench(const char* sizes, const char* families, uint64_t seed, int include_naive,
                     char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* DISPERSE_DISPERSE_H */
