/*
 * holeminer C API.
 *
 * All objects are opaque handles created by a *_load / hm_mine / hm_stock_graph
 * call and released with the matching *_free function. Every fallible call
 * returns an hm_status; on failure hm_last_error() describes the problem for
 * the calling thread until its next API call. Strings returned through `char**`
 * out-parameters are owned by the caller and released with hm_string_free().
 */
#ifndef HOLEMINER_H
#define HOLEMINER_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(HOLEMINER_BUILDING)
#define HM_API __declspec(dllexport)
#else
#define HM_API __declspec(dllimport)
#endif
#else
#define HM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 0-3 double as the CLI's process exit codes. */
typedef enum hm_status {
  HM_OK = 0,
  HM_ERR_INPUT = 1,            /* unreadable or malformed input file/text */
  HM_ERR_GUARD = 2,            /* search space larger than the guard limit */
  HM_ERR_CORRECTNESS = 3,      /* two algorithms disagreed */
  HM_ERR_INVALID_ARGUMENT = 4, /* precondition violated (size 0, bad lag, ...) */
  HM_ERR_INVALID_HANDLE = 5,   /* null handle or out-parameter */
  HM_ERR_INTERNAL = 6
} hm_status;

typedef enum hm_algorithm {
  HM_ALGO_BRUTE_FORCE = 0,
  HM_ALGO_IBLACKHOLE = 1,
  HM_ALGO_IBLACKHOLE_DC = 2
} hm_algorithm;

typedef enum hm_pattern { HM_PATTERN_BLACKHOLE = 0, HM_PATTERN_VOLCANO = 1 } hm_pattern;

typedef enum hm_format { HM_FORMAT_JSON = 0, HM_FORMAT_CSV = 1 } hm_format;

typedef struct hm_graph hm_graph;
typedef struct hm_result hm_result;
typedef struct hm_prices hm_prices;

typedef struct hm_mine_options {
  size_t max_size;
  hm_algorithm algorithm;
  hm_pattern pattern;
  int parallel;
  uint64_t guard_limit;
} hm_mine_options;

HM_API const char* hm_version(void);
HM_API const char* hm_last_error(void);
HM_API void hm_string_free(char* s);

/* 10^9 unless HOLEMINER_GUARD_LIMIT holds a positive integer. */
HM_API hm_status hm_default_guard_limit(uint64_t* out);
/* max_size 1, iBlackhole-DC, blackholes, sequential, default guard. */
HM_API hm_status hm_mine_options_init(hm_mine_options* opts);

/* ---- graphs ---------------------------------------------------------- */

HM_API hm_status hm_graph_load_file(const char* path, hm_graph** out);
HM_API hm_status hm_graph_load_text(const char* text, size_t len, hm_graph** out);
HM_API void hm_graph_free(hm_graph* g);

HM_API hm_status hm_graph_counts(const hm_graph* g, size_t* nodes, size_t* edges);
HM_API hm_status hm_graph_load_report(const hm_graph* g, size_t* self_loops_dropped,
                                      size_t* duplicates_collapsed);
/* Node/edge/component counts and degree histograms. */
HM_API hm_status hm_graph_stats(const hm_graph* g, hm_format format, char** out);
/* Edge-list text that hm_graph_load_text reads back to the same graph. */
HM_API hm_status hm_graph_write_edge_list(const hm_graph* g, char** out);

/* ---- mining ---------------------------------------------------------- */

HM_API hm_status hm_mine(const hm_graph* g, const hm_mine_options* opts, hm_result** out);
HM_API void hm_result_free(hm_result* r);

HM_API hm_status hm_result_count(const hm_result* r, size_t size, size_t* count);
HM_API hm_status hm_result_total_ms(const hm_result* r, double* ms);
/* Full run report; `command` is echoed into the JSON form. */
HM_API hm_status hm_result_report(const hm_result* r, const char* command, hm_format format,
                                  char** out);
/* The deterministic pattern section of the JSON report. */
HM_API hm_status hm_result_patterns_json(const hm_result* r, char** out);

HM_API hm_status hm_prune_stats(const hm_graph* g, size_t size, hm_format format, char** out);

/* `algorithms` is a comma-separated list of brute, iblackhole, iblackhole-dc,
 * or "all". Writes CSV (algorithm,size,wall_ms,pattern_count). Returns
 * HM_ERR_CORRECTNESS if the algorithms disagree. */
HM_API hm_status hm_bench(const hm_graph* g, size_t max_size, const char* algorithms,
                          size_t repeats, uint64_t guard_limit, char** csv_out);

/* ---- stock networks -------------------------------------------------- */

HM_API hm_status hm_prices_load_file(const char* path, hm_prices** out);
HM_API hm_status hm_prices_load_text(const char* text, size_t len, hm_prices** out);
HM_API void hm_prices_free(hm_prices* p);
HM_API hm_status hm_prices_counts(const hm_prices* p, size_t* instruments, size_t* days,
                                  size_t* rejected_rows);
/* One "line N (TICKER): reason" entry per excluded row. */
HM_API hm_status hm_prices_rejected(const hm_prices* p, char** out);

HM_API hm_status hm_stock_graph(const hm_prices* p, double theta, size_t lag, int raw_prices,
                                hm_graph** out);

#ifdef __cplusplus
}
#endif

#endif /* HOLEMINER_H */
