/* C interface to the yso3 verification engine.
 *
 * All objects are opaque handles created and destroyed here. Functions
 * return YSO3_OK on success; on any error they return a nonzero code and
 * leave a thread-local message readable via yso3_last_error(). Strings
 * returned by the library are owned by the handle they came from and stay
 * valid until that handle is freed.
 */
#ifndef YSO3_H
#define YSO3_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define YSO3_OK 0
#define YSO3_EINVAL 1   /* bad argument / configuration error */
#define YSO3_EINTERNAL 2

typedef struct yso3_config yso3_config;
typedef struct yso3_report yso3_report;

/* Configuration ---------------------------------------------------------- */

yso3_config* yso3_config_new(void);
void yso3_config_free(yso3_config* cfg);

int yso3_config_set_order(yso3_config* cfg, int order);
int yso3_config_set_depth(yso3_config* cfg, int depth);
/* Comma-separated exact rationals, e.g. "0,1/3". */
int yso3_config_set_points(yso3_config* cfg, const char* csv);
/* Comma-separated subset of: rmatrix,rtt,unitarity,gauss,section3,drinfeld,
 * roundtrip,all. */
int yso3_config_set_suites(yso3_config* cfg, const char* csv);
/* "json" or "text". */
int yso3_config_set_format(yso3_config* cfg, const char* format);
/* "suite:target:index:delta", e.g. "gauss:kMinus1:1:+1"; NULL clears. */
int yso3_config_set_mutation(yso3_config* cfg, const char* spec);
int yso3_config_set_seed(yso3_config* cfg, unsigned long long seed);
int yso3_config_set_mode_bound(yso3_config* cfg, int bound);
int yso3_config_set_timings(yso3_config* cfg, int enabled);
/* key=value lines with the same keys as the setters (order, depth, points,
 * suites, format, mutate, seed, mode_bound, timings); '#' starts a comment. */
int yso3_config_load_file(yso3_config* cfg, const char* path);

/* Execution --------------------------------------------------------------- */

/* Runs the configured suites. Configuration errors return YSO3_EINVAL and
 * produce no report; identity failures are recorded inside the report. */
int yso3_run(const yso3_config* cfg, yso3_report** out);
void yso3_report_free(yso3_report* report);

int yso3_report_total(const yso3_report* report);
int yso3_report_passed(const yso3_report* report);
int yso3_report_failed(const yso3_report* report);
int yso3_report_skipped(const yso3_report* report);

/* Rendered report in the requested format ("json" or "text"; NULL uses the
 * config's format). Owned by the report handle; invalidated by the next
 * render call on the same handle. */
const char* yso3_report_render(yso3_report* report, const char* format);

/* The identity catalog: one line per identity, "id | clearing | statement".
 * Static storage; never freed. */
const char* yso3_catalog(void);

/* Thread-local message for the most recent failing call. */
const char* yso3_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* YSO3_H */
