/* C interface to the jrlab library.
 *
 * A session carries the run configuration (prime, dimension, seed and the
 * work budgets) and the output of the last command.  Output is
 * line-delimited JSON, one record per line.  Strings returned by the
 * accessors stay valid until the next call on the same session.
 */
#ifndef JRLAB_H
#define JRLAB_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define JRLAB_API __attribute__((visibility("default")))
#else
#define JRLAB_API
#endif

/* The status values double as process exit codes. */
typedef enum jrlab_status {
	JRLAB_OK = 0,
	JRLAB_FAILURES = 1, /* a check disagreed */
	JRLAB_PARSE = 2,    /* malformed input, unknown command or key, bad value */
	JRLAB_DOMAIN = 3,   /* input outside the domain of the operation */
	JRLAB_BUDGET = 4,   /* the requested run exceeds the work budget */
	JRLAB_INTERNAL = 5  /* an internal consistency check failed */
} jrlab_status;

typedef struct jrlab_session jrlab_session;

JRLAB_API jrlab_session* jrlab_open(void);
JRLAB_API void jrlab_close(jrlab_session* s);

/* Keys: "p", "n", "seed", "budget_valuation", "grid", "instances".
 * Zero for a budget key restores the command's default. */
JRLAB_API jrlab_status jrlab_set_int(jrlab_session* s, const char* key, long long value);

/* Commands taking JSON documents: "invariants", "jordan", "cayley" (one
 * each) and "match" (two).  Suites take none: "fl", "cones", "descent",
 * "chambers", "toy", and "criterion" (acceptance criterion number in n). */
JRLAB_API jrlab_status jrlab_run(jrlab_session* s, const char* command, const char* const* inputs, int count);

JRLAB_API const char* jrlab_output(const jrlab_session* s);
JRLAB_API long long jrlab_points(const jrlab_session* s);
JRLAB_API long long jrlab_failures(const jrlab_session* s);
JRLAB_API const char* jrlab_last_error(const jrlab_session* s);

JRLAB_API const char* jrlab_version(void);

#ifdef __cplusplus
}
#endif

#endif
