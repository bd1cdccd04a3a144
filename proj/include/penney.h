/* penney: exact analysis of independent pattern races on coins and dice.
 *
 * C interface to the core library. All results are returned as UTF-8 JSON
 * documents allocated by the library; free them with penney_string_free.
 * Functions return PENNEY_OK on success; on failure penney_last_error(ctx)
 * holds a message prefixed with a stable error name.
 *
 * A context carries options and the last error message. Contexts are cheap
 * and not thread-safe; use one per thread.
 *
 * Bias strings: "fair:S" for a uniform S-sided die, a single fraction or
 * decimal ("3/5", "0.61") for a coin's Pr(H), or a comma list of exact
 * fractions summing to 1 ("624/1468,399/1468,445/1468").
 * Patterns: H/T (coins; 0/1 also accepted with 0 = H), or digit faces for
 * dice, either 0..S-1 or 1..S.
 */
#ifndef PENNEY_H
#define PENNEY_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define PENNEY_OK 0
#define PENNEY_EUSAGE 1    /* missing/invalid call arguments */
#define PENNEY_EDOMAIN 2   /* domain error; name in penney_last_error */
#define PENNEY_EINTERNAL 3 /* invariant violation inside the library */

typedef struct penney_ctx penney_ctx;

const char *penney_version(void);

penney_ctx *penney_ctx_new(void);
void penney_ctx_free(penney_ctx *ctx);

/* keys: "threads" (int), "horizon" (int, waiting-law truncation),
 * "db_path" (census crossover database), "trials", "seed", "max_steps"
 * (simulation defaults) */
int penney_ctx_set(penney_ctx *ctx, const char *key, const char *value);
const char *penney_last_error(const penney_ctx *ctx);

void penney_string_free(char *s);

/* exact mean waiting time; JSON: pattern, bias, borders, mean */
int penney_expect(penney_ctx *ctx, const char *pattern, const char *bias, char **out_json);

/* waiting-time law: cleared pgf, mean, hit/survival arrays to the horizon
 * (horizon <= 0 uses the context default) */
int penney_pgf(penney_ctx *ctx, const char *pattern, const char *bias, int horizon,
               char **out_json);

/* E[tau](p) for a coin as a reduced rational function of p */
int penney_mean_symbolic(penney_ctx *ctx, const char *pattern, char **out_json);

/* exact two-player race; tie is "strict", "first" or "random"; when
 * hadamard_n > 0 a certified truncated-series enclosure is included */
int penney_race(penney_ctx *ctx, const char *first, const char *second, const char *bias_first,
                const char *bias_second, const char *tie, int hadamard_n, char **out_json);

/* g(p) = W_rtb(first beats second; p) - 1/2 as a reduced rational function */
int penney_advantage(penney_ctx *ctx, const char *first, const char *second, char **out_json);

/* zeros of g in (0,1) with isolating intervals plus endpoint verdicts */
int penney_crossovers(penney_ctx *ctx, const char *first, const char *second, char **out_json);

/* critical points of the win probability in the common bias */
int penney_critical(penney_ctx *ctx, const char *first, const char *second, const char *tie,
                    char **out_json);

/* stochastic-dominance comparison; bias "fair:S" invokes the fair rule */
int penney_dominance(penney_ctx *ctx, const char *first, const char *second, const char *bias,
                     int horizon, char **out_json);

/* incomparable pair construction at a biased coin */
int penney_witness(penney_ctx *ctx, const char *bias, char **out_json);

/* certified non-transitive cycle families up to max_len */
int penney_census_cycles(penney_ctx *ctx, int max_len, char **out_json);

/* mean-vs-odds reversal windows up to max_len, with counts and the
 * no-reversal gap */
int penney_census_reversals(penney_ctx *ctx, int max_len, char **out_json);

/* patterns_csv: "A,B,C"; biases_sc: three bias strings joined by ';' */
int penney_verify_cycle(penney_ctx *ctx, const char *patterns_csv, const char *biases_sc,
                        char **out_json);

/* mode: "common_p" | "per_player" | "simplex"; windows (optional): per-axis
 * "lo:hi" ranges joined by ';'; csv_path (optional): grid rows destination */
int penney_scan(penney_ctx *ctx, const char *patterns_csv, const char *mode,
                const char *grid_step, const char *windows, const char *csv_path, char **out_json);

/* seeded Monte Carlo oracles (zeros fall back to context defaults) */
int penney_simulate_race(penney_ctx *ctx, const char *first, const char *second,
                         const char *bias_first, const char *bias_second, const char *tie,
                         uint64_t trials, uint64_t seed, uint64_t max_steps, char **out_json);
int penney_simulate_waiting(penney_ctx *ctx, const char *pattern, const char *bias,
                            uint64_t trials, uint64_t seed, uint64_t max_steps, char **out_json);

/* laws_json: [[(time, "mass"), ...], ...] as [[ [1,"1/3"], [5,"1/3"], [9,"1/3"] ], ...] */
int penney_race_discrete(penney_ctx *ctx, const char *laws_json, char **out_json);

#ifdef __cplusplus
}
#endif

#endif /* PENNEY_H */
