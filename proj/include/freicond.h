/*
 * C interface to the freicond library: constructive condensation and
 * densification of finite integer sets relative to a fixed polynomial
 * system, with every construction verified against exhaustive oracles.
 *
 * All objects are opaque handles created from the library's text formats
 * and released with the matching _free function. Operations return a status
 * code; on FC_OK (and on FC_VERIFIED_NO for verification-style calls) the
 * out-parameter receives a result handle carrying key-value pairs plus a
 * deterministic plain-text report. Error details for failing calls are
 * available from fc_last_error() on the same thread.
 */
#ifndef FREICOND_H
#define FREICOND_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined _WIN32
#define FC_API __declspec(dllexport)
#else
#define FC_API __attribute__((visibility("default")))
#endif

/* Status codes. Mirrored by the CLI as process exit codes. */
#define FC_OK 0           /* success; constructions verified */
#define FC_VERIFIED_NO 1  /* the check ran to completion and the answer is no */
#define FC_ERR_BUDGET 2   /* an enumeration or search limit was exceeded */
#define FC_ERR_INPUT 3    /* malformed input or precondition violation */
#define FC_ERR_INTERNAL 4 /* a proven construction failed self-verification */

typedef struct fc_intset fc_intset;
typedef struct fc_polysystem fc_polysystem;
typedef struct fc_maptable fc_maptable;
typedef struct fc_result fc_result;

/* Last error message for the current thread; empty string when none. */
FC_API const char* fc_last_error(void);

/* Parsers for the library text formats (one integer per line; "vars s" plus
 * "poly:"/"linear:" lines; "key -> value" lines). On failure they return
 * NULL and set fc_last_error. */
FC_API fc_intset* fc_intset_parse(const char* text);
FC_API fc_polysystem* fc_polysystem_parse(const char* text);
FC_API fc_maptable* fc_maptable_parse(const char* text);

FC_API void fc_intset_free(fc_intset* s);
FC_API void fc_polysystem_free(fc_polysystem* p);
FC_API void fc_maptable_free(fc_maptable* m);

/* Result accessors. Returned strings live as long as the result handle.
 * fc_result_get returns NULL for missing keys. */
FC_API const char* fc_result_get(const fc_result* r, const char* key);
FC_API const char* fc_result_report(const fc_result* r);
FC_API void fc_result_free(fc_result* r);

/*
 * Operations. Common parameters:
 *   config  echoed verbatim into the report header ("# config: ...");
 *           pass the flag string that reproduces the call.
 *   budget  cap on evaluation-tuple enumerations; 0 keeps the default
 *           (100000000).
 * Each op writes a result handle to *out (NULL allowed only where noted).
 */

/* mode: "thm31", "thm32" or "greedy". Keys: op, steps, env_before,
 * env_after, stop, iso. */
FC_API int fc_op_condense(const fc_intset* a, const fc_polysystem* p,
                          const char* mode, uint32_t max_steps,
                          uint64_t budget, const char* config,
                          fc_result** out);

/* Diagonal pipeline for degree-t power systems: condense the set of t-th
 * powers, then lift back through certified algebraic t-th roots. Keys: op,
 * t, env, env_exact, env_bound, degree, degree_cap, iso. */
FC_API int fc_op_condense_diagonal(const fc_intset* a, const fc_polysystem* p,
                                   const char* mode, uint32_t max_steps,
                                   uint64_t budget, const char* config,
                                   fc_result** out);

/* verify: "auto", "full", "count" or "sample". eps is eps_num/eps_den in
 * (0, 1/8). Keys: op, steps, card, env, target, ratio. */
FC_API int fc_op_densify(const fc_intset* a, const fc_polysystem* p,
                         int64_t eps_num, int64_t eps_den, uint32_t max_steps,
                         const char* verify, uint64_t budget,
                         const char* config, fc_result** out);

/* Vinogradov mean value J_{s,k}. oracle != 0 forces the 2s-tuple path.
 * Keys: op, J, lower, upper, trivial, and (when computed) consecutive_J,
 * consecutive_cmp. */
FC_API int fc_op_count(const fc_intset* a, uint32_t s, uint32_t k, int oracle,
                       uint64_t budget, const char* config, fc_result** out);

/* Weighted variant: phis is a system of k single-variable polynomials.
 * Keys: op, J. */
FC_API int fc_op_count_phi(const fc_intset* a, uint32_t s,
                           const fc_polysystem* phis, uint64_t budget,
                           const char* config, fc_result** out);

/* Freiman isomorphism check; single-key tables check psi: A -> B, t_fold
 * tables check the fold condition over the base set. Returns FC_OK when the
 * map verifies, FC_VERIFIED_NO (with keys direction, counterexample) when it
 * does not. Keys: op, iso. */
FC_API int fc_op_verify(const fc_maptable* psi, const fc_intset* a,
                        const fc_polysystem* p, uint64_t budget,
                        const char* config, fc_result** out);

/* Exact minimal-envelope model search up to env_cap. Keys: op, env_star. */
FC_API int fc_op_minmodel(const fc_intset* a, const fc_polysystem* p,
                          uint32_t env_cap, uint64_t budget,
                          const char* config, fc_result** out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FREICOND_H */
