/* Copyright 2026 The relbound authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the relbound library: classical bounds on the reliability
 * function of a discrete memoryless channel.
 *
 * Channels are opaque handles created from JSON or from built-in families.
 * Every function returns an rb_status; on failure rb_last_error() holds a
 * thread-local message. Exact rational results travel as "num/den" strings
 * allocated by the library; release them with rb_string_free(). Rates are
 * base-2 logarithms (bits per channel use).
 */

#ifndef RELBOUND_H_
#define RELBOUND_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct rb_channel rb_channel;

typedef enum rb_status {
  RB_OK = 0,
  RB_ERR_PARSE = 1,          /* malformed JSON or rational syntax */
  RB_ERR_VALIDATION = 2,     /* non-stochastic rows, bad parameters */
  RB_ERR_SIZE = 3,           /* constructed object over its size cap */
  RB_ERR_INDEX = 4,          /* alphabet index out of range */
  RB_ERR_DOMAIN = 5,         /* quantity undefined for this channel */
  RB_ERR_NONCONVERGENCE = 6, /* iteration budget exhausted */
  RB_ERR_RHO_CAP = 7,        /* sup over rho still climbing at the cap */
  RB_ERR_BUDGET = 8,         /* combinatorial budget exceeded */
  RB_ERR_NULL = 9,           /* required pointer argument was NULL */
  RB_ERR_INTERNAL = 10
} rb_status;

/* Message for the most recent failure on this thread. Never NULL. */
const char* rb_last_error(void);

const char* rb_version(void);

/* Frees strings returned through char** out-parameters. */
void rb_string_free(char* s);

/* ---- channel lifecycle -------------------------------------------------- */

/* Parses {"input": q, "output": m, "rows": [["num/den", ...], ...]}. */
rb_status rb_channel_from_json(const char* json_text, rb_channel** out);

rb_status rb_channel_to_json(const rb_channel* w, char** json_out);

rb_status rb_channel_identity(int n, rb_channel** out);

/* Cyclic typewriter channel; epsilon is a rational string like "1/4". */
rb_status rb_channel_typewriter(int q, const char* epsilon, rb_channel** out);

rb_status rb_channel_binary_symmetric(const char* crossover, rb_channel** out);

rb_status rb_channel_kronecker(const rb_channel* a, const rb_channel* b,
                               long size_cap, rb_channel** out);

rb_status rb_channel_extension(const rb_channel* w, int n, long size_cap,
                               rb_channel** out);

void rb_channel_free(rb_channel* w);

int rb_channel_input_size(const rb_channel* w);
int rb_channel_output_size(const rb_channel* w);

/* W(y|x) as a rational string. */
rb_status rb_channel_entry(const rb_channel* w, int x, int y, char** out);

/* 1 if inputs x0, x1 share an output with positive probability. */
rb_status rb_confusable(const rb_channel* w, int x0, int x1, int* out);

/* Adjacency-list text of the confusability graph, one vertex per line. */
rb_status rb_confusability_text(const rb_channel* w, char** out);

/* ---- exact game-theoretic quantities ------------------------------------ */

/* psi_inf and R_inf = log2(1/psi_inf), the sphere-packing finiteness
 * threshold. psi_out receives the exact rational; either out may be NULL. */
rb_status rb_r_inf(const rb_channel* w, char** psi_out, double* rate_out);

/* psi_fb from the feedback game; equals psi_inf by minimax. */
rb_status rb_psi_fb(const rb_channel* w, char** psi_out, double* rate_out);

/* Zero-error feedback capacity; psi_out is "1" when C0 = 0. */
rb_status rb_c0_fb(const rb_channel* w, char** psi_out, double* rate_out);

/* ---- capacity and error exponents --------------------------------------- */

rb_status rb_capacity(const rb_channel* w, double* out);

/* Critical rate; RB_ERR_DOMAIN at zero capacity. */
rb_status rb_r_crit(const rb_channel* w, double* out);

/* Random-coding exponent at rate R. */
rb_status rb_e_r(const rb_channel* w, double rate, double* out);

/* Sphere-packing exponent. *is_infinite is 1 when R <= R_inf (then *value
 * is meaningless); rho_cap <= 0 selects the default cap. */
rb_status rb_e_sp(const rb_channel* w, double rate, double rho_cap,
                  int* is_infinite, double* value);

/* Expurgated bound at block length k. Same conventions as rb_e_sp. */
rb_status rb_e_ex(const rb_channel* w, double rate, int k, double rho_cap,
                  int* is_infinite, double* value);

/* Exact expurgation threshold: alpha(G^k) and (1/k) log2 alpha. */
rb_status rb_r_ex(const rb_channel* w, int k, long* alpha_out,
                  double* rate_out);

/* ---- zero-error --------------------------------------------------------- */

/* alpha(G^n) and the block-n zero-error rate (1/n) log2 alpha. */
rb_status rb_c0_lower(const rb_channel* w, int n, long* alpha_out,
                      double* rate_out);

/* 1 iff some pair of inputs is non-confusable (C0 > 0). */
rb_status rb_c0_positive(const rb_channel* w, int* out);

/* ---- approximation sequences -------------------------------------------- */

#define RB_QUANTITY_R_INF 0
#define RB_QUANTITY_C0_FB 1

/* F_N (phi_out gets the exact smoothed game value) and the guaranteed gap
 * bound on psi_inf - phi_N. String outs may be NULL. */
rb_status rb_f_n(const rb_channel* w, int n, char** phi_out, double* value);
rb_status rb_phi_error_bound(const rb_channel* w, int n, char** bound_out,
                             double* value);

/* U_N and V_N, the feedback-side upper bounds. */
rb_status rb_u_n(const rb_channel* w, int n, double* value);
rb_status rb_v_n(const rb_channel* w, int n, double* value);

/* CSV trace "N,value,error_bound,target" for N = 1..n_max. */
rb_status rb_approx_trace_csv(const rb_channel* w, int quantity, int n_max,
                              char** csv_out);

/* Scans N = 1..budget for the first upper bound below lambda. *accepted is
 * 1 with *at_n set on success, 0 when the budget runs out (undetermined). */
rb_status rb_semi_decide_below(const rb_channel* w, int quantity,
                               double lambda, int budget, int* accepted,
                               int* at_n);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* RELBOUND_H_ */
