/*
 * spectral-wl - Copyright 2026 The spectral-wl Authors.
 * SPDX-License-Identifier: Apache-2.0
 */

#ifndef SPECTRAL_WL_H_
#define SPECTRAL_WL_H_

#include <stddef.h>

#if defined(_WIN32)
#define SWL_API __declspec(dllexport)
#else
#define SWL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum swl_status {
  SWL_OK = 0,
  SWL_ERR_PARSE = 1,    /* malformed graph6 or other text input */
  SWL_ERR_DOMAIN = 2,   /* input outside an operation's domain */
  SWL_ERR_NUMERIC = 3,  /* non-finite value or failed decomposition */
  SWL_ERR_USAGE = 4,    /* bad spec, config key or argument */
  SWL_ERR_INTERNAL = 5, /* violated internal invariant */
  SWL_ERR_IO = 6,       /* file could not be written */
  SWL_ERR_NULL = 7      /* required pointer argument was NULL */
} swl_status;

typedef struct swl_graph swl_graph;
typedef struct swl_config swl_config;

/* Strings returned through char** out-parameters are owned by the caller and
 * released with swl_string_free. */
SWL_API void swl_string_free(char* s);

SWL_API const char* swl_version(void);
/* Message of the last failed call on this thread; "" if none. */
SWL_API const char* swl_last_error(void);
SWL_API const char* swl_status_name(swl_status status);

SWL_API swl_status swl_graph_from_graph6(const char* text, swl_graph** out);
SWL_API swl_status swl_graph_to_graph6(const swl_graph* g, char** out);
SWL_API void swl_graph_free(swl_graph* g);
SWL_API int swl_graph_order(const swl_graph* g);
SWL_API int swl_graph_size(const swl_graph* g);

/* *distinguished is 1 if the stable signatures of g and h differ under the
 * algorithm spec (e.g. "epwl:Lhat"), else 0. detail_json may be NULL.
 * digits < 0 and eig_rel_tol <= 0 select the defaults. */
SWL_API swl_status swl_distinguishes(const char* spec, const swl_graph* g, const swl_graph* h, int digits,
                                     double eig_rel_tol, int* distinguished, char** detail_json);

/* Distance matrix as CSV, one line per row; spec e.g. "rd", "prd:w=1,0.5". */
SWL_API swl_status swl_distances_csv(const char* distance_spec, const swl_graph* g, char** out);

/* Fürer graph of base with the comma-separated twist edges "u-v,..." (NULL or
 * "" for none). */
SWL_API swl_status swl_furer(const swl_graph* base, const char* twist_edges, swl_graph** out);

/* k-th token graph. */
SWL_API swl_status swl_token_graph(const swl_graph* g, int k, swl_graph** out);

SWL_API swl_status swl_config_new(swl_config** out);
SWL_API void swl_config_free(swl_config* c);
SWL_API swl_status swl_config_set(swl_config* c, const char* key, const char* value);
/* Reads key=value lines from path over the current values. */
SWL_API swl_status swl_config_load(swl_config* c, const char* path);
/* Applies SWL_<KEY> environment overrides. */
SWL_API swl_status swl_config_apply_env(swl_config* c);
SWL_API swl_status swl_config_serialize(const swl_config* c, char** out);

/* Hierarchy report as JSON and CSV; either out-parameter may be NULL. */
SWL_API swl_status swl_scan(const swl_config* c, char** json, char** csv);
/* *passed is 1 if every property holds. report receives text (as_json = 0)
 * or JSON (as_json = 1). */
SWL_API swl_status swl_verify(const swl_config* c, int as_json, int* passed, char** report);
/* Witness lines and a summary comment; *found counts witnesses. */
SWL_API swl_status swl_hunt(const swl_config* c, size_t* found, char** report);

#ifdef __cplusplus
}
#endif

#endif /* SPECTRAL_WL_H_ */
