#ifndef OPPERT_OPPERT_H
#define OPPERT_OPPERT_H

/* C interface to the operator perturbation engine.
 *
 * Every function returns an oppert_status. On failure the message is
 * available from oppert_last_error() on the same thread. Strings handed out
 * through char** parameters must be released with oppert_string_free(). */

#ifdef __cplusplus
extern "C" {
#endif

#if defined(OPPERT_BUILDING_LIBRARY)
#define OPPERT_API __attribute__((visibility("default")))
#else
#define OPPERT_API
#endif

typedef enum {
  OPPERT_OK = 0,
  OPPERT_ERR_ARGUMENT = 1,   /* null pointer or out-of-range argument */
  OPPERT_ERR_PARSE = 2,      /* malformed config, term or value text */
  OPPERT_ERR_VALIDATION = 3, /* well-formed input describing an invalid problem */
  OPPERT_ERR_MISSING_VALUE = 4,
  OPPERT_ERR_ALGEBRA = 5,
  OPPERT_ERR_INTERNAL = 6
} oppert_status;

typedef struct oppert_config oppert_config;
typedef struct oppert_series oppert_series;

OPPERT_API const char* oppert_version(void);
OPPERT_API const char* oppert_last_error(void);
OPPERT_API void oppert_string_free(char* s);

OPPERT_API oppert_status oppert_config_from_preset(const char* name, int order, oppert_config** out);
OPPERT_API oppert_status oppert_config_parse(const char* text, oppert_config** out);
OPPERT_API void oppert_config_free(oppert_config* config);

OPPERT_API oppert_status oppert_config_set_order(oppert_config* config, int order);
OPPERT_API oppert_status oppert_config_set_format(oppert_config* config, const char* format);
/* Adds or overrides values, e.g. "hbar=1, kappa=5, u=0.6+0.8i". */
OPPERT_API oppert_status oppert_config_set_params(oppert_config* config, const char* params);
OPPERT_API oppert_status oppert_config_set_states(oppert_config* config, const char* states);
/* "text", "json" or "latex"; static storage. */
OPPERT_API const char* oppert_config_format(const oppert_config* config);

OPPERT_API oppert_status oppert_series_compute(const oppert_config* config, oppert_series** out);
OPPERT_API void oppert_series_free(oppert_series* series);
OPPERT_API int oppert_series_max_order(const oppert_series* series);
OPPERT_API oppert_status oppert_series_order_is_zero(const oppert_series* series, int order, int* out);
/* format may be NULL to use the config's format. */
OPPERT_API oppert_status oppert_series_render(const oppert_series* series, const char* format, char** out);
OPPERT_API oppert_status oppert_spectrum_render(const oppert_series* series, const char* format, char** out);

/* Runs the self-checks for scope (all, superops, structure, goldens, oracle). */
OPPERT_API oppert_status oppert_verify(const char* scope, int* failures, char** report);

#ifdef __cplusplus
}
#endif

#endif
