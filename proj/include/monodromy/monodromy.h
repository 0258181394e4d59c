#ifndef MONODROMY_MONODROMY_H
#define MONODROMY_MONODROMY_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define MD_API __declspec(dllexport)
#else
#define MD_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum md_status {
    MD_OK = 0,
    MD_INVALID_ARGUMENT = 1,
    MD_CONTOUR_HITS_SINGULARITY,
    MD_NON_INTEGRABLE_ENDPOINT,
    MD_GAMMA_POLE,
    MD_OUT_OF_DISK,
    MD_STEP_VIOLATION,
    MD_PATH_TOO_CLOSE,
    MD_ACCURACY_LOSS,
    MD_INVALID_ANNULUS,
    MD_UNSUPPORTED_DEPTH,
    MD_DOMAIN_ERROR,
    MD_UNSUPPORTED_DEGENERATE,
    MD_UNKNOWN_EXPERIMENT,
    MD_IO,
    MD_PARSE,
    MD_INTERNAL = 99
} md_status;

typedef enum md_format { MD_FORMAT_JSON = 0, MD_FORMAT_CSV = 1, MD_FORMAT_HUMAN = 2 } md_format;

typedef struct md_complex {
    double re;
    double im;
} md_complex;

typedef struct md_config md_config;
typedef struct md_report md_report;
typedef struct md_series md_series;

/* Message for the last failing call on this thread; never NULL. */
MD_API const char* md_last_error(void);
MD_API const char* md_status_name(md_status s);
MD_API const char* md_version(void);

/* Experiments */
MD_API size_t md_experiment_count(void);
MD_API const char* md_experiment_name(size_t i);
MD_API const char* md_experiment_description(size_t i);

MD_API md_status md_config_new(const char* experiment, md_config** out);
MD_API void md_config_free(md_config* c);
MD_API md_status md_config_set_seed(md_config* c, uint64_t seed);
MD_API md_status md_config_set_samples(md_config* c, int samples);
MD_API md_status md_config_set_coeffs(md_config* c, size_t m);
MD_API md_status md_config_set_tol(md_config* c, const char* key, double value);
MD_API md_status md_config_set_out(md_config* c, const char* path);
/* Merges a JSON object; keys absent from it are unchanged. */
MD_API md_status md_config_merge_json(md_config* c, const char* json_text);

MD_API md_status md_run(const md_config* c, md_report** out);
MD_API void md_report_free(md_report* r);
MD_API int md_report_pass(const md_report* r);
MD_API size_t md_report_case_count(const md_report* r);
MD_API size_t md_report_failed_count(const md_report* r);
MD_API double md_report_duration_ms(const md_report* r);
/* The returned string lives until the report is freed or rendered again. */
MD_API md_status md_report_render(md_report* r, md_format f, const char** text);
MD_API md_status md_report_write(const md_report* r, md_format f, const char* path);

/* Coefficient series */
MD_API md_status md_series_binomial(md_complex a, size_t m, md_series** out);
MD_API md_status md_series_hadamard(const md_series* a, const md_series* b, md_series** out);
MD_API md_status md_series_load_csv(const char* path, md_series** out);
MD_API md_status md_series_save_csv(const md_series* s, const char* path);
MD_API void md_series_free(md_series* s);
MD_API size_t md_series_size(const md_series* s);
MD_API md_status md_series_coeff(const md_series* s, size_t n, md_complex* out);
MD_API md_status md_series_eval(const md_series* s, md_complex z, md_complex* out);

/* Scalar evaluators */
MD_API md_status md_gamma(md_complex z, md_complex* out);
MD_API md_status md_hyp2f1(md_complex a, md_complex b, md_complex c, md_complex z, md_complex* out);
MD_API md_status md_polylog(int k, md_complex z, md_complex* out);
MD_API md_status md_elliptic_k_norm(double ksq, double* out);

#ifdef __cplusplus
}
#endif

#endif
