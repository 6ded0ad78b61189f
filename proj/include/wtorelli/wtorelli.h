#ifndef WTORELLI_H
#define WTORELLI_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(__GNUC__)
#define WT_API __attribute__((visibility("default")))
#else
#define WT_API
#endif

typedef enum wt_status {
    WT_OK = 0,
    WT_ERR_INVALID_ARGUMENT = 1,
    WT_ERR_PARSE = 2,
    WT_ERR_NOT_HOMOGENEOUS = 3,
    WT_ERR_NOT_QUASI_SMOOTH = 4,
    WT_ERR_NOT_FOUND = 5,
    WT_ERR_IO = 6,
    WT_ERR_INTERNAL = 7
} wt_status;

typedef enum wt_format { WT_FORMAT_TEXT = 0, WT_FORMAT_JSON = 1, WT_FORMAT_CSV = 2 } wt_format;

typedef struct wt_ring wt_ring;
typedef struct wt_report wt_report;

/* Weighted input. `equation` may be NULL, in which case a witness member is
   drawn deterministically from `seed`. */
typedef struct wt_input {
    const int* weights;
    size_t nweights;
    long degree;
    const char* equation;
    uint64_t seed;
} wt_input;

WT_API const char* wt_version(void);
WT_API const char* wt_status_string(wt_status s);
/* Message of the last failed call on this thread; "" if none. */
WT_API const char* wt_last_error(void);

/* Jacobian ring of a weighted-homogeneous polynomial. */
WT_API wt_status wt_ring_create(const int* weights, size_t nweights, long degree, const char* equation,
                                wt_ring** out);
WT_API void wt_ring_destroy(wt_ring* ring);
WT_API wt_status wt_ring_dim(const wt_ring* ring, long k, uint64_t* out);
WT_API wt_status wt_ring_sigma(const wt_ring* ring, long* out);
WT_API wt_status wt_ring_is_quasi_smooth(const wt_ring* ring, int* out);

WT_API wt_status wt_cmd_hilbert(const int* weights, size_t nweights, long degree, wt_report** out);
WT_API wt_status wt_cmd_quasismooth(const wt_input* in, wt_report** out);
/* dimension < 0 means #weights - 2. */
WT_API wt_status wt_cmd_hodge(const wt_input* in, int dimension, wt_report** out);
/* Either family_id > 0 with in->weights NULL (embedded table), or explicit
   weights; family_id then only labels the report. */
WT_API wt_status wt_cmd_classify(int family_id, const wt_input* in, wt_report** out);
/* fixture_path NULL classifies the embedded families 96-130. */
WT_API wt_status wt_cmd_classify_all(const char* fixture_path, uint64_t seed, wt_report** out);
WT_API wt_status wt_cmd_kernel(int family_id, const wt_input* in, wt_report** out);
WT_API wt_status wt_cmd_tower(int family_id, const wt_input* in, int levels, wt_report** out);
WT_API wt_status wt_cmd_tower_table(uint64_t seed, wt_report** out);

/* Owned by the report; valid until wt_report_destroy. */
WT_API const char* wt_report_render(wt_report* report, wt_format format);
/* 0 when the command surfaced a disagreement (classify --all). */
WT_API int wt_report_passed(const wt_report* report);
/* Records the invoking argv in the report's command echo. */
WT_API wt_status wt_report_set_argv(wt_report* report, int argc, const char* const* argv);
WT_API void wt_report_destroy(wt_report* report);

#ifdef __cplusplus
}
#endif

#endif
