/* C interface to the berkline toolkit.
 *
 * Every function returns a bk_status; on failure the message is available
 * from bk_last_error() (per thread, valid until the next call). Objects are
 * opaque handles released with their *_free function. Strings returned
 * through char** are owned by the caller and released with bk_string_free.
 * JSON inputs use the same schemas the functions emit. */
#ifndef BERKLINE_H
#define BERKLINE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define BK_API __declspec(dllexport)
#else
#define BK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum bk_status {
    BK_OK = 0,
    BK_E_INVALID_ARGUMENT,
    BK_E_PARSE,
    BK_E_MIXED_FIELDS,
    BK_E_DIVISION_BY_ZERO,
    BK_E_OUT_OF_DOMAIN,
    BK_E_NOT_IN_IMAGE,
    BK_E_NOT_INVERTIBLE,
    BK_E_SKELETON_MISSES_PATH,
    BK_E_TIME_OUT_OF_RANGE,
    BK_E_NON_SPLIT_FUNCTION,
    BK_E_DENOMINATOR_VANISHES,
    BK_E_INCOMPLETE_ROOTS,
    BK_E_NON_SPLIT_DERIVATIVE,
    BK_E_DIVISOR_TOO_SMALL,
    BK_E_CRITERION_FAILS,
    BK_E_PRECISION_LOSS,
    BK_E_INTERNAL
} bk_status;

typedef enum bk_format { BK_FORMAT_JSON = 0, BK_FORMAT_DOT = 1, BK_FORMAT_TABLE = 2 } bk_format;

typedef struct bk_field bk_field;
typedef struct bk_point bk_point;
typedef struct bk_divisor bk_divisor;
typedef struct bk_poly bk_poly;
typedef struct bk_skeleton bk_skeleton;

BK_API const char* bk_last_error(void);
BK_API const char* bk_status_name(bk_status s);
BK_API void bk_string_free(char* s);

/* Base fields: (Q, v_p) or (Q(t), v_t). */
BK_API bk_status bk_field_padic(unsigned long p, bk_field** out);
BK_API bk_status bk_field_tadic(bk_field** out);
BK_API void bk_field_free(bk_field* f);

/* Points: {"pt":"inf"} or {"pt":"eta","center":c,"w":w}. */
BK_API bk_status bk_point_parse(const bk_field* f, const char* json, bk_point** out);
BK_API bk_status bk_point_json(const bk_point* x, char** out);
BK_API void bk_point_free(bk_point* x);
BK_API bk_status bk_point_eq(const bk_point* x, const bk_point* y, int* out);
BK_API bk_status bk_point_leq(const bk_point* x, const bk_point* y, int* out);
BK_API bk_status bk_point_join(const bk_point* x, const bk_point* y, bk_point** out);
BK_API bk_status bk_point_inv(const bk_point* x, bk_point** out);

/* Divisors: list of elements, "inf" or simple point objects. */
BK_API bk_status bk_divisor_parse(const bk_field* f, const char* json, bk_divisor** out);
BK_API bk_status bk_divisor_json(const bk_divisor* d, char** out);
BK_API void bk_divisor_free(bk_divisor* d);

/* Polynomials: coefficient list, low degree first. */
BK_API bk_status bk_poly_parse(const bk_field* f, const char* json, bk_poly** out);
BK_API void bk_poly_free(bk_poly* p);

/* Skeleta. roots_json (may be NULL) maps fibers to roots:
 * [{"value": d, "roots": [{"root": a, "mult": m}, ...]}, ...]. */
BK_API bk_status bk_skeleton_hull(const bk_divisor* d, bk_skeleton** out);
BK_API bk_status bk_skeleton_lifted(const bk_poly* phi, const bk_divisor* d, const char* roots_json,
                                    bk_skeleton** out);
BK_API bk_status bk_skeleton_render(const bk_skeleton* s, bk_format fmt, char** out);
BK_API bk_status bk_skeleton_contains(const bk_skeleton* s, const bk_point* x, int* out);
BK_API void bk_skeleton_free(bk_skeleton* s);
BK_API bk_status bk_project(const bk_point* x, const bk_skeleton* s, bk_point** out);

/* Retraction h_D. Times are exponent strings ("0/1" is time 1, "inf" time 0). */
BK_API bk_status bk_tau(const bk_divisor* d, const bk_point* x, char** out);
BK_API bk_status bk_retract(const bk_divisor* d, const char* t, const bk_point* x, bk_point** out);
BK_API bk_status bk_trajectory(const bk_divisor* d, const bk_point* x, bk_format fmt, char** out);
/* Batch form over a JSON list of points. With t == NULL each entry carries
 * tau, endpoint and trajectory; otherwise the point h_D(t, x). */
BK_API bk_status bk_retract_points(const bk_divisor* d, const char* points_json, const char* t, bk_format fmt,
                                   char** out);

/* Polynomial maps. */
BK_API bk_status bk_image(const bk_poly* phi, const bk_point* x, bk_point** out);
BK_API bk_status bk_image_rational(const bk_poly* num, const bk_poly* den, const bk_point* x, bk_point** out);
BK_API bk_status bk_radius_map(const bk_poly* phi, const char* center_json, char** out);
/* roots_json (may be NULL): roots of phi - b as [{"root": a, "mult": m}, ...]. */
BK_API bk_status bk_preimage(const bk_poly* phi, const bk_point* y, const char* roots_json, char** out);
BK_API bk_status bk_fibers(const bk_poly* phi, const char* center_json, const char* roots_json, bk_format fmt,
                           char** out);

/* Lifting along phi. */
BK_API bk_status bk_required_divisor(const bk_poly* phi, const bk_divisor* extra, bk_divisor** out);
BK_API bk_status bk_lift(const bk_poly* phi, const bk_divisor* d, const char* t, const bk_point* x, bk_point** out);
/* Seeded grid of n_points x n_times samples; emits {"checked": n, "failed": [...]}. */
BK_API bk_status bk_verify_square(const bk_poly* phi, const bk_divisor* d, size_t n_points, size_t n_times,
                                  uint64_t seed, char** out);

/* Roots over Q_p of a polynomial with rational coefficients. */
BK_API bk_status bk_padic_roots(const bk_poly* f, unsigned long p, long precision, char** out);

#ifdef __cplusplus
}
#endif

#endif
