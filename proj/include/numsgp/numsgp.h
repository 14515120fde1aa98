/*
 * C interface to the numsgp library.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_destroy function. Every fallible function returns a
 * numsgp_status; on failure numsgp_last_error() describes the problem for
 * the calling thread until its next library call.
 *
 * Functions that produce integer lists follow one convention: they always
 * store the full length in *length, copy min(length, capacity) values into
 * out, and return NUMSGP_ERR_BUFFER_TOO_SMALL if capacity < length. Passing
 * out = NULL with capacity = 0 is a size query and returns NUMSGP_OK.
 *
 * Handles are immutable; concurrent calls on the same handle are safe.
 */
#ifndef NUMSGP_NUMSGP_H
#define NUMSGP_NUMSGP_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define NUMSGP_API __declspec(dllexport)
#else
#  define NUMSGP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum numsgp_status {
  NUMSGP_OK = 0,
  NUMSGP_ERR_INVALID_ARGUMENT = 1,
  NUMSGP_ERR_EMPTY_INPUT = 2,
  NUMSGP_ERR_NON_COPRIME = 3,
  NUMSGP_ERR_TOO_LARGE = 4,
  NUMSGP_ERR_IS_TRIVIAL = 5,
  NUMSGP_ERR_NOT_MAX_GENERATED = 6,
  NUMSGP_ERR_NOT_SYMMETRIC = 7,
  NUMSGP_ERR_EMBEDDING_DIM_TOO_SMALL = 8,
  NUMSGP_ERR_NOT_A_GAP_SET = 9,
  NUMSGP_ERR_GAP_TOO_SMALL = 10,
  NUMSGP_ERR_BAD_PARAMETERS = 11,
  NUMSGP_ERR_BOUND_TOO_LARGE = 12,
  NUMSGP_ERR_UNKNOWN_PROPERTY = 13,
  NUMSGP_ERR_BUFFER_TOO_SMALL = 14,
  NUMSGP_ERR_INTERNAL = 15
} numsgp_status;

typedef struct numsgp_semigroup numsgp_semigroup;
typedef struct numsgp_campaign numsgp_campaign;

typedef struct numsgp_rational {
  int64_t num;
  int64_t den; /* > 0, lowest terms */
} numsgp_rational;

typedef struct numsgp_invariants {
  int64_t multiplicity;
  int64_t embedding_dimension;
  int64_t genus;
  int64_t frobenius; /* -1 for N */
  int64_t conductor;
  int is_trivial;
} numsgp_invariants;

typedef enum numsgp_list_kind {
  NUMSGP_LIST_GENERATORS = 0,
  NUMSGP_LIST_GAPS = 1,
  NUMSGP_LIST_SPORADIC = 2,         /* S != N */
  NUMSGP_LIST_APERY = 3,            /* ascending */
  NUMSGP_LIST_PSEUDO_FROBENIUS = 4, /* S != N */
  NUMSGP_LIST_CANONICAL_OFFSETS = 5 /* S != N */
} numsgp_list_kind;

typedef struct numsgp_wilf_info {
  int64_t e, g, frobenius, m;
  numsgp_rational lhs;    /* g / (F + 1) */
  numsgp_rational rhs;    /* (e - 1) / e */
  numsgp_rational margin; /* rhs - lhs */
  int holds;
  int sporadic_form; /* e (F + 1 - g) >= F + 1 */
} numsgp_wilf_info;

typedef struct numsgp_reflected_gap_info {
  int cond_i;   /* a_e = 2g + 1 */
  int cond_ii;  /* m + RG(F, S) = Ap(S) \ {0, F + m} */
  int cond_iii; /* a_e = F + m and |RG(F, S)| = m - 2 */
  int ae_equals_f_plus_m;
  size_t rg_f_count;
  size_t rg_f_plus_m_count;
} numsgp_reflected_gap_info;

typedef enum numsgp_reflected_gap_list {
  NUMSGP_RG_F = 0,
  NUMSGP_RG_F_PLUS_M = 1,
  NUMSGP_RG_APERY_MINUS = 2
} numsgp_reflected_gap_list;

typedef struct numsgp_inequality_info {
  int ratio_form;
  int product_form;
  int genus_form;
  int symmetric_form;
  int wilf;
} numsgp_inequality_info;

typedef struct numsgp_genus_bound {
  int frobenius_exceeds_multiplicity;
  int counting_bound; /* e + g >= 2m - 1 */
  int bound_holds;    /* g >= 1 + (m - 2) e / (e - 1) */
  numsgp_rational bound;
} numsgp_genus_bound;

typedef enum numsgp_check_status {
  NUMSGP_CHECK_NOT_APPLICABLE = 0,
  NUMSGP_CHECK_PASS = 1,
  NUMSGP_CHECK_FAIL = 2
} numsgp_check_status;

typedef enum numsgp_count_kind {
  NUMSGP_COUNT_ALL = 0,
  NUMSGP_COUNT_MAX_GENERATED = 1,
  NUMSGP_COUNT_SYMMETRIC = 2
} numsgp_count_kind;

/* Library information and configuration. */
NUMSGP_API const char* numsgp_version(void);
NUMSGP_API const char* numsgp_status_name(numsgp_status status);
NUMSGP_API const char* numsgp_last_error(void);
NUMSGP_API int64_t numsgp_max_conductor(void);
NUMSGP_API numsgp_status numsgp_set_max_conductor(int64_t cap);
NUMSGP_API int numsgp_max_genus_cap(void);

/* Construction and lifetime. */
NUMSGP_API numsgp_status numsgp_semigroup_create(const int64_t* generators, size_t count,
                                                 numsgp_semigroup** out);
NUMSGP_API numsgp_status numsgp_semigroup_from_gaps(const int64_t* gaps, size_t count,
                                                    numsgp_semigroup** out);
NUMSGP_API numsgp_status numsgp_semigroup_clone(const numsgp_semigroup* s,
                                                numsgp_semigroup** out);
NUMSGP_API void numsgp_semigroup_destroy(numsgp_semigroup* s);

/* Core queries. */
NUMSGP_API numsgp_status numsgp_semigroup_invariants(const numsgp_semigroup* s,
                                                     numsgp_invariants* out);
NUMSGP_API int numsgp_semigroup_contains(const numsgp_semigroup* s, int64_t n);
NUMSGP_API int numsgp_semigroup_equal(const numsgp_semigroup* a, const numsgp_semigroup* b);
NUMSGP_API numsgp_status numsgp_semigroup_list(const numsgp_semigroup* s, numsgp_list_kind kind,
                                               int64_t* out, size_t capacity, size_t* length);
NUMSGP_API numsgp_status numsgp_type_number(const numsgp_semigroup* s, int64_t* out);
NUMSGP_API numsgp_status numsgp_is_symmetric(const numsgp_semigroup* s, int* out);
NUMSGP_API numsgp_status numsgp_is_symmetric_by_reflection(const numsgp_semigroup* s, int* out);

/* Semigroups with a_e = 2g + 1. */
NUMSGP_API numsgp_status numsgp_is_max_generated(const numsgp_semigroup* s, int* out);
/* Pairs (n, 2g+1-n) flattened: out[2i], out[2i+1]; *length counts values. */
NUMSGP_API numsgp_status numsgp_reflection_map(const numsgp_semigroup* s, int64_t* out,
                                               size_t capacity, size_t* length);
NUMSGP_API numsgp_status numsgp_to_symmetric(const numsgp_semigroup* s, numsgp_semigroup** out);
NUMSGP_API numsgp_status numsgp_from_symmetric(const numsgp_semigroup* s,
                                               numsgp_semigroup** out);
NUMSGP_API numsgp_status numsgp_close_largest_gap(const numsgp_semigroup* s,
                                                  numsgp_semigroup** out);
NUMSGP_API numsgp_status numsgp_interval_family(int64_t m, int64_t f, numsgp_semigroup** out);
NUMSGP_API numsgp_status numsgp_frobenius_formula_check(const numsgp_semigroup* s, int* out);
NUMSGP_API numsgp_status numsgp_pf_formula_check(const numsgp_semigroup* s, int* out);
NUMSGP_API numsgp_status numsgp_reflected_gaps(const numsgp_semigroup* s, int64_t n,
                                               int64_t* out, size_t capacity, size_t* length);
NUMSGP_API numsgp_status numsgp_reflected_gap_report(const numsgp_semigroup* s,
                                                     numsgp_reflected_gap_info* out);
NUMSGP_API numsgp_status numsgp_reflected_gap_report_list(const numsgp_semigroup* s,
                                                          numsgp_reflected_gap_list which,
                                                          int64_t* out, size_t capacity,
                                                          size_t* length);
NUMSGP_API numsgp_status numsgp_wilf_report(const numsgp_semigroup* s, numsgp_wilf_info* out);
NUMSGP_API numsgp_status numsgp_inequality_chain(const numsgp_semigroup* s,
                                                 numsgp_inequality_info* out);
NUMSGP_API numsgp_status numsgp_genus_lower_bound(const numsgp_semigroup* s,
                                                  numsgp_genus_bound* out);
NUMSGP_API numsgp_status numsgp_is_distinguished(const numsgp_semigroup* s, const int64_t* d,
                                                 size_t count, int* out);
NUMSGP_API numsgp_status numsgp_distinguished_set_for_closed(const numsgp_semigroup* s,
                                                             int64_t* out, size_t capacity,
                                                             size_t* length);

/* Named property checks. */
NUMSGP_API size_t numsgp_property_count(void);
NUMSGP_API const char* numsgp_property_name(size_t index);
NUMSGP_API const char* numsgp_property_statement(size_t index);
/* detail receives a NUL-terminated failure description, truncated to
 * detail_capacity; it may be NULL. */
NUMSGP_API numsgp_status numsgp_check_property(const numsgp_semigroup* s, const char* property,
                                               numsgp_check_status* result, char* detail,
                                               size_t detail_capacity);

/* Exhaustive campaigns. properties is "all" or a comma-separated list. */
NUMSGP_API numsgp_status numsgp_campaign_run(int max_genus, const char* properties,
                                             unsigned jobs, numsgp_campaign** out);
NUMSGP_API void numsgp_campaign_destroy(numsgp_campaign* c);
NUMSGP_API int numsgp_campaign_passed(const numsgp_campaign* c);
NUMSGP_API int numsgp_campaign_max_genus(const numsgp_campaign* c);
NUMSGP_API double numsgp_campaign_wall_time_ms(const numsgp_campaign* c);
NUMSGP_API numsgp_status numsgp_campaign_counts(const numsgp_campaign* c, numsgp_count_kind kind,
                                                uint64_t* out, size_t capacity, size_t* length);
NUMSGP_API size_t numsgp_campaign_failure_count(const numsgp_campaign* c);
/* Pointers stay valid until the campaign is destroyed. */
NUMSGP_API numsgp_status numsgp_campaign_failure(const numsgp_campaign* c, size_t index,
                                                 const char** property, int64_t* genus,
                                                 const int64_t** witness, size_t* witness_length,
                                                 const char** detail);
/* NUL-terminated one-line JSON; *length excludes the terminator. */
NUMSGP_API numsgp_status numsgp_campaign_json(const numsgp_campaign* c, int include_timing,
                                              char* out, size_t capacity, size_t* length);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* NUMSGP_NUMSGP_H */
