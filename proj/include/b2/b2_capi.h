#ifndef B2_CAPI_H
#define B2_CAPI_H

#include <stddef.h>

#if defined(B2_BUILDING_LIBRARY)
#define B2_API __attribute__((visibility("default")))
#else
#define B2_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct b2_base b2_base; /* real algebraic base in (1, 2] */
typedef struct b2_seq b2_seq;   /* eventually periodic 0/1 sequence */
typedef struct b2_text b2_text; /* owned result text */

typedef enum {
  B2_OK = 0,
  B2_ERR_DOMAIN = 2,
  B2_ERR_NOT_FOUND = 3,
  B2_ERR_PARSE = 4,
  B2_ERR_UNSUPPORTED = 5,
  B2_ERR_NO_ROOT_BY_CASE = 6,
  B2_ERR_NULL = 7,
  B2_ERR_INTERNAL = 8
} b2_status;

typedef enum { B2_FORMAT_JSON = 0, B2_FORMAT_CSV = 1, B2_FORMAT_PLAIN = 2 } b2_format;

/* Message of the last failed call on this thread ("" if none). */
B2_API const char* b2_last_error(void);
B2_API const char* b2_version(void);

B2_API const char* b2_text_get(const b2_text* t);
B2_API void b2_text_free(b2_text* t);

/* Bases. Specs: "poly:[c0,..,cd]@[lo,hi]", "alpha:SEQ" or a rational. */
B2_API b2_status b2_base_parse(const char* spec, b2_base** out);
B2_API b2_status b2_base_from_alpha(const b2_seq* alpha, b2_base** out);
/* q_n of the component generated by gen. */
B2_API b2_status b2_base_ladder(const char* gen, unsigned n, b2_base** out);
/* Dyadic upper approximant of q_KL with the given number of bits. */
B2_API b2_status b2_base_kl_upper(unsigned bits, b2_base** out);
B2_API void b2_base_free(b2_base* q);
B2_API b2_status b2_base_decimal(const b2_base* q, int digits, b2_text** out);
B2_API b2_status b2_base_json(const b2_base* q, int digits, b2_text** out);
/* *out = -1, 0, 1 */
B2_API b2_status b2_base_cmp(const b2_base* a, const b2_base* b, int* out);

B2_API b2_status b2_seq_parse(const char* text, b2_seq** out);
B2_API void b2_seq_free(b2_seq* s);
B2_API b2_status b2_seq_str(const b2_seq* s, b2_text** out);

/* Operations. Text results are JSON unless a format argument says otherwise. */
B2_API b2_status b2_alpha_digits(const b2_base* q, size_t n, b2_text** out);
B2_API b2_status b2_beta_digits(const b2_base* q, size_t n, b2_text** out);
B2_API b2_status b2_classify(const b2_base* q, int digits, b2_text** out);
B2_API b2_status b2_omega(const char* gen, unsigned n, b2_text** out);
B2_API b2_status b2_ladder(const char* gen, unsigned count, int digits, b2_format fmt, b2_text** out);
/* Roots of f_{c,d} in [lo, hi], each as a witness object; JSON array. */
B2_API b2_status b2_solve(const b2_seq* c, const b2_seq* d, const b2_base* lo, const b2_base* hi, int digits,
                          b2_text** out);
/* Exact sign of f_{c,d} at q. */
B2_API b2_status b2_f_sign(const b2_seq* c, const b2_seq* d, const b2_base* q, int* out);
B2_API b2_status b2_enum_b2(unsigned n, unsigned jmax, int digits, b2_format fmt, b2_text** out);
B2_API b2_status b2_min_derived(unsigned j, unsigned jmax, unsigned nmax, int digits, b2_text** out);
B2_API b2_status b2_entropy(const b2_base* q, size_t nmax, int digits, b2_text** out);
B2_API b2_status b2_dim_bound(const b2_base* q, const char* delta, int digits, b2_text** out);
/* x: a rational "p/q" or "seq:SEQ" for the value of SEQ in base q. */
B2_API b2_status b2_count(const char* x, const b2_base* q, size_t cap, size_t depth, b2_text** out);
/* prop62_n == 0: witness for the base with alpha (a^+ reflect(a^+))^inf.
   prop62_n >= 2: the pair for interval n of the component of gen. */
B2_API b2_status b2_witness(const char* gen, unsigned prop62_n, int digits, b2_text** out);

#ifdef __cplusplus
}
#endif

#endif
