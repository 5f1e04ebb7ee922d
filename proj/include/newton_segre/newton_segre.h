/* C interface to the newton_segre library. Strings returned through char**
 * out-parameters are heap-allocated and must be released with
 * nsg_string_free. On failure the out-parameter is left untouched and
 * nsg_last_error() describes the error for the calling thread. */
#ifndef NEWTON_SEGRE_H
#define NEWTON_SEGRE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define NSG_API __declspec(dllexport)
#else
#define NSG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct nsg_ideal nsg_ideal;

typedef enum nsg_status {
  NSG_OK = 0,
  NSG_ZERO_GENERATOR,
  NSG_DIMENSION_MISMATCH,
  NSG_NEGATIVE_COORDINATE,
  NSG_AMBIENT_TOO_SMALL,
  NSG_NON_POSITIVE_PARAMETER,
  NSG_NON_POSITIVE_ARGUMENT,
  NSG_CUTOFF_TOO_SMALL,
  NSG_PRECISION_UNREACHABLE,
  NSG_DEGENERATE_FACET,
  NSG_PARSE_ERROR,
  NSG_INVALID_ARGUMENT,
  NSG_OVERFLOW,
  NSG_INTERNAL_ERROR
} nsg_status;

typedef enum nsg_mode { NSG_MODE_MEMBERSHIP = 0, NSG_MODE_LCT = 1 } nsg_mode;

typedef struct nsg_estimate_config {
  int64_t m;
  const char* x;     /* comma-separated positive rationals, one per variable */
  nsg_mode mode;
  int64_t cutoff;    /* 0: default 10*m^2 */
  int exact;         /* nonzero: exact rational summation */
  unsigned threads;  /* 0 is treated as 1 */
  double tolerance;  /* > 0: fail if the truncation tail exceeds it */
} nsg_estimate_config;

/* Machine-readable name, e.g. "CutoffTooSmall". */
NSG_API const char* nsg_status_name(nsg_status status);
NSG_API const char* nsg_last_error(void);
NSG_API void nsg_string_free(char* s);

/* Text ("x1^2, x1*x2") or JSON ({"n":2,"generators":[[2,0],[1,1]]}).
 * n_override = 0 infers n from the highest variable index. */
NSG_API nsg_status nsg_ideal_parse(const char* text, size_t n_override, nsg_ideal** out);
/* `exponents` holds `count` rows of length n. */
NSG_API nsg_status nsg_ideal_from_exponents(size_t n, size_t count, const int64_t* exponents, nsg_ideal** out);
NSG_API void nsg_ideal_free(nsg_ideal* ideal);
NSG_API size_t nsg_ideal_dimension(const nsg_ideal* ideal);
NSG_API nsg_status nsg_ideal_to_text(const nsg_ideal* ideal, char** out);
NSG_API nsg_status nsg_ideal_to_json(const nsg_ideal* ideal, char** out);

/* {"lct":"p/q","sigma":"q/p"} */
NSG_API nsg_status nsg_lct_json(const nsg_ideal* ideal, char** out);
/* ambient_dim < 0 uses n. */
NSG_API nsg_status nsg_segre_json(const nsg_ideal* ideal, int ambient_dim, char** out);
NSG_API nsg_status nsg_diagram_json(const nsg_ideal* ideal, char** out);
NSG_API nsg_status nsg_diagram_svg(const nsg_ideal* ideal, char** out);

NSG_API nsg_status nsg_estimate_json(const nsg_ideal* ideal, const nsg_estimate_config* config, char** out);
NSG_API nsg_status nsg_convergence_csv(const nsg_ideal* ideal, const nsg_estimate_config* config,
                                       const int64_t* m_list, size_t count, char** out);

/* identity: "power" (ell, X), "two-var" (ell, X1, X2), "diagonal"
 * (ell1, ell2, X1, X2); params as "key=value,..." with optional "cutoff"
 * and "tol". CSV header m,value,target,abs_error. */
NSG_API nsg_status nsg_verify_csv(const char* identity, const char* params, const int64_t* m_list, size_t count,
                                  char** out);

NSG_API nsg_status nsg_polygamma(int r, double x, double* out);

#ifdef __cplusplus
}
#endif

#endif
