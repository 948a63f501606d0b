#ifndef LPC_H
#define LPC_H

/* C interface to the Lorentzian partner-curve library.
 *
 * Handles are opaque and single-owner; every *_create has a *_destroy.
 * Functions return LPC_OK on success; on failure lpc_last_error() returns a
 * thread-local message describing what went wrong. Strings returned through
 * char** outputs are heap copies released with lpc_string_free. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lpc_status {
  LPC_OK = 0,
  LPC_ERR_INVALID_ARGUMENT = 1,
  LPC_ERR_UNKNOWN_CURVE = 2,
  LPC_ERR_CASE_MISMATCH = 3,
  LPC_ERR_NUMERIC = 4,
  LPC_ERR_IO = 5,
  LPC_ERR_INTERNAL = 6
} lpc_status;

typedef struct lpc_curve lpc_curve;
typedef struct lpc_report lpc_report;

const char* lpc_version(void);
const char* lpc_last_error(void);
void lpc_string_free(char* s);

/* Catalog listing as JSON. */
lpc_status lpc_catalog_json(char** out_json);

/* Build a catalog curve sampled on n intervals (n + 1 nodes, n >= 16).
 * params_json may be NULL or a JSON object of numeric parameters. */
lpc_status lpc_curve_create(const char* name, const char* params_json, size_t n,
                            lpc_curve** out);

/* Integrate the partner of a donor curve. kind is one of "evolute",
 * "mannheim", "bertrand"; case_id one of "i", "ii", "iii". */
lpc_status lpc_partner_create(const lpc_curve* donor, const char* kind, const char* case_id,
                              double c0, double theta, lpc_curve** out);

void lpc_curve_destroy(lpc_curve* c);

lpc_status lpc_curve_node_count(const lpc_curve* c, size_t* out_count);

/* Copy sampled data into caller buffers; any pointer may be NULL to skip the
 * column. s, kappa, tau need count doubles; pos, t, n, b need 3 * count laid
 * out as x1, x2, x3 per node. Frame columns require a well-defined frame. */
lpc_status lpc_curve_samples(const lpc_curve* c, double* s, double* pos, double* t, double* n,
                             double* b, double* kappa, double* tau);

/* Causal type as a static string: "timelike", "spacelike_type1",
 * "spacelike_type2". */
lpc_status lpc_curve_type(const lpc_curve* c, const char** out_type);

lpc_status lpc_curve_export_csv(const lpc_curve* c, const char* path);

/* Project curves onto a coordinate plane ("x1x2", "x1x3", "x2x3") and write
 * an SVG. labels may be NULL to use the curves' own names. */
lpc_status lpc_export_svg(const lpc_curve* const* curves, const char* const* labels,
                          size_t count, const char* plane, const char* path);

/* Construct the partner prescribed by kind/case_id/c0/theta and check every
 * relation it must satisfy. options_json may be NULL or an object holding
 * tolerance overrides by name plus the booleans "inject_frame_swap" (swap
 * the partner normal and binormal to force failures) and "theorems" (append
 * the invariant-correspondence checks). */
lpc_status lpc_verify(const lpc_curve* donor, const char* kind, const char* case_id, double c0,
                      double theta, const char* options_json, lpc_report** out);

/* Causal type, plane/helix/slant verdicts, and invariant values. */
lpc_status lpc_classify(const lpc_curve* c, lpc_report** out);

/* Frame orthonormality and the frame system residuals. */
lpc_status lpc_frenet_check(const lpc_curve* c, lpc_report** out);

lpc_status lpc_report_pass(const lpc_report* r, int* out_pass);
lpc_status lpc_report_json(const lpc_report* r, char** out_json);
lpc_status lpc_report_write(const lpc_report* r, const char* path);
void lpc_report_destroy(lpc_report* r);

#ifdef __cplusplus
}
#endif

#endif /* LPC_H */
