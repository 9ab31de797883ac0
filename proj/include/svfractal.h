#ifndef SVFRACTAL_H
#define SVFRACTAL_H

/* C interface to the set-valued fractal library.
 *
 * All entry points return a status code; outputs are written to disk.
 * Handles are opaque and must be released with svf_pipeline_destroy.
 * The library is not thread-safe across a single handle. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct svf_pipeline svf_pipeline;

enum {
  SVF_OK = 0,
  SVF_E_BADARG = 1,
  SVF_E_CONFIG = 2,   /* config file missing or schema-invalid */
  SVF_E_NUMERIC = 3,  /* domain error, non-convergence, hypothesis failure */
  SVF_E_IO = 4,       /* output directory not writable */
  SVF_E_VERIFY = 5    /* verify ran but at least one invariant failed */
};

const char* svf_version(void);

/* Builds a pipeline from a JSON config file or from JSON text.
 * On success *out is set; on failure *out is NULL and the return code
 * plus svf_last_error describe the problem. */
int svf_pipeline_create(const char* config_path, svf_pipeline** out);
int svf_pipeline_create_from_json(const char* json_text, svf_pipeline** out);
void svf_pipeline_destroy(svf_pipeline* p);

/* command is one of "build", "verify", "chaos", "dims", "render". */
int svf_run(svf_pipeline* p, const char* command, const char* out_dir);

/* Residual of the fixed-point iteration once "build" (or any command
 * that forces it) has run; negative before that. */
double svf_residual(const svf_pipeline* p);

/* Message for the most recent failure on this handle (or the most recent
 * failed create when p is NULL).  Never NULL. */
const char* svf_last_error(const svf_pipeline* p);

#ifdef __cplusplus
}
#endif

#endif
