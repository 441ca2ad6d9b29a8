/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#ifndef LEFCON_H
#define LEFCON_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes. The first four agree with the exit codes of the `lefcon`
// command line tool.
typedef enum LefconStatus {
  // A value was computed or a certificate holds.
  LEFCON_STATUS_OK = 0,
  // The certificate vanishes; nothing is claimed.
  LEFCON_STATUS_NOT_CERTIFIED = 1,
  // Malformed workspace, unknown name, bad arguments or a failed precondition.
  LEFCON_STATUS_INPUT_ERROR = 2,
  // A nonzero certificate whose oracle found no witness.
  LEFCON_STATUS_SOUNDNESS_VIOLATION = 3,
  // A required pointer argument was null.
  LEFCON_STATUS_NULL_ARGUMENT = 10,
  // A string argument was not valid UTF-8.
  LEFCON_STATUS_INVALID_UTF8 = 11,
  // The output buffer is too small; the required length was written.
  LEFCON_STATUS_BUFFER_TOO_SMALL = 12,
  // An internal panic was caught at the boundary.
  LEFCON_STATUS_INTERNAL = 13,
} LefconStatus;

// Parsed workspace. Opaque to C.
typedef struct LefconWorkspace LefconWorkspace;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses workspace text. On success `*out` receives a handle to release
// with `lefcon_workspace_free`.
//
// # Safety
// `source` must be a nul-terminated string; `out` must be writable.
enum LefconStatus lefcon_workspace_parse(const char *source, struct LefconWorkspace **out);

// Reads and parses a workspace file.
//
// # Safety
// `path` must be a nul-terminated string; `out` must be writable.
enum LefconStatus lefcon_workspace_load(const char *path, struct LefconWorkspace **out);

// Releases a workspace. Null is ignored.
//
// # Safety
// `ws` must come from `lefcon_workspace_parse` or `lefcon_workspace_load`
// and not have been freed.
void lefcon_workspace_free(struct LefconWorkspace *ws);

// Runs one command, given as arguments without the program name (for
// example `{"betti", "torus7"}`), and writes its JSON report to `*out_json`.
// The status follows the report outcome. `--workspace` must not be passed.
//
// # Safety
// `argv` must point to `argc` nul-terminated strings; `out_json` must be writable.
enum LefconStatus lefcon_run(const struct LefconWorkspace *ws,
                             const char *const *argv,
                             size_t argc,
                             char **out_json);

// Betti numbers of a named pair or complex. Writes the count to `*len`; the
// numbers themselves go to `out` when `capacity` suffices.
//
// # Safety
// `name` must be nul-terminated; `out` must have room for `capacity`
// values (it may be null when `capacity` is 0); `len` must be writable.
enum LefconStatus lefcon_betti(const struct LefconWorkspace *ws,
                               const char *name,
                               size_t *out,
                               size_t capacity,
                               size_t *len);

// Euler characteristic of a named pair or complex.
//
// # Safety
// `name` must be nul-terminated; `out` must be writable.
enum LefconStatus lefcon_euler(const struct LefconWorkspace *ws, const char *name, int64_t *out);

// Message for the last failure on this thread, or null. The pointer stays
// valid until the next call into this library from the same thread.
const char *lefcon_last_error(void);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` must come from this library and not have been freed.
void lefcon_string_free(char *s);

// Library version as a static string.
const char *lefcon_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEFCON_H */
