#ifndef GRADED_DESCENT_H
#define GRADED_DESCENT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stdint.h>

typedef enum GdStatus {
  GD_STATUS_OK = 0,
  GD_STATUS_NULL_POINTER = 1,
  GD_STATUS_INVALID_UTF8 = 2,
  GD_STATUS_PARSE = 3,
  GD_STATUS_DOMAIN = 4,
  GD_STATUS_PANIC = 5,
} GdStatus;

// Opaque coefficient field.
typedef struct GdField GdField;

// Opaque Russell-type form.
typedef struct GdRussellForm GdRussellForm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread (empty after a success).
// The pointer stays valid until the next call on this thread.
const char *gd_last_error(void);

// Library version as a static string.
const char *gd_version(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void gd_string_free(char *s);

// Parses a field such as `GF(4)` or `GF(2)(u)`.
//
// # Safety
// `spec` must be a nul-terminated string; `out` must be writable.
enum GdStatus gd_field_new(const char *spec, struct GdField **out);

// # Safety
// `field` must be null or a handle from [`gd_field_new`], not yet freed.
void gd_field_free(struct GdField *field);

// The presentation of the field, e.g. the modulus fixed for `GF(p^m)`.
//
// # Safety
// `field` must be a live handle; `out` must be writable.
enum GdStatus gd_field_presentation(const struct GdField *field, char **out);

// Decides triviality of the form attached to the skew polynomial `tau`.
//
// # Safety
// `field` must be a live handle, `tau` a nul-terminated string and
// `out_trivial` writable.
enum GdStatus gd_triviality_test(const struct GdField *field,
                                 const char *tau,
                                 uint32_t n,
                                 bool *out_trivial);

// Builds a form from a JSON descriptor with keys `p, n, field, stride, r,
// s, f_coeffs` and optionally `t_degree`, `coeff_extension`.
//
// # Safety
// `json` must be a nul-terminated string; `out` must be writable.
enum GdStatus gd_form_from_json(const char *json, struct GdRussellForm **out);

// Builds a form over `field` from a `p`-polynomial `f` in `T1`, with
// `k~ = k_1[t^{±stride}]`, `deg t = q` and radii `r`, `s`.
//
// # Safety
// `field` must be a live handle, the strings nul-terminated and `out`
// writable.
enum GdStatus gd_form_new(const struct GdField *field,
                          int64_t stride,
                          uint32_t n,
                          const char *r,
                          const char *s,
                          const char *f,
                          struct GdRussellForm **out);

// # Safety
// `form` must be null or a handle from this library, not yet freed.
void gd_form_free(struct GdRussellForm *form);

// The form's JSON descriptor.
//
// # Safety
// `form` must be a live handle; `out` must be writable.
enum GdStatus gd_form_descriptor_json(const struct GdRussellForm *form, char **out);

// Runs the trivialization and returns its report as JSON.
//
// # Safety
// `form` must be a live handle; `out` must be writable.
enum GdStatus gd_form_trivialize_json(const struct GdRussellForm *form, char **out);

// Whether the coproduct, counit and antipode respect the relation.
//
// # Safety
// `form` must be a live handle; `out_passed` must be writable.
enum GdStatus gd_form_hopf_check(const struct GdRussellForm *form, bool *out_passed);

// Runs a command-line invocation (without the program name) and returns
// its standard output; `out_exit_code` receives the CLI exit code.
//
// # Safety
// `argv` must point to `argc` nul-terminated strings; the outputs must be
// writable.
enum GdStatus gd_cli_run(const char *const *argv,
                         uintptr_t argc,
                         char **out_stdout,
                         int32_t *out_exit_code);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRADED_DESCENT_H */
