#ifndef CENTAUT_H
#define CENTAUT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result code of every fallible call.
typedef enum CtStatus {
  CT_STATUS_OK = 0,
  CT_STATUS_NULL_ARGUMENT = 1,
  CT_STATUS_INVALID_UTF8 = 2,
  CT_STATUS_IO = 3,
  CT_STATUS_PARSE = 4,
  CT_STATUS_INCONSISTENT = 5,
  CT_STATUS_NOT_APPLICABLE = 6,
  CT_STATUS_SCOPE_EXCEEDED = 7,
  CT_STATUS_UNKNOWN_THEOREM = 8,
  CT_STATUS_INTERNAL = 9,
} CtStatus;

// A realized group with its cached invariants.
typedef struct CtGroup CtGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message of the last failed call on this thread, or null. The pointer is
// valid until the next call into the library on the same thread.
const char *ct_last_error(void);

// Library version as a static string.
const char *ct_version(void);

// Parses and realizes a presentation given as text.
//
// # Safety
// `text` is a NUL-terminated string; `out` is valid for writes.
enum CtStatus ct_group_from_text(const char *text, struct CtGroup **out);

// Reads, realizes and checks the expectations of a presentation file.
//
// # Safety
// `path` is a NUL-terminated string; `out` is valid for writes.
enum CtStatus ct_group_from_file(const char *path, struct CtGroup **out);

// Releases a handle. Null is ignored.
//
// # Safety
// `g` is null or a live handle from this library; it is invalid afterwards.
void ct_group_free(struct CtGroup *g);

// `|G|`.
//
// # Safety
// `g` is a live handle; `out` is valid for writes.
enum CtStatus ct_group_order(const struct CtGroup *g, uint64_t *out);

// Nilpotency class.
//
// # Safety
// `g` is a live handle; `out` is valid for writes.
enum CtStatus ct_group_class(const struct CtGroup *g, uint32_t *out);

// Minimal number of generators.
//
// # Safety
// `g` is a live handle; `out` is valid for writes.
enum CtStatus ct_group_rank(const struct CtGroup *g, uint32_t *out);

// `|Z(G)|`.
//
// # Safety
// `g` is a live handle; `out` is valid for writes.
enum CtStatus ct_group_center_order(const struct CtGroup *g, uint64_t *out);

// Number of central automorphisms, by enumeration.
//
// # Safety
// `g` is a live handle; `out` is valid for writes.
enum CtStatus ct_group_autz_order(const struct CtGroup *g, uint64_t *out);

// `|Z(Inn(G))|`.
//
// # Safety
// `g` is a live handle; `out` is valid for writes.
enum CtStatus ct_group_zinn_order(const struct CtGroup *g, uint64_t *out);

// Whether the central automorphisms are exactly the central inner ones.
//
// # Safety
// `g` is a live handle; `out` is valid for writes.
enum CtStatus ct_group_autz_equals_zinn(const struct CtGroup *g, bool *out);

// Full invariant report as text. Free the result with [`ct_string_free`].
//
// # Safety
// `g` is a live handle; `out` is valid for writes.
enum CtStatus ct_group_report_text(const struct CtGroup *g, char **out);

// Checks `theorem` (an id or `all`) over every entry of `dir`. Writes the
// text report and the command-line exit code (0 pass, 1 verdict failed,
// 2 input error).
//
// # Safety
// `theorem` and `dir` are NUL-terminated strings; `report` and `exit_code`
// are valid for writes.
enum CtStatus ct_verify(const char *theorem,
                        const char *dir,
                        bool include_p5,
                        char **report,
                        int32_t *exit_code);

// Releases a string returned by this library. Null is ignored.
//
// # Safety
// `s` is null or a string returned by this library and not yet freed.
void ct_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CENTAUT_H */
