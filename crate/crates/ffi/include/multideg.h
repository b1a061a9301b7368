#ifndef MULTIDEG_H
#define MULTIDEG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

typedef enum MdInsertion {
  MdInsertion_Iota = 0,
  MdInsertion_IotaPrime = 1,
} MdInsertion;

typedef enum MdRemoval {
  MdRemoval_Nu = 0,
  MdRemoval_NuPrime = 1,
} MdRemoval;

typedef enum MdStatus {
  MdStatus_Ok = 0,
  // Input rejected: bad shape, label, range or parse error.
  MdStatus_Domain = 1,
  // Two computations that must agree did not.
  MdStatus_Inconsistency = 2,
  MdStatus_NullPointer = 3,
  MdStatus_InvalidUtf8 = 4,
  MdStatus_Panic = 5,
} MdStatus;

// Memo cache for asymmetric multinomials.
typedef struct MdEngine MdEngine;

typedef struct MdParkingFunction MdParkingFunction;

typedef struct MdTable MdTable;

// Message for the last failed call on this thread, or NULL. The pointer is
// valid until the next failing call on the same thread.
const char *md_last_error(void);

// # Safety
// `s` must be NULL or a string returned by this library.
void md_string_free(char *s);

struct MdEngine *md_engine_new(void);

// # Safety
// `engine` must be NULL or a handle from `md_engine_new`.
void md_engine_free(struct MdEngine *engine);

// `<<n;k>>` as a decimal string, with `n` taken from `len`.
//
// # Safety
// `engine` must be a live handle, `parts` must point to `len` values.
enum MdStatus md_engine_asym_multinomial(const struct MdEngine *engine,
                                         const uint32_t *parts_ptr,
                                         size_t len,
                                         char **out);

// `(2m-1)!!` as a decimal string.
//
// # Safety
// `out` must be writable.
enum MdStatus md_odd_double_factorial(uint32_t m, char **out);

// `|CPF(n, k)|` with `n = len`.
//
// # Safety
// `parts` must point to `len` values and `out` must be writable.
enum MdStatus md_cpf_count(const uint32_t *parts_ptr, size_t len, uint64_t *out);

// # Safety
// `out` must be writable.
enum MdStatus md_table_new(size_t n, struct MdTable **out);

// # Safety
// `table` must be NULL or a handle from `md_table_new`.
void md_table_free(struct MdTable *table);

// Number of entries, or 0 for NULL.
//
// # Safety
// `table` must be NULL or a live handle.
size_t md_table_len(const struct MdTable *table);

// Copies entry `index`: `n - 3` parts into `parts_out` and the degree as a string.
//
// # Safety
// `parts_out` must have room for `cap` values; `deg_out` must be writable.
enum MdStatus md_table_entry(const struct MdTable *table,
                             size_t index,
                             uint32_t *parts_out,
                             size_t cap,
                             char **deg_out);

// # Safety
// `table` must be a live handle and `out` writable.
enum MdStatus md_table_cone_degree(const struct MdTable *table, char **out);

// # Safety
// `table` must be a live handle and `out` writable.
enum MdStatus md_table_to_json(const struct MdTable *table, char **out);

// # Safety
// `table` must be a live handle and `out` writable.
enum MdStatus md_table_to_csv(const struct MdTable *table, char **out);

// Parses `{"n": .., "columns": [[..], ..]}`.
//
// # Safety
// `json` must be a NUL-terminated string and `out` writable.
enum MdStatus md_pf_from_json(const char *json, struct MdParkingFunction **out);

// # Safety
// `pf` must be NULL or a handle from this library.
void md_pf_free(struct MdParkingFunction *pf);

// # Safety
// `pf` must be a live handle and `out` writable.
enum MdStatus md_pf_to_json(const struct MdParkingFunction *pf, char **out);

// # Safety
// `pf` must be a live handle and `out` writable.
enum MdStatus md_pf_render(const struct MdParkingFunction *pf, char **out);

// Size of the parking function, or 0 for NULL.
//
// # Safety
// `pf` must be NULL or a live handle.
size_t md_pf_size(const struct MdParkingFunction *pf);

// # Safety
// `pf` must be a live handle and `out` writable.
enum MdStatus md_pf_is_column_restricted(const struct MdParkingFunction *pf, bool *out);

// Writes `true` for a bad parking function, `false` for a good one.
//
// # Safety
// `pf` must be a live handle and `out` writable.
enum MdStatus md_pf_is_bad(const struct MdParkingFunction *pf, bool *out);

// Inserts `n + 1` at lattice point `point` and returns a new handle.
//
// # Safety
// `pf` must be a live handle and `out` writable.
enum MdStatus md_pf_insert(const struct MdParkingFunction *pf,
                           size_t point,
                           enum MdInsertion algorithm,
                           struct MdParkingFunction **out);

// Removes the largest label; writes the smaller parking function and the point.
//
// # Safety
// `pf` must be a live handle; `out` and `point_out` must be writable.
enum MdStatus md_pf_remove(const struct MdParkingFunction *pf,
                           enum MdRemoval algorithm,
                           struct MdParkingFunction **out,
                           size_t *point_out);

#endif  /* MULTIDEG_H */
