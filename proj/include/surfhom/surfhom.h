/* C interface to libsurfhom.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns a surfhom_status; on
 * failure surfhom_last_error() describes the problem (thread-local, valid
 * until the next failing call on the same thread). Strings and integer arrays
 * handed out by the library are released with surfhom_string_free and
 * surfhom_ints_free.
 */
#ifndef SURFHOM_H
#define SURFHOM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(SURFHOM_BUILDING)
#    define SURFHOM_API __declspec(dllexport)
#  else
#    define SURFHOM_API __declspec(dllimport)
#  endif
#else
#  define SURFHOM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct surfhom_triangulation surfhom_triangulation;
typedef struct surfhom_table surfhom_table;

typedef enum surfhom_status {
    SURFHOM_OK = 0,
    SURFHOM_ERR_PARSE = 1,            /* malformed triangulation text */
    SURFHOM_ERR_INVALID = 2,          /* triangulation fails validation */
    SURFHOM_ERR_PRECONDITION = 3,     /* e.g. flipping a boundary segment */
    SURFHOM_ERR_ORACLE_TOO_LARGE = 4, /* chain basis over the cap */
    SURFHOM_ERR_ARGUMENT = 5,         /* null pointer, bad enum, negative degree */
    SURFHOM_ERR_IO = 6,
    SURFHOM_ERR_INTERNAL = 7
} surfhom_status;

typedef enum surfhom_method {
    SURFHOM_METHOD_CLOSED = 0,
    SURFHOM_METHOD_SKOLDBERG = 1,
    SURFHOM_METHOD_ORACLE = 2
} surfhom_method;

typedef enum surfhom_format { SURFHOM_FORMAT_PRETTY = 0, SURFHOM_FORMAT_TSV = 1 } surfhom_format;

typedef enum surfhom_column {
    SURFHOM_COLUMN_HH = 0,
    SURFHOM_COLUMN_HC = 1,
    SURFHOM_COLUMN_HC_CO = 2
} surfhom_column;

typedef struct surfhom_topology_info {
    int genus;
    int boundary_components;
    int marked_points;
    int euler_characteristic;
    size_t arcs;
    size_t boundary_segments;
    size_t triangles;
    size_t internal_triangles;
} surfhom_topology_info;

SURFHOM_API const char* surfhom_last_error(void);
SURFHOM_API void surfhom_string_free(char* s);
SURFHOM_API void surfhom_ints_free(int* v);

SURFHOM_API surfhom_status surfhom_triangulation_parse(const char* text,
                                                       surfhom_triangulation** out);
SURFHOM_API surfhom_status surfhom_triangulation_load(const char* path,
                                                      surfhom_triangulation** out);
SURFHOM_API void surfhom_triangulation_free(surfhom_triangulation* t);

SURFHOM_API surfhom_status surfhom_triangulation_serialize(const surfhom_triangulation* t,
                                                           char** out);

/* One violation per line in *report (may be NULL if not wanted). */
SURFHOM_API surfhom_status surfhom_triangulation_validate(const surfhom_triangulation* t,
                                                          size_t* violation_count, char** report);

/* SURFHOM_ERR_INVALID unless the triangulation validates. */
SURFHOM_API surfhom_status surfhom_triangulation_topology(const surfhom_triangulation* t,
                                                          surfhom_topology_info* out);
SURFHOM_API surfhom_status surfhom_triangulation_quiver(const surfhom_triangulation* t,
                                                        char** out);
SURFHOM_API surfhom_status surfhom_triangulation_flip(const surfhom_triangulation* t,
                                                      const char* arc,
                                                      surfhom_triangulation** out);

/* Dimensions for degrees 0..max_n. oracle_cap is only used by the oracle
 * method; 0 selects the default. */
SURFHOM_API surfhom_status surfhom_table_compute(const surfhom_triangulation* t,
                                                 surfhom_method method, int max_n,
                                                 size_t oracle_cap, surfhom_table** out);
SURFHOM_API void surfhom_table_free(surfhom_table* table);
SURFHOM_API int surfhom_table_max_n(const surfhom_table* table);
SURFHOM_API size_t surfhom_table_vertex_count(const surfhom_table* table);
SURFHOM_API size_t surfhom_table_internal_triangles(const surfhom_table* table);

/* Returns 1 and stores the entry, or 0 if the degree is out of range or was
 * not computed (oracle tables). */
SURFHOM_API int surfhom_table_entry(const surfhom_table* table, int n, surfhom_column column,
                                    int64_t* value);
SURFHOM_API int surfhom_table_complete(const surfhom_table* table);

SURFHOM_API surfhom_status surfhom_tables_render(const surfhom_table* const* tables, size_t count,
                                                 surfhom_format format, char** out);

/* Degrees 0..n_max where the dimension identity of Connes' exact sequence
 * ~HH_n = ~HC_n + ~HC_{n-1}, or HC^n = HC_n,
 * fails. *degrees is NULL when *count is 0. */
SURFHOM_API surfhom_status surfhom_table_ses_check(const surfhom_table* table, int n_max,
                                                   int** degrees, size_t* count);

/* Degrees where the two tables differ in any column. */
SURFHOM_API surfhom_status surfhom_tables_diff(const surfhom_table* a, const surfhom_table* b,
                                               int** degrees, size_t* count);

#ifdef __cplusplus
}
#endif

#endif /* SURFHOM_H */
