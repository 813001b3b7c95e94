#ifndef GRAPE_H
#define GRAPE_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Result codes. 1-3 match the command-line exit codes.
 */
typedef enum GrapeStatus {
  GRAPE_STATUS_OK = 0,
  GRAPE_STATUS_INVALID_ARGUMENT = 1,
  GRAPE_STATUS_DATA_ERROR = 2,
  GRAPE_STATUS_RESOURCE_LIMIT = 3,
  GRAPE_STATUS_NULL_POINTER = 4,
  GRAPE_STATUS_PANIC = 5,
} GrapeStatus;

typedef enum GrapeMode {
  GRAPE_MODE_STEADY = 0,
  GRAPE_MODE_RANGING = 1,
} GrapeMode;

typedef struct GrapeDiagram GrapeDiagram;

typedef struct GrapeGraph GrapeGraph;

typedef struct GrapeGraphBuilder GrapeGraphBuilder;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or null. Valid until
 the next failing call on the same thread.
 */
const char *grape_last_error(void);

struct GrapeGraphBuilder *grape_builder_new(bool directed);

/*
 # Safety
 `builder` must come from [`grape_builder_new`]; labels must be
 nul-terminated strings.
 */
enum GrapeStatus grape_builder_add_edge(struct GrapeGraphBuilder *builder,
                                        const char *source,
                                        const char *target,
                                        double weight);

/*
 Consumes the builder. Returns null if `builder` is null.

 # Safety
 `builder` must come from [`grape_builder_new`] and not be used afterwards.
 */
struct GrapeGraph *grape_builder_build(struct GrapeGraphBuilder *builder);

/*
 # Safety
 `builder` must come from [`grape_builder_new`] or be null.
 */
void grape_builder_free(struct GrapeGraphBuilder *builder);

/*
 Loads a CSV edge list. `transform` may be null (identity) or one of
 `identity`, `inverse`, `negshift`.

 # Safety
 Strings must be nul-terminated; `out` must be writable.
 */
enum GrapeStatus grape_graph_from_csv(const char *path,
                                      bool directed,
                                      const char *transform,
                                      struct GrapeGraph **out);

/*
 # Safety
 `graph` must be a live handle or null.
 */
size_t grape_graph_vertex_count(const struct GrapeGraph *graph);

/*
 # Safety
 `graph` must be a live handle or null.
 */
size_t grape_graph_edge_count(const struct GrapeGraph *graph);

/*
 # Safety
 `graph` must be a live handle or null.
 */
void grape_graph_free(struct GrapeGraph *graph);

/*
 Computes the diagram of a registered feature (`hub`, `whub`, `dhub`,
 `eulerian`, `independent`, `max-independent`, `matching`,
 `max-matching`, `kernel`). `mode` is a [`GrapeMode`] value. The
 enumeration cap honours `GRAPE_MAX_SETS`.

 # Safety
 `graph` must be live, `feature` nul-terminated, `out` writable.
 */
enum GrapeStatus grape_diagram_compute(const struct GrapeGraph *graph,
                                       const char *feature,
                                       uint32_t mode,
                                       struct GrapeDiagram **out);

/*
 Number of distinct cornerpoints.

 # Safety
 `diagram` must be a live handle or null.
 */
size_t grape_diagram_len(const struct GrapeDiagram *diagram);

/*
 Reads cornerpoint `index`; an infinite death is reported as `INFINITY`.

 # Safety
 `diagram` must be live; output pointers must be writable.
 */
enum GrapeStatus grape_diagram_point(const struct GrapeDiagram *diagram,
                                     size_t index,
                                     double *birth,
                                     double *death,
                                     size_t *multiplicity);

/*
 Cornerpoints with `birth <= u` and `death > v`, counted with
 multiplicity: the steady or ranging count at `(u, v)`. Needs `u < v`.

 # Safety
 `diagram` must be live; `count` writable.
 */
enum GrapeStatus grape_diagram_count_at(const struct GrapeDiagram *diagram,
                                        double u,
                                        double v,
                                        size_t *count);

/*
 # Safety
 Both diagrams must be live; `distance` writable.
 */
enum GrapeStatus grape_bottleneck(const struct GrapeDiagram *a,
                                  const struct GrapeDiagram *b,
                                  double *distance);

/*
 Serializes the diagram document. Release with [`grape_string_free`].
 Returns null on failure.

 # Safety
 `diagram` must be live.
 */
char *grape_diagram_to_json(const struct GrapeDiagram *diagram);

/*
 Parses a diagram document. Witnesses are resolved against `graph` when
 it is non-null and dropped otherwise.

 # Safety
 `json` must be nul-terminated; `graph` live or null; `out` writable.
 */
enum GrapeStatus grape_diagram_from_json(const char *json,
                                         const struct GrapeGraph *graph,
                                         struct GrapeDiagram **out);

/*
 # Safety
 `diagram` must be a live handle or null.
 */
void grape_diagram_free(struct GrapeDiagram *diagram);

/*
 # Safety
 `s` must come from this library or be null.
 */
void grape_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* GRAPE_H */
