/* C interface to the forested graph complex toolkit.
 *
 * All functions return fgc_status; results come back through out-parameters
 * as opaque handles or malloc'd strings. Free strings with fgc_string_free
 * and handles with their _free functions. Handles are immutable after
 * creation and safe to share across threads.
 */
#ifndef FGC_H
#define FGC_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  FGC_OK = 0,
  FGC_ERR_PARSE = 1,      /* malformed input text */
  FGC_ERR_INVALID = 2,    /* structurally invalid object or argument */
  FGC_ERR_CHECK = 3,      /* a verification pipeline reported a mismatch */
  FGC_ERR_IO = 4,         /* file could not be read or written */
  FGC_ERR_UNSUPPORTED = 5 /* operation not available for this input */
} fgc_status;

typedef struct fgc_graph fgc_graph;
typedef struct fgc_chain fgc_chain;

const char* fgc_status_str(fgc_status s);
void fgc_string_free(char* s);

/* Graph text format: vertex/edge/forest/filtration/halforder records. */
fgc_status fgc_graph_parse(const char* text, fgc_graph** out);
fgc_status fgc_graph_read(const char* path, fgc_graph** out);
void fgc_graph_free(fgc_graph* g);

void fgc_chain_free(fgc_chain* c);
fgc_status fgc_chain_text(const fgc_chain* c, char** out);
fgc_status fgc_chain_is_zero(const fgc_chain* c, int* out);
fgc_status fgc_chain_term_count(const fgc_chain* c, long* out);

/* Operations on parsed graphs. The decoration decides the complex: a forest
 * record makes a forested graph, a filtration makes a bordification cell,
 * half orders make an odd (AB-)graph. */
fgc_status fgc_normalize(const fgc_graph* g, fgc_chain** out);
fgc_status fgc_boundary(const fgc_graph* g, fgc_chain** out);
fgc_status fgc_trace(const fgc_graph* g, int ab_variant, fgc_chain** out);
fgc_status fgc_phi(const fgc_graph* g, fgc_chain** out);
fgc_status fgc_phi_degree(const fgc_graph* g, long* out);
fgc_status fgc_bordification_d(const fgc_graph* g, fgc_chain** out);

/* Chord diagrams of the given rank. Enumeration returns one foot-pairing
 * word per line; relations returns the sliding-relation count and rank. */
fgc_status fgc_chords_enumerate(int rank, char** out);
fgc_status fgc_chords_relations(int rank, long* out_count, long* out_rank);

/* Exact rank of a matrix file (cols= header, label table, row: lines). */
fgc_status fgc_matrix_rank_file(const char* path, long* out_rank);

/* Verification pipelines: which is "mu3", "mu5" or "h9". The report comes
 * back as key=value text; *out_all_pass is 1 iff every expected value
 * matched. cert_dir may be NULL. */
fgc_status fgc_verify(const char* which, const char* cert_dir, int threads,
                      char** out_report, int* out_all_pass);

/* Randomized property suites (cocycle, d^2 = 0, bordification, blowup). */
fgc_status fgc_selftest(unsigned long long seed, char** out_report, int* out_all_pass);

#ifdef __cplusplus
}
#endif

#endif /* FGC_H */
