/* C API for the pcbdec decision-analysis engine.
 *
 * All functions return a pcbdec_status; on failure a human-readable
 * message is available from pcbdec_last_error() (thread-local). Strings
 * returned through out-parameters are heap-allocated JSON documents and
 * must be released with pcbdec_string_free().
 */
#ifndef PCBDEC_C_H
#define PCBDEC_C_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pcbdec_status {
    PCBDEC_OK = 0,
    PCBDEC_ERR_INTERNAL = 1,
    PCBDEC_ERR_PARSE = 2,
    PCBDEC_ERR_VALIDATION = 3,
    PCBDEC_ERR_STRUCTURE = 4, /* e.g. not partially consonant */
    PCBDEC_ERR_CONFLICT = 5,  /* total conflict / impossible conditioning */
    PCBDEC_ERR_NUMERIC = 6    /* size limits, degenerate vectors, ranges */
} pcbdec_status;

/* Opaque handle for a parsed decision problem. */
typedef struct pcbdec_problem pcbdec_problem;

/* Parses a JSON problem document. On success *out owns the problem. */
pcbdec_status pcbdec_problem_parse(const char* json_text, pcbdec_problem** out);
void pcbdec_problem_free(pcbdec_problem* problem);

/* Overrides applied after parsing; mirror the CLI flags. */
pcbdec_status pcbdec_problem_set_attitude_c(pcbdec_problem* problem, double c);
pcbdec_status pcbdec_problem_set_alpha(pcbdec_problem* problem, double alpha);

/* Structural + pcb validation report. */
pcbdec_status pcbdec_validate(const pcbdec_problem* problem, char** report_json);

/* Mixed utilities and ranking of every act. */
pcbdec_status pcbdec_evaluate(const pcbdec_problem* problem, char** result_json);

/* Rule-comparison table: mixed, transform EUs, Choquet Bel/Pl, Hurwicz. */
pcbdec_status pcbdec_compare(const pcbdec_problem* problem, char** result_json);

/* Combines the uncertainty of two problems on the same frame;
 * rule is "dempster" or "walley". Output is a bpa problem document. */
pcbdec_status pcbdec_combine(const pcbdec_problem* a, const pcbdec_problem* b,
                             const char* rule, char** result_json);

/* Probability transform; method is "pignistic" or "plausibility".
 * Output is a bpa problem document. */
pcbdec_status pcbdec_transform(const pcbdec_problem* problem, const char* method,
                               char** result_json);

/* Partially consonant decomposition of the uncertainty. */
pcbdec_status pcbdec_decompose(const pcbdec_problem* problem, char** result_json);

/* Lossless re-serialization of the parsed problem. */
pcbdec_status pcbdec_problem_serialize(const pcbdec_problem* problem, char** result_json);

void pcbdec_string_free(char* s);

/* Message for the most recent failure on this thread; never NULL. */
const char* pcbdec_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* PCBDEC_C_H */
