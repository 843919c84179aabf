#ifndef TRISPEC_TRISPEC_H
#define TRISPEC_TRISPEC_H

#include <stddef.h>

#if defined(_WIN32)
#define TS_API __declspec(dllexport)
#else
#define TS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ts_status {
    TS_OK = 0,
    TS_ERR_INVALID_ARGUMENT = 1,
    TS_ERR_NOT_FOUND = 2,
    TS_ERR_DOMAIN = 3,
    TS_ERR_PARSE = 4,
    TS_ERR_INTERNAL = 5
} ts_status;

typedef struct ts_measure ts_measure;
typedef struct ts_report ts_report;

/* Message for the most recent failing call on this thread; never NULL. */
TS_API const char* ts_last_error(void);
TS_API const char* ts_version(void);

/* Strings returned through char** out-parameters are owned by the caller. */
TS_API void ts_string_free(char* s);

/* Torus points are given as rational strings "p/q" in full turns. */
TS_API ts_status ts_phi(const char* theta1, const char* theta2, double* re, double* im);
TS_API ts_status ts_jacobian(const char* theta1, const char* theta2, double* out);
/* Six preimage pairs as 24 doubles: w1.re, w1.im, w2.re, w2.im per pair. */
TS_API ts_status ts_phi_inverse(double re, double im, double out[24]);

/* family: d, j2_d, dd, dnk, prod, j2_prod. n and k are rational strings
   (k may be NULL); p and q are used by prod and j2_prod. */
TS_API ts_status ts_measure_family(const char* family, const char* n, const char* k, int p, int q,
                                   ts_measure** out);
/* source 0: theorem combination, 1: exponent table (graphs) or class data (groups). */
TS_API ts_status ts_measure_graph(const char* id, int source, ts_measure** out);
TS_API ts_status ts_measure_group(const char* id, int source, ts_measure** out);
TS_API ts_status ts_measure_from_json(const char* text, ts_measure** out);
TS_API ts_status ts_measure_from_csv(const char* text, ts_measure** out);
TS_API void ts_measure_free(ts_measure* m);

TS_API ts_status ts_measure_size(const ts_measure* m, size_t* out);
TS_API ts_status ts_measure_mass(const ts_measure* m, double* out);
TS_API ts_status ts_measure_moment(const ts_measure* m, int p, int q, double* re, double* im);
TS_API ts_status ts_measure_max_delta(const ts_measure* a, const ts_measure* b, double* out);
TS_API ts_status ts_measure_to_json(const ts_measure* m, char** out);
TS_API ts_status ts_measure_to_csv(const ts_measure* m, char** out);

/* kind: graphs, groups, measures, relations. Writes a JSON array of objects. */
TS_API ts_status ts_list(const char* kind, char** out);

/* scope: graph, group, relation. */
TS_API ts_status ts_verify(const char* scope, const char* subject, int max_moment, double tol, int normalize,
                           ts_report** out);
TS_API void ts_report_free(ts_report* r);
TS_API ts_status ts_report_pass(const ts_report* r, int* out);
TS_API ts_status ts_report_max_delta(const ts_report* r, double* out);
TS_API ts_status ts_report_to_json(const ts_report* r, char** out);

/* One JSON object per k with decimal-string values; oracles included when nonzero. */
TS_API ts_status ts_dims(int k, int with_oracle, char** out);

TS_API ts_status ts_sample_discoid(int grid, char** out);

#ifdef __cplusplus
}
#endif

#endif
