#ifndef CSURG_H
#define CSURG_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CSURG_API __declspec(dllexport)
#else
#define CSURG_API __attribute__((visibility("default")))
#endif

/* Status codes. The CLI uses them as exit codes. */
#define CSURG_OK 0
#define CSURG_MISMATCH 1     /* verification or self-test found a disagreement */
#define CSURG_PARSE 2        /* diagram syntax error */
#define CSURG_INVALID 3      /* diagram failed validation */
#define CSURG_UNDEFINED_D3 4 /* d3 requested but the Euler class is not torsion */
#define CSURG_DOMAIN 5       /* argument outside the domain of an operation */
#define CSURG_IO 6
#define CSURG_INTERNAL 7

/* Output formats */
#define CSURG_HUMAN 0
#define CSURG_JSON 1

typedef struct csurg_atlas csurg_atlas;
typedef struct csurg_diagram csurg_diagram;

/* Message of the last failing call on this thread. Never NULL. */
CSURG_API const char* csurg_last_error(void);
CSURG_API void csurg_free_string(char* s);
CSURG_API const char* csurg_version(void);

CSURG_API int csurg_atlas_builtin(csurg_atlas** out);
CSURG_API int csurg_atlas_load(const char* path, csurg_atlas** out);
CSURG_API void csurg_atlas_free(csurg_atlas* atlas);

/* atlas may be NULL for the builtin one. warnings receives one warning per
   line (possibly empty); pass NULL to ignore them. */
CSURG_API int csurg_diagram_parse(const char* text, const csurg_atlas* atlas, csurg_diagram** out, char** warnings);
CSURG_API int csurg_diagram_parse_file(const char* path, const csurg_atlas* atlas, csurg_diagram** out,
                                       char** warnings);
CSURG_API void csurg_diagram_free(csurg_diagram* d);
CSURG_API int csurg_diagram_serialize(const csurg_diagram* d, char** out);

/* signs: NULL or "enumerate" for every assignment, otherwise a string of
   '+' and '-' consumed component by component. */
CSURG_API int csurg_invariants(const csurg_diagram* d, const char* signs, int d3_only, int format, char** out);
CSURG_API int csurg_expand(const csurg_diagram* d, int format, char** out);

/* coeff is "p/q" or "p"; first_stab is +1, -1 or 0 for none. */
CSURG_API int csurg_tightness(long long tb, long long plus, long long minus, const char* coeff, int first_stab,
                              int format, char** out);

/* params: "k=-1,l=0" (m is separate; m <= 0 leaves it out). bounds: "m=2,t=-8" or NULL. */
CSURG_API int csurg_family_list(int format, char** out);
CSURG_API int csurg_family_eval(const char* id, long long m, const char* params, int format, char** out);
CSURG_API int csurg_family_describe(const char* id, long long m, const char* params, const csurg_atlas* atlas,
                                    int format, char** out);
/* m <= 0 verifies every m from 1 to the bound. */
CSURG_API int csurg_family_verify(const char* id, long long m, const char* bounds, const csurg_atlas* atlas, int format,
                                  char** out);

CSURG_API int csurg_xi(long long m, long long n, const char* bounds, int format, char** out);
/* manifold: "sigma", "negsigma" or "lens". euler and d3 may be NULL. */
CSURG_API int csurg_cs_bounds(const char* manifold, long long m, int tight, const char* euler, const char* d3,
                              const char* bounds, int format, char** out);
CSURG_API int csurg_enumerate(const char* manifold, long long m, const char* bounds, const csurg_atlas* atlas,
                              int format, char** out);

/* criteria: "1,3-5" or NULL for all. */
CSURG_API int csurg_selftest(const char* bounds, const char* criteria, const csurg_atlas* atlas, int format,
                             char** out);

#ifdef __cplusplus
}
#endif

#endif
