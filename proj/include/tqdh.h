#ifndef TQDH_H
#define TQDH_H

/* C interface to the tqdh library. All report strings are UTF-8 JSON and
   must be released with tqdh_string_free. Functions return a tqdh_status;
   on failure tqdh_last_error() describes the problem for the calling thread. */

#include <stdint.h>

#if defined(_WIN32)
#define TQDH_API __declspec(dllexport)
#else
#define TQDH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tqdh_status {
  TQDH_OK = 0,
  TQDH_USAGE = 2,
  TQDH_VALIDATION = 3,
  TQDH_MISMATCH = 4,
  TQDH_INTERNAL = 5,
  TQDH_IO = 6
} tqdh_status;

typedef struct tqdh_problem tqdh_problem;

TQDH_API const char* tqdh_version(void);
TQDH_API const char* tqdh_last_error(void);
TQDH_API void tqdh_string_free(char* s);

TQDH_API tqdh_status tqdh_problem_load_file(const char* path, tqdh_problem** out);
TQDH_API tqdh_status tqdh_problem_load_string(const char* json, tqdh_problem** out);
TQDH_API void tqdh_problem_free(tqdh_problem* p);

/* On TQDH_OK and TQDH_MISMATCH *report receives the JSON report. */
TQDH_API tqdh_status tqdh_check_extension(const tqdh_problem* p, char** report);
/* kappa_json: a list of maps, {"kappa": ...} or {"basis": [...]}. */
TQDH_API tqdh_status tqdh_pbw_check(const tqdh_problem* p, const char* kappa_json, int ambiguities, char** report);
/* method: "direct", "cohomology" or "both". */
TQDH_API tqdh_status tqdh_parameter_space(const tqdh_problem* p, const char* method, char** report);
TQDH_API tqdh_status tqdh_constant_cocycles(const tqdh_problem* p, char** report);
TQDH_API tqdh_status tqdh_classify_diagonal(const tqdh_problem* p, char** report);
TQDH_API tqdh_status tqdh_alpha_table(const tqdh_problem* p, char** report);
TQDH_API tqdh_status tqdh_alpha_table_symmetric(int n, char** report);
TQDH_API tqdh_status tqdh_classify_symmetric(int n, int twisted, char** report);
TQDH_API tqdh_status tqdh_verify_cover(int n, long samples, uint64_t seed, char** report);
TQDH_API tqdh_status tqdh_selftest(long samples, uint64_t seed, char** report);

#ifdef __cplusplus
}
#endif

#endif
