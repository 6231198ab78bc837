/* C interface to the stropsat solver library. */
#ifndef STROPSAT_H
#define STROPSAT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct stropsat_config stropsat_config;
typedef struct stropsat_result stropsat_result;

typedef enum {
    STROPSAT_OK = 0,
    STROPSAT_ERR_USAGE = 1,
    STROPSAT_ERR_PARSE = 2,
    STROPSAT_ERR_IO = 3,
    STROPSAT_ERR_INTERNAL = 4
} stropsat_status;

typedef enum {
    STROPSAT_VERDICT_SAT = 0,
    STROPSAT_VERDICT_UNSAT = 1,
    STROPSAT_VERDICT_UNKNOWN = 2
} stropsat_verdict;

/* Configuration handles. A NULL config everywhere means defaults. */
stropsat_config* stropsat_config_new(void);
void stropsat_config_free(stropsat_config* cfg);
stropsat_status stropsat_config_set_max_squarings(stropsat_config* cfg, unsigned value);
stropsat_status stropsat_config_set_timeout_ms(stropsat_config* cfg, long value);
stropsat_status stropsat_config_set_seed(stropsat_config* cfg, long value);

/* Runs the solver on SMT-LIB2 text or a file path. On success *out owns a
 * result handle; on failure *out is NULL and stropsat_last_error() describes
 * the problem. Unsupported input is not a failure: it yields an "unknown"
 * result. */
stropsat_status stropsat_run_text(const char* text, const stropsat_config* cfg,
                                  stropsat_result** out);
stropsat_status stropsat_run_file(const char* path, const stropsat_config* cfg,
                                  stropsat_result** out);

void stropsat_result_free(stropsat_result* res);

stropsat_verdict stropsat_result_verdict(const stropsat_result* res);
/* Strings below are owned by the result handle. */
const char* stropsat_result_text(const stropsat_result* res);   /* verdict + model block */
const char* stropsat_result_json(const stropsat_result* res);   /* full report */
const char* stropsat_result_reason(const stropsat_result* res); /* "" unless unknown */
double stropsat_result_solve_ms(const stropsat_result* res);
double stropsat_result_total_ms(const stropsat_result* res);

/* Thread-local message for the most recent failing call. */
const char* stropsat_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* STROPSAT_H */
