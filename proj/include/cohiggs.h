#ifndef COHIGGS_H
#define COHIGGS_H

/*
 * C surface of the cohiggs library.
 *
 * Every operation is addressed by a dotted command name ("surface.degree",
 * "hopf.nf-even", "higgs.genus2", "sweep", ...) and takes a UTF-8 JSON
 * request. Evaluation always hands back an opaque result object that must be
 * released with cohiggs_result_free. On success the payload is the response
 * JSON (RFC 4180 CSV for "sweep"); on failure the error accessor returns a
 * JSON object {"error": <name>, "detail": <message>}.
 *
 * All functions are thread-safe: the library holds no mutable global state
 * and result objects are independent.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cohiggs_status {
    COHIGGS_OK = 0,
    COHIGGS_SCHEMA_ERROR = 2,  /* malformed request or unknown command */
    COHIGGS_DOMAIN_ERROR = 3,  /* named domain failure (KaehlerCase, ...) */
    COHIGGS_INTERNAL_ERROR = 4,
    COHIGGS_NULL_ARGUMENT = 5
} cohiggs_status;

typedef struct cohiggs_result cohiggs_result;

cohiggs_status cohiggs_eval(const char* command, const char* request_json,
                            cohiggs_result** out);

/* Published request/response schema of one command, as JSON. */
cohiggs_status cohiggs_schema(const char* command, cohiggs_result** out);

cohiggs_status cohiggs_result_status(const cohiggs_result* result);
const char* cohiggs_result_payload(const cohiggs_result* result); /* NULL on error */
const char* cohiggs_result_error(const cohiggs_result* result);   /* NULL on success */
void cohiggs_result_free(cohiggs_result* result);

/* Static JSON array of the supported command names. */
const char* cohiggs_commands(void);

const char* cohiggs_version(void);

#ifdef __cplusplus
}
#endif

#endif /* COHIGGS_H */
