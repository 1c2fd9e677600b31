/* C interface to the Torelli verification library.
 *
 * All functions are thread-compatible: handles are independent and never
 * shared internally. Functions returning torelli_status report failure
 * details through torelli_last_error() (thread-local storage).
 */
#ifndef TORELLI_H
#define TORELLI_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct torelli_cert torelli_cert;
typedef struct torelli_sweep_result torelli_sweep_result;

typedef enum {
    TORELLI_OK = 0,
    TORELLI_E_USAGE = 1,  /* unknown proposition, malformed request */
    TORELLI_E_PARAMS = 2, /* parameters outside the admissible range */
    TORELLI_E_IO = 3,
    TORELLI_E_INTERNAL = 4
} torelli_status;

const char* torelli_version(void);

/* Thread-local message for the most recent failing call. */
const char* torelli_last_error(void);

/* Runs one proposition verifier.
 *
 * proposition: one of tau-surjectivity, lantern, factorization-3.1a,
 *   factorization-3.1b, factorization-3.2, factorization-3.3, bcj-b2,
 *   sigma-surjectivity, boundary-twist-checks.
 * surface: "closed", "punctured" or "bordered"; may be NULL for
 *   propositions that need no parameters (lantern). genus/k are ignored in
 *   that case. Pass k = 0 to let factorization-3.3 pin k = g-2.
 * orbit_budget <= 0 and time_cap_seconds <= 0 select the defaults
 *   (50000 vectors, 300 s).
 */
torelli_status torelli_run(const char* proposition, int genus, int k, const char* surface,
                           long long orbit_budget, double time_cap_seconds, int mirror_twists,
                           torelli_cert** out);

/* Certificate accessors. Returned strings are owned by the handle. */
const char* torelli_cert_json(const torelli_cert* cert);
const char* torelli_cert_verdict(const torelli_cert* cert);
const char* torelli_cert_proposition(const torelli_cert* cert);
long long torelli_cert_elapsed_ms(const torelli_cert* cert);
torelli_status torelli_cert_write(const torelli_cert* cert, const char* path);
void torelli_cert_free(torelli_cert* cert);

/* Runs all applicable (proposition, g, k, kind) combinations.
 *
 * kinds_csv: comma-separated subset of closed,punctured,bordered.
 * propositions_csv: comma-separated ids, or NULL/"" for all.
 * fixed_k: 0 sweeps every valid k, otherwise pins k.
 */
torelli_status torelli_sweep(int gmin, int gmax, const char* kinds_csv, const char* propositions_csv,
                             int fixed_k, long long orbit_budget, double time_cap_seconds,
                             torelli_sweep_result** out);

size_t torelli_sweep_count(const torelli_sweep_result* sweep);
const torelli_cert* torelli_sweep_cert(const torelli_sweep_result* sweep, size_t index);
/* Suggested file name for the index-th certificate (deterministic). */
const char* torelli_sweep_filename(const torelli_sweep_result* sweep, size_t index);
const char* torelli_sweep_summary(const torelli_sweep_result* sweep);
int torelli_sweep_passed(const torelli_sweep_result* sweep);
int torelli_sweep_failed(const torelli_sweep_result* sweep);
int torelli_sweep_inconclusive(const torelli_sweep_result* sweep);
void torelli_sweep_free(torelli_sweep_result* sweep);

#ifdef __cplusplus
}
#endif

#endif /* TORELLI_H */
