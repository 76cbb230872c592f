/*
 * C interface to the tracar storage-provisioning library.
 *
 * The library computes the transaction-rate-per-capacity breakpoint between
 * two secondary-storage technologies and recommends a technology and
 * DRAM/storage/server configuration for a predicted dataset growth trend.
 *
 * Usage: create a run from a JSON config (NULL selects the built-in
 * defaults), optionally apply dotted-path overrides, then execute one of
 * the commands. All state hangs off the opaque tracar_run handle; handles
 * are not thread-safe, but independent handles may be used concurrently.
 */
#ifndef TRACAR_H
#define TRACAR_H

#ifndef TRACAR_API
#if defined(_WIN32)
#define TRACAR_API __declspec(dllexport)
#else
#define TRACAR_API __attribute__((visibility("default")))
#endif
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tracar_status {
    TRACAR_OK = 0,
    TRACAR_INVALID_ARGUMENT = 1,
    TRACAR_CONFIG_ERROR = 2,
    TRACAR_INFEASIBLE = 3,
    TRACAR_IO_ERROR = 4,
    TRACAR_INTERNAL_ERROR = 5
} tracar_status;

typedef struct tracar_run tracar_run;

/* Library version as "major.minor.patch". */
TRACAR_API const char* tracar_version(void);

/* Process exit code the CLI uses for a status: 0 ok, 2 config error,
 * 3 infeasible demand, 4 I/O failure, 1 anything else. */
TRACAR_API int tracar_status_exit_code(tracar_status status);

/* Create a run from a JSON config document; NULL or "" means defaults.
 * On failure *out_run is still created when possible so the error message
 * can be read; always free the handle. */
TRACAR_API tracar_status tracar_run_new(const char* config_json, tracar_run** out_run);
TRACAR_API tracar_status tracar_run_new_from_file(const char* path, tracar_run** out_run);

/* Apply one "key.path=value" override on top of the config; overrides win
 * over the file, the file over defaults. Values parse as JSON when
 * possible, else as strings: book.dram_usd_per_gb=6.25, output.dir=out,
 * simulation.memory_fractions=[0.01,0.1,1.0]. */
TRACAR_API tracar_status tracar_run_set(tracar_run* run, const char* assignment);

/* Execute "profile", "plan", "breakpoint", "recommend", or "sensitivity".
 * Artifacts are written atomically into the configured output directory;
 * identical config and seeds yield byte-identical files. */
TRACAR_API tracar_status tracar_run_execute(tracar_run* run, const char* command);

/* Results of the last successful execute. Returned strings are owned by
 * the run handle and remain valid until the next call on it. */
TRACAR_API const char* tracar_run_report_json(const tracar_run* run);
TRACAR_API const char* tracar_run_report_text(const tracar_run* run);

/* Single-line message of the last error on this handle, or "" if none. */
TRACAR_API const char* tracar_run_error(const tracar_run* run);

TRACAR_API void tracar_run_free(tracar_run* run);

#ifdef __cplusplus
}
#endif

#endif /* TRACAR_H */
