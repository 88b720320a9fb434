/* late-terms C API: divergent eigenvalue perturbation series in exact
 * rational arithmetic, with late-term asymptotic diagnostics.
 *
 * All handles are opaque; every handle type has a matching *_free. Functions
 * returning lt_status report failures through the code plus lt_last_error();
 * functions returning char* or handles return NULL on failure. Strings
 * returned as char* are owned by the caller and released with
 * lt_string_free().
 */
#ifndef LATE_TERMS_H
#define LATE_TERMS_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lt_status {
  LT_OK = 0,
  LT_ERR_INVALID_ARGUMENT = 1, /* bad handle, index, or value */
  LT_ERR_BAD_CONFIG = 2,       /* unusable run configuration */
  LT_ERR_INTERNAL = 3
} lt_status;

typedef enum lt_command {
  LT_CMD_COEFFS = 0,
  LT_CMD_COMPARE = 1,
  LT_CMD_GROWTH = 2,
  LT_CMD_OSCILLATION = 3
} lt_command;

typedef struct lt_config lt_config;
typedef struct lt_series lt_series;
typedef struct lt_table lt_table;
typedef struct lt_report lt_report;

const char* lt_version(void);
/* Message for the most recent failure on this thread. Never NULL. */
const char* lt_last_error(void);
void lt_string_free(char* s);

/* ---- run configuration ---------------------------------------------------
 * A fresh config has no problem and n_max = 0; set at least those before
 * computing. Values set later win, so load a JSON file first and let
 * individual setters override it. */
lt_config* lt_config_new(void);
void lt_config_free(lt_config* cfg);
lt_status lt_config_set_problem(lt_config* cfg, const char* id);
/* value accepts "p/q" and exact decimal strings */
lt_status lt_config_set_param(lt_config* cfg, const char* name, const char* value);
lt_status lt_config_set_n_max(lt_config* cfg, unsigned n_max);
lt_status lt_config_set_n_start(lt_config* cfg, unsigned n_start);
lt_status lt_config_set_precision_bits(lt_config* cfg, unsigned bits);
lt_status lt_config_set_sig_digits(lt_config* cfg, unsigned digits);
/* count = 0 clears the Richardson columns */
lt_status lt_config_set_richardson_orders(lt_config* cfg, const int* orders, size_t count);
lt_status lt_config_load_json(lt_config* cfg, const char* json_text);
char* lt_config_dump_json(const lt_config* cfg);

/* ---- series --------------------------------------------------------------
 * Exact eigenvalue coefficients of the configured problem. */
lt_status lt_series_compute(const lt_config* cfg, lt_series** out);
void lt_series_free(lt_series* s);
unsigned lt_series_n_max(const lt_series* s);
/* Exact coefficient n as "p/q" (or "p" for integers). */
char* lt_series_coeff_exact(const lt_series* s, unsigned n);
/* Coefficient n rounded to sig_digits significant decimal digits. */
char* lt_series_coeff_decimal(const lt_series* s, unsigned n, unsigned sig_digits);

/* ---- tables ---------------------------------------------------------------
 * Row/column result sets behind the coeffs/compare/growth/oscillation
 * commands. Cells are strings; empty cells are "". */
lt_status lt_table_build(const lt_config* cfg, lt_command cmd, lt_table** out);
void lt_table_free(lt_table* t);
size_t lt_table_num_rows(const lt_table* t);
size_t lt_table_num_columns(const lt_table* t);
const char* lt_table_column_name(const lt_table* t, size_t col);
const char* lt_table_cell(const lt_table* t, size_t row, size_t col);
char* lt_table_render_csv(const lt_table* t);
char* lt_table_render_json(const lt_table* t);

/* ---- verification ----------------------------------------------------------
 * Runs the acceptance checks. `only` filters by check id or tag substring
 * (NULL or "" runs everything); `mutate` is a deliberate-corruption hook for
 * testing the failure path (NULL for none). */
lt_status lt_verify_run(const char* only, const char* mutate, unsigned precision_bits,
                        lt_report** out);
void lt_report_free(lt_report* r);
size_t lt_report_count(const lt_report* r);
const char* lt_report_id(const lt_report* r, size_t i);
int lt_report_passed(const lt_report* r, size_t i);
const char* lt_report_detail(const lt_report* r, size_t i);
double lt_report_millis(const lt_report* r, size_t i);
int lt_report_all_passed(const lt_report* r);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LATE_TERMS_H */
