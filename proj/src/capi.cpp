#include "late_terms.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "lateterms/bigfloat.hpp"
#include "lateterms/table.hpp"
#include "lateterms/verify.hpp"

struct lt_config {
  lateterms::RunConfig cfg;
};
struct lt_series {
  lateterms::EigenSeries series;
  unsigned precision_bits;
};
struct lt_table {
  lateterms::OutputTable table;
};
struct lt_report {
  std::vector<lateterms::CriterionResult> results;
};

namespace {

thread_local std::string g_last_error = "";

void set_error(const std::string& msg) { g_last_error = msg; }

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Maps C++ exceptions onto status codes; config problems surface as
// LT_ERR_BAD_CONFIG, everything argument-shaped as LT_ERR_INVALID_ARGUMENT.
template <typename Fn>
lt_status guarded(Fn&& fn) {
  try {
    fn();
    return LT_OK;
  } catch (const lateterms::ConfigError& e) {
    set_error(e.what());
    return LT_ERR_BAD_CONFIG;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return LT_ERR_INVALID_ARGUMENT;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return LT_ERR_INVALID_ARGUMENT;
  } catch (const std::exception& e) {
    set_error(e.what());
    return LT_ERR_INTERNAL;
  } catch (...) {
    set_error("unknown error");
    return LT_ERR_INTERNAL;
  }
}

lt_status require(bool ok, const char* what) {
  if (ok) return LT_OK;
  set_error(what);
  return LT_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* lt_version(void) { return lateterms::kVersion; }

const char* lt_last_error(void) { return g_last_error.c_str(); }

void lt_string_free(char* s) { std::free(s); }

/* ---- config ---- */

lt_config* lt_config_new(void) { return new (std::nothrow) lt_config{}; }

void lt_config_free(lt_config* cfg) { delete cfg; }

lt_status lt_config_set_problem(lt_config* cfg, const char* id) {
  if (lt_status st = require(cfg && id, "null argument"); st != LT_OK) return st;
  return guarded([&] {
    lateterms::problem_from_id(id);  // reject unknown ids eagerly
    cfg->cfg.problem = id;
  });
}

lt_status lt_config_set_param(lt_config* cfg, const char* name, const char* value) {
  if (lt_status st = require(cfg && name && value, "null argument"); st != LT_OK) return st;
  return guarded([&] { cfg->cfg.params[name] = lateterms::Rational::parse(value); });
}

lt_status lt_config_set_n_max(lt_config* cfg, unsigned n_max) {
  if (lt_status st = require(cfg != nullptr, "null config"); st != LT_OK) return st;
  cfg->cfg.n_max = n_max;
  return LT_OK;
}

lt_status lt_config_set_n_start(lt_config* cfg, unsigned n_start) {
  if (lt_status st = require(cfg != nullptr, "null config"); st != LT_OK) return st;
  cfg->cfg.n_start = n_start;
  return LT_OK;
}

lt_status lt_config_set_precision_bits(lt_config* cfg, unsigned bits) {
  if (lt_status st = require(cfg != nullptr, "null config"); st != LT_OK) return st;
  cfg->cfg.precision_bits = bits;
  return LT_OK;
}

lt_status lt_config_set_sig_digits(lt_config* cfg, unsigned digits) {
  if (lt_status st = require(cfg != nullptr, "null config"); st != LT_OK) return st;
  cfg->cfg.sig_digits = digits;
  return LT_OK;
}

lt_status lt_config_set_richardson_orders(lt_config* cfg, const int* orders, size_t count) {
  if (lt_status st = require(cfg && (orders || count == 0), "null argument"); st != LT_OK)
    return st;
  cfg->cfg.richardson_orders.assign(orders, orders + count);
  return LT_OK;
}

lt_status lt_config_load_json(lt_config* cfg, const char* json_text) {
  if (lt_status st = require(cfg && json_text, "null argument"); st != LT_OK) return st;
  return guarded([&] { cfg->cfg = lateterms::RunConfig::from_json(json_text); });
}

char* lt_config_dump_json(const lt_config* cfg) {
  if (!cfg) {
    set_error("null config");
    return nullptr;
  }
  return dup_string(cfg->cfg.dump_json());
}

/* ---- series ---- */

lt_status lt_series_compute(const lt_config* cfg, lt_series** out) {
  if (lt_status st = require(cfg && out, "null argument"); st != LT_OK) return st;
  return guarded([&] {
    lateterms::ProblemSpec spec = cfg->cfg.to_problem_spec();
    *out = new lt_series{lateterms::compute_series(spec), cfg->cfg.precision_bits};
  });
}

void lt_series_free(lt_series* s) { delete s; }

unsigned lt_series_n_max(const lt_series* s) { return s ? s->series.problem.n_max : 0; }

char* lt_series_coeff_exact(const lt_series* s, unsigned n) {
  if (!s || n >= s->series.coeffs.size()) {
    set_error("coefficient index out of range");
    return nullptr;
  }
  return dup_string(s->series.coeffs[n].to_string());
}

char* lt_series_coeff_decimal(const lt_series* s, unsigned n, unsigned sig_digits) {
  if (!s || n >= s->series.coeffs.size()) {
    set_error("coefficient index out of range");
    return nullptr;
  }
  if (sig_digits < 1) {
    set_error("sig_digits must be positive");
    return nullptr;
  }
  return dup_string(
      lateterms::BigFloat::of(s->series.coeffs[n], s->precision_bits).to_string(sig_digits));
}

/* ---- tables ---- */

lt_status lt_table_build(const lt_config* cfg, lt_command cmd, lt_table** out) {
  if (lt_status st = require(cfg && out, "null argument"); st != LT_OK) return st;
  lateterms::Command command;
  switch (cmd) {
    case LT_CMD_COEFFS: command = lateterms::Command::Coeffs; break;
    case LT_CMD_COMPARE: command = lateterms::Command::Compare; break;
    case LT_CMD_GROWTH: command = lateterms::Command::Growth; break;
    case LT_CMD_OSCILLATION: command = lateterms::Command::Oscillation; break;
    default: return require(false, "unknown command");
  }
  return guarded([&] { *out = new lt_table{lateterms::build_table(cfg->cfg, command)}; });
}

void lt_table_free(lt_table* t) { delete t; }

size_t lt_table_num_rows(const lt_table* t) { return t ? t->table.rows.size() : 0; }

size_t lt_table_num_columns(const lt_table* t) { return t ? t->table.columns.size() : 0; }

const char* lt_table_column_name(const lt_table* t, size_t col) {
  if (!t || col >= t->table.columns.size()) {
    set_error("column index out of range");
    return nullptr;
  }
  return t->table.columns[col].c_str();
}

const char* lt_table_cell(const lt_table* t, size_t row, size_t col) {
  if (!t || row >= t->table.rows.size() || col >= t->table.rows[row].size()) {
    set_error("cell index out of range");
    return nullptr;
  }
  return t->table.rows[row][col].c_str();
}

char* lt_table_render_csv(const lt_table* t) {
  if (!t) {
    set_error("null table");
    return nullptr;
  }
  return dup_string(lateterms::render_csv(t->table));
}

char* lt_table_render_json(const lt_table* t) {
  if (!t) {
    set_error("null table");
    return nullptr;
  }
  return dup_string(lateterms::render_json(t->table));
}

/* ---- verify ---- */

lt_status lt_verify_run(const char* only, const char* mutate, unsigned precision_bits,
                        lt_report** out) {
  if (lt_status st = require(out != nullptr, "null output pointer"); st != LT_OK) return st;
  return guarded([&] {
    lateterms::VerifyOptions opts;
    if (only) opts.only = only;
    if (mutate) opts.mutate = mutate;
    if (precision_bits) opts.precision_bits = precision_bits;
    *out = new lt_report{lateterms::run_acceptance(opts)};
  });
}

void lt_report_free(lt_report* r) { delete r; }

size_t lt_report_count(const lt_report* r) { return r ? r->results.size() : 0; }

const char* lt_report_id(const lt_report* r, size_t i) {
  return (r && i < r->results.size()) ? r->results[i].id.c_str() : nullptr;
}

int lt_report_passed(const lt_report* r, size_t i) {
  return (r && i < r->results.size()) ? (r->results[i].passed ? 1 : 0) : 0;
}

const char* lt_report_detail(const lt_report* r, size_t i) {
  return (r && i < r->results.size()) ? r->results[i].detail.c_str() : nullptr;
}

double lt_report_millis(const lt_report* r, size_t i) {
  return (r && i < r->results.size()) ? r->results[i].millis : 0.0;
}

int lt_report_all_passed(const lt_report* r) {
  return (r && lateterms::all_passed(r->results)) ? 1 : 0;
}

} /* extern "C" */
