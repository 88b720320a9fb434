// Command-line front end. Talks to the core exclusively through the C API in
// late_terms.h; everything numeric happens behind that boundary.

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "late_terms.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

struct ConfigDeleter {
  void operator()(lt_config* c) const { lt_config_free(c); }
};
using ConfigPtr = std::unique_ptr<lt_config, ConfigDeleter>;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] void fail(const std::string& msg) { throw CliError(msg); }

void check(lt_status st) {
  if (st != LT_OK) fail(lt_last_error());
}

// Options shared by the table-producing subcommands.
struct TableOptions {
  CLI::App* cmd = nullptr;
  std::string problem;
  std::vector<std::string> params;
  unsigned n_max = 0;
  unsigned n_start = 0;
  unsigned precision_bits = 0;
  unsigned digits = 0;
  std::string richardson;
  std::string config_file;
  std::string out_file;
  std::string format = "csv";
  bool dump_config = false;

  bool given(const std::string& flag) const { return cmd->count(flag) > 0; }
};

void add_table_flags(CLI::App* cmd, TableOptions& o) {
  o.cmd = cmd;
  cmd->add_option("--problem", o.problem, "problem id: blackhole, anharmonic, rossby, twopole");
  cmd->add_option("--param", o.params, "problem parameter as name=value (value exact: 1/2 or 0.5)");
  cmd->add_option("--n-max", o.n_max, "highest eigenvalue coefficient index");
  cmd->add_option("--n-start", o.n_start, "first order entering ratio sequences (default 5)");
  cmd->add_option("--precision-bits", o.precision_bits, "working float precision (default 256)");
  cmd->add_option("--digits", o.digits, "significant decimal digits in output (default 20)");
  cmd->add_option("--richardson", o.richardson,
                  "comma-separated Richardson orders, e.g. 1,2,3 ('none' for none)");
  cmd->add_option("--config", o.config_file, "JSON config file; explicit flags override it");
  cmd->add_option("--out", o.out_file, "output file (written atomically); stdout if absent");
  cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--dump-config", o.dump_config, "print the effective config as JSON and exit");
}

std::vector<int> parse_orders(const std::string& text) {
  if (text.empty() || text == "none") return {};
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      fail("bad --richardson entry '" + item + "'");
    }
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail("cannot write '" + tmp + "'");
    out << content;
    if (!out.flush()) fail("write to '" + tmp + "' failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    fail("cannot rename '" + tmp + "' to '" + path + "'");
  }
}

ConfigPtr build_config(const TableOptions& o) {
  ConfigPtr cfg(lt_config_new());
  if (!cfg) fail("out of memory");
  // Precedence, lowest to highest: built-in defaults, LATE_TERMS_PRECISION,
  // config file, explicit flags.
  if (const char* env = std::getenv("LATE_TERMS_PRECISION")) {
    try {
      check(lt_config_set_precision_bits(cfg.get(), std::stoul(env)));
    } catch (const CliError&) {
      throw;
    } catch (const std::exception&) {
      fail("bad LATE_TERMS_PRECISION value '" + std::string(env) + "'");
    }
  }
  if (!o.config_file.empty())
    check(lt_config_load_json(cfg.get(), read_file(o.config_file).c_str()));
  if (o.given("--problem")) check(lt_config_set_problem(cfg.get(), o.problem.c_str()));
  for (const auto& p : o.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) fail("--param expects name=value, got '" + p + "'");
    check(lt_config_set_param(cfg.get(), p.substr(0, eq).c_str(), p.substr(eq + 1).c_str()));
  }
  if (o.given("--n-max")) check(lt_config_set_n_max(cfg.get(), o.n_max));
  if (o.given("--n-start")) check(lt_config_set_n_start(cfg.get(), o.n_start));
  if (o.given("--precision-bits")) check(lt_config_set_precision_bits(cfg.get(), o.precision_bits));
  if (o.given("--digits")) check(lt_config_set_sig_digits(cfg.get(), o.digits));
  if (o.given("--richardson")) {
    auto orders = parse_orders(o.richardson);
    check(lt_config_set_richardson_orders(cfg.get(), orders.data(), orders.size()));
  }
  return cfg;
}

int run_table_command(const TableOptions& o, lt_command cmd) {
  ConfigPtr cfg = build_config(o);
  if (o.dump_config) {
    char* json = lt_config_dump_json(cfg.get());
    if (!json) fail(lt_last_error());
    std::cout << json << "\n";
    lt_string_free(json);
    return kExitOk;
  }
  lt_table* table = nullptr;
  check(lt_table_build(cfg.get(), cmd, &table));
  char* text = o.format == "json" ? lt_table_render_json(table) : lt_table_render_csv(table);
  lt_table_free(table);
  if (!text) fail(lt_last_error());
  std::string content(text);
  lt_string_free(text);
  if (o.out_file.empty())
    std::cout << content;
  else
    write_atomic(o.out_file, content);
  return kExitOk;
}

int run_verify(const std::string& only, const std::string& mutate, unsigned precision_bits) {
  lt_report* report = nullptr;
  check(lt_verify_run(only.empty() ? nullptr : only.c_str(),
                      mutate.empty() ? nullptr : mutate.c_str(), precision_bits, &report));
  size_t n = lt_report_count(report);
  size_t failed = 0;
  for (size_t i = 0; i < n; ++i) {
    bool ok = lt_report_passed(report, i) != 0;
    if (!ok) ++failed;
    std::printf("[%s] %-26s %8.1f ms  %s\n", ok ? "PASS" : "FAIL", lt_report_id(report, i),
                lt_report_millis(report, i), lt_report_detail(report, i));
  }
  std::printf("%zu/%zu checks passed\n", n - failed, n);
  bool all_ok = lt_report_all_passed(report) != 0;
  lt_report_free(report);
  return all_ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"late-terms: exact divergent eigenvalue perturbation series and "
               "late-term asymptotic diagnostics"};
  app.set_version_flag("--version", std::string("late-terms ") + lt_version());
  app.require_subcommand(1);

  TableOptions coeffs_opts, compare_opts, growth_opts, osc_opts;
  auto* coeffs = app.add_subcommand("coeffs", "exact series coefficients");
  add_table_flags(coeffs, coeffs_opts);
  auto* compare = app.add_subcommand(
      "compare", "coefficients against the late-term prediction, with Richardson columns");
  add_table_flags(compare, compare_opts);
  auto* growth = app.add_subcommand("growth", "|coefficient|^(1/n) growth diagnostic");
  add_table_flags(growth, growth_opts);
  auto* oscillation =
      app.add_subcommand("oscillation", "two-pole normalized oscillation comparison");
  add_table_flags(oscillation, osc_opts);

  std::string only, mutate;
  unsigned verify_precision = 0;
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--only", only, "run only checks matching this id or tag substring");
  verify->add_option("--mutate", mutate, "deliberate-corruption hook (testing)")
      ->group("");  // hidden
  verify->add_option("--precision-bits", verify_precision, "working float precision");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (coeffs->parsed()) return run_table_command(coeffs_opts, LT_CMD_COEFFS);
    if (compare->parsed()) return run_table_command(compare_opts, LT_CMD_COMPARE);
    if (growth->parsed()) return run_table_command(growth_opts, LT_CMD_GROWTH);
    if (oscillation->parsed()) return run_table_command(osc_opts, LT_CMD_OSCILLATION);
    if (verify->parsed()) return run_verify(only, mutate, verify_precision);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
