// End-to-end tests that spawn the installed CLI binary (path injected by the
// build as LT_CLI_PATH) and inspect exit codes, stdout/stderr, and files.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr interleaved
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(LT_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, got);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string temp_path(const std::string& name) {
  const char* dir = std::getenv("TMPDIR");
  return std::string(dir ? dir : "/tmp") + "/" + name;
}

}  // namespace

TEST_CASE("coeffs emits exact rossby values") {
  auto r = run_cli("coeffs --problem rossby --n-max 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("# late-terms 1.0.0") != std::string::npos);
  CHECK(r.output.find("n,coeff_exact,coeff_float") != std::string::npos);
  CHECK(r.output.find("0,0,0") != std::string::npos);
  CHECK(r.output.find("1,1,1") != std::string::npos);
  CHECK(r.output.find("2,1/2,0.5") != std::string::npos);
}

TEST_CASE("coeffs twopole carries omega_1 = 1/2") {
  auto r = run_cli("coeffs --problem twopole --param b=1 --param c=1 --n-max 1");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("1,1/2,0.5") != std::string::npos);
}

TEST_CASE("unknown problem id exits 2 and lists the valid ids") {
  auto r = run_cli("coeffs --problem nosuch --n-max 3");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("blackhole") != std::string::npos);
  CHECK(r.output.find("anharmonic") != std::string::npos);
  CHECK(r.output.find("rossby") != std::string::npos);
  CHECK(r.output.find("twopole") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code == 2);
  CHECK(run_cli("coeffs --problem rossby").exit_code == 2);          // n_max missing
  CHECK(run_cli("coeffs --problem rossby --n-max 0").exit_code == 2);
  CHECK(run_cli("compare --problem rossby --n-max 3").exit_code == 2);  // range too short
  CHECK(run_cli("coeffs --problem rossby --n-max 3 --format yaml").exit_code == 2);
  CHECK(run_cli("oscillation --problem rossby --n-max 9").exit_code == 2);
  CHECK(run_cli("coeffs --problem rossby --n-max 3 --param b=1").exit_code == 2);
}

TEST_CASE("help exits 0") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("--version").output.find("late-terms 1.0.0") != std::string::npos);
}

TEST_CASE("csv output is byte-identical across runs") {
  std::string args = "compare --problem anharmonic --n-max 25";
  auto a = run_cli(args);
  auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("json format parses and matches csv values") {
  auto csv = run_cli("coeffs --problem rossby --n-max 4");
  auto js = run_cli("coeffs --problem rossby --n-max 4 --format json");
  CHECK(js.exit_code == 0);
  auto j = nlohmann::json::parse(js.output);
  CHECK(j["rows"].size() == 5);
  CHECK(j["rows"][2]["coeff_exact"] == "1/2");
  CHECK(j["rows"][4]["coeff_exact"] == "11/4");
  CHECK(csv.output.find("4,11/4,2.75") != std::string::npos);
}

TEST_CASE("--out writes the same bytes as stdout") {
  std::string path = temp_path("lt_cli_out_test.csv");
  std::remove(path.c_str());
  auto direct = run_cli("growth --problem blackhole --n-max 12");
  auto filed = run_cli("growth --problem blackhole --n-max 12 --out " + path);
  CHECK(filed.exit_code == 0);
  CHECK(filed.output.empty());
  CHECK(slurp(path) == direct.output);
  CHECK(direct.output.find("# slope n in [6,12]:") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("dump-config round trips through --config") {
  auto dumped = run_cli(
      "compare --problem twopole --param b=1 --param c=3 --n-max 30 --n-start 6 "
      "--richardson 1,2 --dump-config");
  REQUIRE(dumped.exit_code == 0);
  std::string path = temp_path("lt_cli_cfg_test.json");
  {
    std::ofstream out(path, std::ios::binary);
    out << dumped.output;
  }
  auto again = run_cli("compare --config " + path + " --dump-config");
  CHECK(again.exit_code == 0);
  CHECK(again.output == dumped.output);
  // flags override the file
  auto overridden = run_cli("compare --config " + path + " --n-max 40 --dump-config");
  CHECK(overridden.output.find("\"n_max\":40") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("LATE_TERMS_PRECISION seeds the default precision") {
  auto r = run_cli("coeffs --problem rossby --n-max 2 --dump-config");
  CHECK(r.output.find("\"precision_bits\":256") != std::string::npos);
  setenv("LATE_TERMS_PRECISION", "192", 1);
  auto env = run_cli("coeffs --problem rossby --n-max 2 --dump-config");
  CHECK(env.output.find("\"precision_bits\":192") != std::string::npos);
  auto flag = run_cli("coeffs --problem rossby --n-max 2 --precision-bits 320 --dump-config");
  CHECK(flag.output.find("\"precision_bits\":320") != std::string::npos);
  unsetenv("LATE_TERMS_PRECISION");
}

TEST_CASE("oscillation command emits the continuous column") {
  auto r = run_cli("oscillation --problem twopole --param b=1 --param c=3 --n-max 8");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("n,normalized_numeric,normalized_predicted,continuous_predicted") !=
        std::string::npos);
  CHECK(r.output.find("\n5.1,,,") != std::string::npos);
}

TEST_CASE("verify subcommand filters and reports failures") {
  auto ok = run_cli("verify --only gamma-half");
  CHECK(ok.exit_code == 0);
  CHECK(ok.output.find("[PASS] 7c-gamma-half-recurrence") != std::string::npos);
  CHECK(ok.output.find("1/1 checks passed") != std::string::npos);

  auto filtered = run_cli("verify --only anharmonic");
  CHECK(filtered.exit_code == 0);
  CHECK(filtered.output.find("2-anharmonic-oracle") != std::string::npos);
  CHECK(filtered.output.find("4a-blackhole") == std::string::npos);

  auto mutated = run_cli("verify --only 1-exact-low-order --mutate blackhole_w1");
  CHECK(mutated.exit_code == 1);
  CHECK(mutated.output.find("[FAIL]") != std::string::npos);
  CHECK(mutated.output.find("exact mismatch") != std::string::npos);

  auto unknown = run_cli("verify --only matches-nothing");
  CHECK(unknown.exit_code == 2);
}
