#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "lateterms/problems.hpp"

namespace lateterms {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One run of one problem. Parameter values are parsed exactly ("0.5" and
// "1/2" are the same Rational).
struct RunConfig {
  std::string problem;
  std::map<std::string, Rational> params;
  unsigned n_max = 0;
  unsigned n_start = 5;
  unsigned precision_bits = 256;
  std::vector<int> richardson_orders{1, 2, 3};
  unsigned sig_digits = 20;

  // Throws ConfigError: unknown problem ids report the valid ids; TwoPole
  // requires exactly b > 0 and c > 0; other problems take no parameters.
  void validate() const;
  ProblemSpec to_problem_spec() const;

  // Flat JSON object with the fields above; parameters as exact strings.
  std::string dump_json() const;
  static RunConfig from_json(const std::string& text);  // throws ConfigError
};

}  // namespace lateterms
