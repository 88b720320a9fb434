#include "lateterms/config.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace lateterms {

namespace {
using json = nlohmann::ordered_json;
}

void RunConfig::validate() const {
  Problem kind;
  try {
    kind = problem_from_id(problem);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (n_max < 1) throw ConfigError("n_max must be at least 1");
  if (n_start < 2) throw ConfigError("n_start must be at least 2");
  if (precision_bits < 32 || precision_bits > 1u << 24)
    throw ConfigError("precision_bits must lie in [32, 2^24]");
  if (sig_digits < 1 || sig_digits > 10000)
    throw ConfigError("sig_digits must lie in [1, 10000]");
  std::set<int> seen;
  for (int m : richardson_orders) {
    if (m < 1 || m > 8) throw ConfigError("richardson orders must lie in [1, 8]");
    if (!seen.insert(m).second) throw ConfigError("duplicate richardson order");
  }
  if (kind == Problem::TwoPole) {
    for (const auto& [k, v] : params)
      if (k != "b" && k != "c")
        throw ConfigError("twopole takes parameters b and c only, got '" + k + "'");
    if (!params.count("b") || !params.count("c"))
      throw ConfigError("twopole requires parameters b and c");
    if (params.at("b").sign() <= 0 || params.at("c").sign() <= 0)
      throw ConfigError("twopole requires b > 0 and c > 0");
  } else if (!params.empty()) {
    throw ConfigError(std::string(problem_id(kind)) + " takes no parameters");
  }
}

ProblemSpec RunConfig::to_problem_spec() const {
  validate();
  switch (problem_from_id(problem)) {
    case Problem::BlackHole: return ProblemSpec::black_hole(n_max);
    case Problem::Anharmonic: return ProblemSpec::anharmonic(n_max);
    case Problem::Rossby: return ProblemSpec::rossby(n_max);
    case Problem::TwoPole: return ProblemSpec::two_pole(params.at("b"), params.at("c"), n_max);
  }
  throw ConfigError("unreachable");
}

std::string RunConfig::dump_json() const {
  json j;
  j["problem"] = problem;
  json p = json::object();
  for (const auto& [k, v] : params) p[k] = v.to_string();
  j["params"] = p;
  j["n_max"] = n_max;
  j["n_start"] = n_start;
  j["precision_bits"] = precision_bits;
  j["richardson_orders"] = richardson_orders;
  j["sig_digits"] = sig_digits;
  return j.dump();
}

RunConfig RunConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig cfg;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    try {
      if (key == "problem") {
        cfg.problem = it.value().get<std::string>();
      } else if (key == "params") {
        if (!it.value().is_object()) throw ConfigError("params must be an object");
        for (auto p = it.value().begin(); p != it.value().end(); ++p)
          cfg.params[p.key()] = Rational::parse(p.value().get<std::string>());
      } else if (key == "n_max") {
        cfg.n_max = it.value().get<unsigned>();
      } else if (key == "n_start") {
        cfg.n_start = it.value().get<unsigned>();
      } else if (key == "precision_bits") {
        cfg.precision_bits = it.value().get<unsigned>();
      } else if (key == "richardson_orders") {
        cfg.richardson_orders = it.value().get<std::vector<int>>();
      } else if (key == "sig_digits") {
        cfg.sig_digits = it.value().get<unsigned>();
      } else {
        throw ConfigError("unknown config key '" + key + "'");
      }
    } catch (const json::exception& e) {
      throw ConfigError("bad value for config key '" + key + "': " + e.what());
    } catch (const std::invalid_argument& e) {
      throw ConfigError("bad value for config key '" + key + "': " + e.what());
    } catch (const std::domain_error& e) {
      throw ConfigError("bad value for config key '" + key + "': " + e.what());
    }
  }
  return cfg;
}

}  // namespace lateterms
