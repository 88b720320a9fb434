#pragma once

#include <string>
#include <vector>

#include "lateterms/config.hpp"

namespace lateterms {

inline constexpr const char* kVersion = "1.0.0";
std::string tool_banner();  // "late-terms <version>"

enum class Command { Coeffs, Compare, Growth, Oscillation };

// A rendered result set: '#' metadata lines, a header, string cells, and
// trailing '#' footer lines. Cell strings are identical across CSV and JSON.
struct OutputTable {
  std::vector<std::string> meta;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> footers;
};

// Computes the series (and model where needed) and lays out the rows for the
// given command. Throws ConfigError for invalid configs, including ranges too
// short for the requested Richardson orders.
OutputTable build_table(const RunConfig& cfg, Command cmd);

std::string render_csv(const OutputTable& t);
std::string render_json(const OutputTable& t);

}  // namespace lateterms
