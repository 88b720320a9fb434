#include "lateterms/table.hpp"

#include <algorithm>

#include "json.hpp"
#include "lateterms/analysis.hpp"

namespace lateterms {

namespace {

using json = nlohmann::ordered_json;

std::string fmt(const BigFloat& v, unsigned digits) { return v.to_string(digits); }

std::string fmt(const Rational& v, unsigned digits, unsigned prec) {
  return BigFloat::of(v, prec).to_string(digits);
}

std::vector<std::string> meta_lines(const RunConfig& cfg) {
  return {tool_banner(), "config: " + cfg.dump_json()};
}

std::vector<std::string> row_columns(const RunConfig& cfg) {
  std::vector<std::string> cols{"n", "coeff_exact", "coeff_float", "predicted", "ratio"};
  for (int m : cfg.richardson_orders) cols.push_back("ratio_r" + std::to_string(m));
  return cols;
}

// Shared row layout of the coeffs and compare commands. with_predictions
// controls whether the prediction/ratio columns are populated.
OutputTable series_table(const RunConfig& cfg, bool with_predictions) {
  cfg.validate();
  int max_order = 0;
  for (int m : cfg.richardson_orders) max_order = std::max(max_order, m);
  if (with_predictions && cfg.n_max < cfg.n_start + static_cast<unsigned>(max_order) + 1)
    throw ConfigError("n_max too small for n_start plus the requested richardson orders");

  const ProblemSpec spec = cfg.to_problem_spec();
  const EigenSeries series = compute_series(spec);

  OutputTable t;
  t.meta = meta_lines(cfg);
  t.columns = row_columns(cfg);
  const unsigned digits = cfg.sig_digits;
  const unsigned prec = cfg.precision_bits;

  std::vector<std::string> predicted(cfg.n_max + 1), ratio(cfg.n_max + 1);
  std::vector<std::vector<std::string>> rich(cfg.richardson_orders.size(),
                                             std::vector<std::string>(cfg.n_max + 1));
  if (with_predictions) {
    const LateTermModel model = model_for(spec, prec);
    for (unsigned long n = 2; n <= cfg.n_max; ++n)
      predicted[n] = fmt(eval_model(model, n, prec), digits);
    RatioSeries rs = ratio_sequence(series, model, cfg.n_start, cfg.n_max, prec,
                                    std::span<const int>(cfg.richardson_orders));
    for (std::size_t j = 0; j < rs.values.size(); ++j)
      ratio[cfg.n_start + j] = fmt(rs.values[j], digits);
    // A Richardson value lands on the row of its stencil's last point.
    for (std::size_t oi = 0; oi < cfg.richardson_orders.size(); ++oi) {
      int m = cfg.richardson_orders[oi];
      const auto& col = rs.richardson.at(m);
      for (std::size_t j = 0; j < col.size(); ++j)
        rich[oi][cfg.n_start + j + static_cast<unsigned>(m)] = fmt(col[j], digits);
    }
  }

  for (unsigned long n = 0; n <= cfg.n_max; ++n) {
    std::vector<std::string> row;
    row.push_back(std::to_string(n));
    row.push_back(series.coeffs[n].to_string());
    row.push_back(fmt(series.coeffs[n], digits, prec));
    row.push_back(predicted[n]);
    row.push_back(ratio[n]);
    for (std::size_t oi = 0; oi < cfg.richardson_orders.size(); ++oi)
      row.push_back(rich[oi][n]);
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

std::string tool_banner() { return std::string("late-terms ") + kVersion; }

OutputTable build_table(const RunConfig& cfg, Command cmd) {
  switch (cmd) {
    case Command::Coeffs:
      return series_table(cfg, false);
    case Command::Compare:
      return series_table(cfg, true);
    case Command::Growth: {
      cfg.validate();
      const EigenSeries series = compute_series(cfg.to_problem_spec());
      auto growth = growth_sequence(series, cfg.precision_bits);
      OutputTable t;
      t.meta = meta_lines(cfg);
      t.columns = {"n", "growth"};
      for (const auto& p : growth)
        t.rows.push_back({std::to_string(p.n),
                          p.defined ? fmt(p.value, cfg.sig_digits) : std::string()});
      long lo = static_cast<long>(cfg.n_max) / 2, hi = static_cast<long>(cfg.n_max);
      try {
        BigFloat slope = slope_fit(std::span<const GrowthPoint>(growth), lo, hi);
        t.footers.push_back("slope n in [" + std::to_string(lo) + "," + std::to_string(hi) +
                            "]: " + fmt(slope, cfg.sig_digits));
      } catch (const std::invalid_argument&) {
        t.footers.push_back("slope n in [" + std::to_string(lo) + "," + std::to_string(hi) +
                            "]: unavailable (fewer than 5 points)");
      }
      return t;
    }
    case Command::Oscillation: {
      cfg.validate();
      if (cfg.problem != "twopole")
        throw ConfigError("oscillation applies to the twopole problem only");
      const ProblemSpec spec = cfg.to_problem_spec();
      if (cfg.n_max < cfg.n_start)
        throw ConfigError("n_max must be at least n_start");
      const EigenSeries series = compute_series(spec);
      const LateTermModel model = model_for(spec, cfg.precision_bits);
      auto rows = oscillation_table(series, model, cfg.n_start, cfg.n_max, cfg.precision_bits);

      OutputTable t;
      t.meta = meta_lines(cfg);
      t.columns = {"n", "normalized_numeric", "normalized_predicted", "continuous_predicted"};
      const unsigned prec = cfg.precision_bits;
      // Ten samples per integer for the continuous cosine curve.
      for (unsigned long tenths = 10UL * cfg.n_start; tenths <= 10UL * cfg.n_max; ++tenths) {
        unsigned long n = tenths / 10, frac = tenths % 10;
        std::string n_str = std::to_string(n);
        if (frac != 0) n_str += "." + std::to_string(frac);
        BigFloat nv = BigFloat::of(static_cast<long>(tenths), prec) / BigFloat::of(10L, prec);
        std::string cont = fmt(oscillation_predicted_at(model, nv), cfg.sig_digits);
        if (frac == 0) {
          const auto& r = rows[n - cfg.n_start];
          t.rows.push_back({n_str, fmt(r.numeric, cfg.sig_digits),
                            fmt(r.predicted, cfg.sig_digits), cont});
        } else {
          t.rows.push_back({n_str, "", "", cont});
        }
      }
      return t;
    }
  }
  throw ConfigError("unknown command");
}

std::string render_csv(const OutputTable& t) {
  std::string out;
  for (const auto& m : t.meta) out += "# " + m + "\n";
  for (std::size_t c = 0; c < t.columns.size(); ++c) {
    if (c) out += ",";
    out += t.columns[c];
  }
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ",";
      out += row[c];
    }
    out += "\n";
  }
  for (const auto& f : t.footers) out += "# " + f + "\n";
  return out;
}

std::string render_json(const OutputTable& t) {
  json j;
  json meta = json::object();
  meta["tool"] = tool_banner();
  for (const auto& m : t.meta) {
    if (m.rfind("config: ", 0) == 0) meta["config"] = json::parse(m.substr(8));
  }
  j["meta"] = meta;
  j["columns"] = t.columns;
  json rows = json::array();
  for (const auto& row : t.rows) {
    json obj = json::object();
    for (std::size_t c = 0; c < row.size() && c < t.columns.size(); ++c)
      obj[t.columns[c]] = row[c];
    rows.push_back(std::move(obj));
  }
  j["rows"] = rows;
  j["footers"] = t.footers;
  return j.dump() + "\n";
}

}  // namespace lateterms
