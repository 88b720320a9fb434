#pragma once

#include <map>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "lateterms/asymptotics.hpp"

namespace lateterms {

// Ratio of computed coefficients to the late-term prediction over
// [n_start, n_end], plus optional Richardson-accelerated columns.
struct RatioSeries {
  long n_start = 0;
  std::vector<BigFloat> values;
  // Entries where the prediction sits within 1e-6 of the oscillation
  // envelope's zero (possible only for conjugate-pair models). Flagged, not
  // dropped; exclude them from relative-error statistics.
  std::vector<bool> flagged;
  std::map<int, std::vector<BigFloat>> richardson;  // order m -> length len-m
};

enum class RatioPath {
  Auto,     // exact factored route when the model provides one
  Generic,  // always divide by eval_model
};

RatioSeries ratio_sequence(const EigenSeries& series, const LateTermModel& model,
                           unsigned n_start, unsigned n_end,
                           unsigned precision_bits = kDefaultPrecisionBits,
                           std::span<const int> richardson_orders = {},
                           RatioPath path = RatioPath::Auto);

// Classical m-term Richardson step for sequences with 1/n-power tails:
//   out[j] = sum_{k=0}^{m} seq[j+k] (n_j+k)^m (-1)^{k+m} / (k! (m-k)!).
// Preserves constants exactly and annihilates 1/n^k tails up to k = m.
// Works elementwise over Rational (exact) or BigFloat.
template <typename T>
std::vector<T> richardson(std::span<const T> seq, long n_start, int m) {
  if (m < 1) throw std::invalid_argument("richardson order must be >= 1");
  if (seq.size() <= static_cast<std::size_t>(m))
    throw std::invalid_argument("richardson needs more terms than its order");
  std::vector<T> out;
  out.reserve(seq.size() - static_cast<std::size_t>(m));
  for (std::size_t j = 0; j + static_cast<std::size_t>(m) < seq.size(); ++j) {
    long nj = n_start + static_cast<long>(j);
    T acc{};
    for (int k = 0; k <= m; ++k) {
      Rational w = Rational(nj + k).pow(m) /
                   Rational(factorial(static_cast<unsigned long>(k)) *
                                factorial(static_cast<unsigned long>(m - k)),
                            Integer(1));
      if ((k + m) % 2 != 0) w = -w;
      if constexpr (std::is_same_v<T, Rational>) {
        acc += seq[j + static_cast<std::size_t>(k)] * w;
      } else {
        acc = acc + seq[j + static_cast<std::size_t>(k)] * BigFloat::of(w, seq[j].precision());
      }
    }
    out.push_back(std::move(acc));
  }
  return out;
}

struct GrowthPoint {
  unsigned long n = 0;
  BigFloat value;
  bool defined = false;  // false where the coefficient is zero
};

// |coeffs[n]|^(1/n) for n = 1..len-1; zero coefficients are kept but flagged.
std::vector<GrowthPoint> growth_sequence(std::span<const Rational> coeffs,
                                         unsigned precision_bits = kDefaultPrecisionBits);
std::vector<GrowthPoint> growth_sequence(const EigenSeries& series,
                                         unsigned precision_bits = kDefaultPrecisionBits);

// Least-squares slope of value against n over n in [n_lo, n_hi]; undefined
// points are skipped. Throws std::invalid_argument below 5 points.
BigFloat slope_fit(std::span<const GrowthPoint> points, long n_lo, long n_hi);
// Same for a plain sequence whose entry j sits at n = n_start + j.
BigFloat slope_fit(std::span<const BigFloat> seq, long n_start, long n_lo, long n_hi);

struct OscillationRow {
  unsigned long n = 0;
  BigFloat numeric;    // omega_n |chi0|^n / Gamma(n)
  BigFloat predicted;  // 2|K| cos(arg K - n arg chi0)
  bool near_zero = false;
};

// Requires a conjugate-pair model. Rows for n in [n_start, n_end], n >= 2.
std::vector<OscillationRow> oscillation_table(const EigenSeries& series,
                                              const LateTermModel& model,
                                              unsigned n_start, unsigned n_end,
                                              unsigned precision_bits = kDefaultPrecisionBits);

// The cosine model at arbitrary real n, for plotting the continuous curve.
BigFloat oscillation_predicted_at(const LateTermModel& model, const BigFloat& n);

}  // namespace lateterms
