#include "lateterms/analysis.hpp"

namespace lateterms {

namespace {

// 1e-6 of the envelope: below this the prediction is treated as sitting on a
// cosine zero.
const double kNearZeroFraction = 1e-6;

}  // namespace

RatioSeries ratio_sequence(const EigenSeries& series, const LateTermModel& model,
                           unsigned n_start, unsigned n_end, unsigned prec,
                           std::span<const int> richardson_orders, RatioPath path) {
  if (n_start < 2 || n_start > n_end || n_end > series.problem.n_max)
    throw std::invalid_argument("ratio_sequence requires 2 <= n_start <= n_end <= n_max");
  if (model.problem != series.problem.kind)
    throw std::invalid_argument("model and series solve different problems");

  RatioSeries out;
  out.n_start = static_cast<long>(n_start);
  out.values.reserve(n_end - n_start + 1);
  out.flagged.assign(n_end - n_start + 1, false);

  if (path == RatioPath::Auto && has_exact_form(model)) {
    const bool trans_one = exact_transcendental_is_one(model);
    const BigFloat trans = exact_transcendental_factor(model, prec);
    for (unsigned long n = n_start; n <= n_end; ++n) {
      Rational q = series.coeffs[n] / exact_rational_part(model, n);
      BigFloat v = BigFloat::of(q, prec);
      out.values.push_back(trans_one ? v : v / trans);
    }
  } else {
    const bool flag_zeros = model.conjugate_pair;
    for (unsigned long n = n_start; n <= n_end; ++n) {
      BigFloat p = eval_model(model, n, prec);
      if (flag_zeros) {
        // Envelope 2|K| Gamma(n)/|chi0|^n, via logs.
        const auto& t = model.terms[0];
        BigFloat nn = BigFloat::of(static_cast<long>(n), prec);
        BigFloat env = (log_gamma(nn) - nn * t.chi.modulus().log()).exp() *
                       t.K.modulus().mul_2exp(1);
        if (p.abs() < BigFloat::of(kNearZeroFraction, prec) * env)
          out.flagged[n - n_start] = true;
      }
      out.values.push_back(BigFloat::of(series.coeffs[n], prec) / p);
    }
  }

  for (int m : richardson_orders) {
    out.richardson[m] =
        richardson<BigFloat>(std::span<const BigFloat>(out.values), out.n_start, m);
  }
  return out;
}

std::vector<GrowthPoint> growth_sequence(std::span<const Rational> coeffs, unsigned prec) {
  std::vector<GrowthPoint> out;
  for (std::size_t n = 1; n < coeffs.size(); ++n) {
    GrowthPoint p;
    p.n = n;
    if (coeffs[n].is_zero()) {
      p.value = BigFloat::nan(prec);
      p.defined = false;
    } else {
      BigFloat a = BigFloat::of(coeffs[n].abs(), prec);
      p.value = (a.log() / BigFloat::of(static_cast<long>(n), prec)).exp();
      p.defined = true;
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<GrowthPoint> growth_sequence(const EigenSeries& series, unsigned prec) {
  return growth_sequence(std::span<const Rational>(series.coeffs), prec);
}

BigFloat slope_fit(std::span<const GrowthPoint> points, long n_lo, long n_hi) {
  unsigned prec = kDefaultPrecisionBits;
  std::size_t count = 0;
  for (const auto& p : points)
    if (p.defined && static_cast<long>(p.n) >= n_lo && static_cast<long>(p.n) <= n_hi) {
      prec = p.value.precision();
      ++count;
    }
  if (count < 5) throw std::invalid_argument("slope_fit needs at least 5 points in the window");
  BigFloat sx(prec), sy(prec), sxx(prec), sxy(prec), cnt(prec);
  for (const auto& p : points) {
    if (!p.defined) continue;
    long n = static_cast<long>(p.n);
    if (n < n_lo || n > n_hi) continue;
    BigFloat xn = BigFloat::of(n, prec);
    sx = sx + xn;
    sy = sy + p.value;
    sxx = sxx + xn * xn;
    sxy = sxy + xn * p.value;
    cnt = cnt + BigFloat::of(1L, prec);
  }
  return (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
}

BigFloat slope_fit(std::span<const BigFloat> seq, long n_start, long n_lo, long n_hi) {
  std::vector<GrowthPoint> pts;
  pts.reserve(seq.size());
  for (std::size_t j = 0; j < seq.size(); ++j)
    pts.push_back({static_cast<unsigned long>(n_start + static_cast<long>(j)), seq[j],
                   !seq[j].is_nan()});
  return slope_fit(std::span<const GrowthPoint>(pts), n_lo, n_hi);
}

BigFloat oscillation_predicted_at(const LateTermModel& model, const BigFloat& n) {
  if (!model.conjugate_pair)
    throw std::invalid_argument("oscillation model requires a conjugate pair");
  const auto& t = model.terms.at(0);
  BigFloat amp = t.K.modulus().mul_2exp(1);
  return amp * (t.K.arg() - n * t.chi.arg()).cos();
}

std::vector<OscillationRow> oscillation_table(const EigenSeries& series,
                                              const LateTermModel& model,
                                              unsigned n_start, unsigned n_end,
                                              unsigned prec) {
  if (!model.conjugate_pair || model.problem != Problem::TwoPole)
    throw std::invalid_argument("oscillation_table requires the two-pole conjugate-pair model");
  if (model.problem != series.problem.kind)
    throw std::invalid_argument("model and series solve different problems");
  if (n_start < 2 || n_start > n_end || n_end > series.problem.n_max)
    throw std::invalid_argument("oscillation_table requires 2 <= n_start <= n_end <= n_max");

  const auto& t = model.terms.at(0);
  const BigFloat log_abs_chi = t.chi.modulus().log();
  const BigFloat amp = t.K.modulus().mul_2exp(1);
  const BigFloat zero_cut = BigFloat::of(kNearZeroFraction, prec) * amp;

  std::vector<OscillationRow> out;
  out.reserve(n_end - n_start + 1);
  for (unsigned long n = n_start; n <= n_end; ++n) {
    OscillationRow row;
    row.n = n;
    const Rational& w = series.coeffs[n];
    BigFloat nn = BigFloat::of(static_cast<long>(n), prec);
    if (w.is_zero()) {
      row.numeric = BigFloat(prec);
    } else {
      BigFloat scale = (nn * log_abs_chi - log_gamma(nn)).exp();
      row.numeric = BigFloat::of(w, prec) * scale;
    }
    row.predicted = oscillation_predicted_at(model, nn);
    row.near_zero = row.predicted.abs() < zero_cut;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace lateterms
