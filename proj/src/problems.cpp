#include "lateterms/problems.hpp"

#include <stdexcept>

namespace lateterms {

namespace {

const Rational kZero{};

// Coefficient lookup with zero outside the stored range; row < 0 covers the
// empty-sum convention for negative order indices.
const Rational& cell(const std::vector<std::vector<Rational>>& rows, long row, long idx) {
  if (row < 0 || row >= static_cast<long>(rows.size())) return kZero;
  const auto& r = rows[static_cast<std::size_t>(row)];
  if (idx < 0 || idx >= static_cast<long>(r.size())) return kZero;
  return r[static_cast<std::size_t>(idx)];
}

}  // namespace

const char* problem_id(Problem kind) {
  switch (kind) {
    case Problem::BlackHole: return "blackhole";
    case Problem::Anharmonic: return "anharmonic";
    case Problem::Rossby: return "rossby";
    case Problem::TwoPole: return "twopole";
  }
  return "?";
}

Problem problem_from_id(std::string_view id) {
  if (id == "blackhole") return Problem::BlackHole;
  if (id == "anharmonic") return Problem::Anharmonic;
  if (id == "rossby") return Problem::Rossby;
  if (id == "twopole") return Problem::TwoPole;
  throw std::invalid_argument("unknown problem '" + std::string(id) +
                              "'; valid ids: blackhole, anharmonic, rossby, twopole");
}

ProblemSpec ProblemSpec::black_hole(unsigned n_max) { return {Problem::BlackHole, {}, {}, n_max}; }
ProblemSpec ProblemSpec::anharmonic(unsigned n_max) { return {Problem::Anharmonic, {}, {}, n_max}; }
ProblemSpec ProblemSpec::rossby(unsigned n_max) { return {Problem::Rossby, {}, {}, n_max}; }
ProblemSpec ProblemSpec::two_pole(Rational b, Rational c, unsigned n_max) {
  return {Problem::TwoPole, std::move(b), std::move(c), n_max};
}

void ProblemSpec::validate() const {
  if (n_max < 1) throw std::invalid_argument("n_max must be at least 1");
  if (kind == Problem::TwoPole) {
    if (b.sign() <= 0 || c.sign() <= 0)
      throw std::invalid_argument("twopole requires b > 0 and c > 0");
  }
}

const Rational& CoefficientTable::at(std::size_t row, std::size_t idx) const {
  return cell(rows, static_cast<long>(row), static_cast<long>(idx));
}

SeriesState seed_state(Problem kind) {
  SeriesState st;
  st.rows.push_back({Rational(1)});
  switch (kind) {
    case Problem::BlackHole: st.eigen.push_back(Rational(1, 2)); break;
    case Problem::Anharmonic: st.eigen.push_back(Rational(1, 2)); break;
    case Problem::Rossby: st.eigen.push_back(Rational(0)); break;
    case Problem::TwoPole: st.eigen.push_back(Rational(1)); break;
  }
  return st;
}

// Row n solved by back-substitution from j = n down to 1; the pivot 2j never
// vanishes. omega_n = a_{n,1} / 2 closes the order.
void step_blackhole(SeriesState& st, unsigned n) {
  const auto& w = st.eigen;
  std::vector<Rational> row(n + 1);
  long N = static_cast<long>(n);
  for (long j = N; j >= 1; --j) {
    Rational rhs;
    if (j + 1 <= N) rhs -= Rational((j + 1) * (j + 1)) * row[static_cast<std::size_t>(j + 1)];
    for (long k = j - 1; k <= N - 1; ++k)
      rhs -= Rational(2) * w[static_cast<std::size_t>(N - 1 - k)] * cell(st.rows, k, j - 1);
    rhs += Rational(2 * (j - 1)) * cell(st.rows, N - 1, j - 1);
    for (long k = j; k <= N - 1; ++k)
      rhs += Rational(2) * w[static_cast<std::size_t>(N - k)] * cell(st.rows, k, j);
    row[static_cast<std::size_t>(j)] = rhs / Rational(2 * j);
  }
  st.rows.push_back(std::move(row));
  st.eigen.push_back(st.rows.back()[1] / Rational(2));
}

// Row n (coefficients of x^{2k}, k = 2n..1); the eigenvalue term in the sum
// multiplies a_{0,k} = 0 for k >= 1, so the row closes before lambda_n, which
// is then -2 a_{n,1}.
void step_anharmonic(SeriesState& st, unsigned n) {
  const auto& lam = st.eigen;
  std::vector<Rational> row(2 * n + 1);
  long N = static_cast<long>(n);
  for (long k = 2 * N; k >= 1; --k) {
    Rational rhs;
    if (k + 1 <= 2 * N)
      rhs += Rational((2 * k + 2) * (2 * k + 1)) * row[static_cast<std::size_t>(k + 1)];
    rhs -= Rational(1, 4) * cell(st.rows, N - 1, k - 2);
    for (long i = 1; i <= N - 1; ++i)
      rhs += lam[static_cast<std::size_t>(i)] * cell(st.rows, N - i, k);
    row[static_cast<std::size_t>(k)] = rhs / Rational(2 * k);
  }
  st.rows.push_back(std::move(row));
  st.eigen.push_back(Rational(-2) * st.rows.back()[1]);
}

// Odd orders m = 2n+1 and even orders m = 2n are solved from k = n down to 1.
// The k = 0 slot of the even recurrence is the solvability condition: the
// x^0 forcing contributes only at n = 1, giving lambda_1 = 2 a_{2,1} + 1 and
// lambda_n = 2 a_{2n,1} otherwise.
void step_rossby(SeriesState& st, unsigned m) {
  const auto& lam = st.eigen;
  long M = static_cast<long>(m);
  if (m % 2 == 1) {
    long n = (M - 1) / 2;
    std::vector<Rational> row(static_cast<std::size_t>(n + 1));
    for (long k = n; k >= 1; --k) {
      Rational rhs;
      if (k + 1 <= n) rhs += Rational(2 * k * (2 * k + 1)) * row[static_cast<std::size_t>(k + 1)];
      for (long mm = 1; mm <= n; ++mm) {
        rhs += cell(st.rows, 2 * (n - mm) + 1, k - mm + 1);
        rhs -= cell(st.rows, 2 * (n - mm), k - mm);
        rhs -= lam[static_cast<std::size_t>(mm)] * cell(st.rows, 2 * (n - mm) + 1, k);
      }
      row[static_cast<std::size_t>(k)] = rhs / Rational(2 * (2 * k - 1));
    }
    st.rows.push_back(std::move(row));
  } else {
    long n = M / 2;
    std::vector<Rational> row(static_cast<std::size_t>(n + 1));
    for (long k = n; k >= 1; --k) {
      Rational rhs;
      if (k + 1 <= n) rhs += Rational((2 * k + 2) * (2 * k + 1)) * row[static_cast<std::size_t>(k + 1)];
      for (long mm = 1; mm <= n; ++mm) rhs += cell(st.rows, 2 * (n - mm), k - mm + 1);
      for (long mm = 1; mm <= n - 1; ++mm) {
        rhs -= cell(st.rows, 2 * (n - mm) - 1, k - mm + 1);
        rhs -= lam[static_cast<std::size_t>(mm)] * cell(st.rows, 2 * (n - mm), k);
      }
      row[static_cast<std::size_t>(k)] = rhs / Rational(4 * k);
    }
    st.rows.push_back(std::move(row));
    Rational l = Rational(2) * st.rows.back()[1];
    if (n == 1) l += Rational(1);
    st.eigen.push_back(l);
  }
}

// Row n solved from i = n down to 1 (pivot i); the k = n term of the leading
// sum multiplies a_{0,i} = 0 for i >= 1. omega_n = a_{n,1}.
void step_twopole(SeriesState& st, unsigned n, const Rational& b, const Rational& c) {
  const auto& w = st.eigen;
  const Rational s = b * b + c * c;
  const Rational cs = c / s;
  const Rational inv_s = Rational(1) / s;
  std::vector<Rational> row(n + 1);
  long N = static_cast<long>(n);
  for (long i = N; i >= 1; --i) {
    Rational rhs;
    for (long k = 1; k <= N - 1; ++k)
      rhs += w[static_cast<std::size_t>(k)] * cell(st.rows, N - k, i);
    if (i + 1 <= N) rhs -= Rational((i + 1) * (i + 1)) * row[static_cast<std::size_t>(i + 1)];
    Rational t;
    for (long k = 0; k <= N - 1; ++k)
      t -= Rational(2) * w[static_cast<std::size_t>(k)] * cell(st.rows, N - 1 - k, i - 1);
    t += Rational(2 * (i - 1) + 1) * cell(st.rows, N - 1, i - 1);
    t += Rational(i * i) * cell(st.rows, N - 1, i);
    rhs -= cs * t;
    Rational t2;
    for (long k = 0; k <= N - 2; ++k)
      t2 -= w[static_cast<std::size_t>(k)] * cell(st.rows, N - 2 - k, i - 2);
    t2 += Rational(i - 2) * cell(st.rows, N - 2, i - 2);
    rhs -= inv_s * t2;
    row[static_cast<std::size_t>(i)] = rhs / Rational(i);
  }
  st.rows.push_back(std::move(row));
  st.eigen.push_back(st.rows.back()[1]);
}

EigenSeries compute_series(const ProblemSpec& spec) {
  spec.validate();
  SeriesState st = seed_state(spec.kind);
  switch (spec.kind) {
    case Problem::BlackHole:
      for (unsigned n = 1; n <= spec.n_max; ++n) step_blackhole(st, n);
      break;
    case Problem::Anharmonic:
      for (unsigned n = 1; n <= spec.n_max; ++n) step_anharmonic(st, n);
      break;
    case Problem::Rossby:
      for (unsigned m = 1; m <= 2 * spec.n_max; ++m) step_rossby(st, m);
      break;
    case Problem::TwoPole:
      for (unsigned n = 1; n <= spec.n_max; ++n) step_twopole(st, n, spec.b, spec.c);
      break;
  }
  return EigenSeries{spec, std::move(st.eigen), CoefficientTable{std::move(st.rows)}};
}

}  // namespace lateterms
