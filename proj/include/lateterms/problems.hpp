#pragma once

#include <string_view>
#include <vector>

#include "lateterms/rational.hpp"

namespace lateterms {

enum class Problem { BlackHole, Anharmonic, Rossby, TwoPole };

const char* problem_id(Problem kind);
// Throws std::invalid_argument listing the valid ids.
Problem problem_from_id(std::string_view id);

// Model selection plus run parameters. TwoPole carries b > 0, c > 0; the
// other problems take no parameters. n_max is the highest eigenvalue
// coefficient index computed.
struct ProblemSpec {
  Problem kind = Problem::BlackHole;
  Rational b;
  Rational c;
  unsigned n_max = 1;

  static ProblemSpec black_hole(unsigned n_max);
  static ProblemSpec anharmonic(unsigned n_max);
  static ProblemSpec rossby(unsigned n_max);
  static ProblemSpec two_pole(Rational b, Rational c, unsigned n_max);

  // n_max >= 1; TwoPole requires b > 0 and c > 0. Throws std::invalid_argument.
  void validate() const;
};

// Per-order polynomial coefficients of the eigenfunctions. Index conventions:
//   BlackHole, TwoPole: rows[n][i] multiplies x^i, i = 0..n. rows[0] = {1};
//     rows for n >= 1 have zero constant term.
//   Anharmonic: rows[n][k] multiplies x^{2k}, k = 0..2n. rows[0] = {1}.
//   Rossby: even rows 2n hold x^{2k} coefficients at index k = 0..n; odd rows
//     2n+1 hold x^{2k-1} coefficients at index k = 1..n (index 0 unused).
//     Rows 1 and 2 are identically zero.
struct CoefficientTable {
  std::vector<std::vector<Rational>> rows;

  // Zero outside the stored range.
  const Rational& at(std::size_t row, std::size_t idx) const;
};

struct EigenSeries {
  ProblemSpec problem;
  std::vector<Rational> coeffs;  // eigenvalue coefficients, index 0..n_max
  CoefficientTable table;
};

// In-progress series shared by the four steppers. rows follows the
// CoefficientTable conventions; eigen holds the eigenvalue coefficients
// produced so far.
struct SeriesState {
  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> eigen;
};

// Seed row 0 and the leading eigenvalue (1/2, 1/2, 0, 1 respectively).
SeriesState seed_state(Problem kind);

// Each stepper requires all lower orders complete and appends exactly one row
// (and, where the order produces one, one eigenvalue coefficient).
void step_blackhole(SeriesState& st, unsigned n);
void step_anharmonic(SeriesState& st, unsigned n);
void step_rossby(SeriesState& st, unsigned m);  // m counts eigenfunction orders
void step_twopole(SeriesState& st, unsigned n, const Rational& b, const Rational& c);

EigenSeries compute_series(const ProblemSpec& spec);

}  // namespace lateterms
