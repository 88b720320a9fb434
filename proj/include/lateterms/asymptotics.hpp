#pragma once

#include <optional>
#include <vector>

#include "lateterms/complex.hpp"
#include "lateterms/problems.hpp"

namespace lateterms {

// One K * Gamma(n + gamma) * chi^{-n} contribution to the late-term form.
struct LateTermTerm {
  ComplexBF K;
  ComplexBF chi;
  Rational gamma;
};

// Factored real constant coef * 2^(two/2) * 3^(three/2) * pi^(pi/2); keeps the
// prefactors exact until a single conversion point.
struct SymbolicReal {
  Rational coef;
  int two_half = 0;
  int three_half = 0;
  int pi_half = 0;

  BigFloat value(unsigned precision_bits = kDefaultPrecisionBits) const;
};

struct LateTermModel {
  Problem problem = Problem::BlackHole;
  std::vector<LateTermTerm> terms;
  // When set, evaluation is twice the real part of the single listed term.
  bool conjugate_pair = false;
  // Present for the single-singularity models (rational chi, symbolic K);
  // drives the exact factored evaluation below.
  std::optional<SymbolicReal> exact_k;
  std::optional<Rational> exact_chi;
};

LateTermModel model_for(const ProblemSpec& spec,
                        unsigned precision_bits = kDefaultPrecisionBits);

// Singulant constant at the expansion point of the two-pole problem,
// principal log branch. Requires b > 0; throws std::domain_error for c <= 0.
// The conjugate singularity carries conj(chi0).
ComplexBF compute_chi0(const Rational& b, const Rational& c,
                       unsigned precision_bits = kDefaultPrecisionBits);

// predicted(n) = sum_j K_j Gamma(n + gamma_j) chi_j^{-n}, doubled real part
// for conjugate pairs. Evaluated in log space (log-gamma plus complex logs,
// one exponentiation), so Gamma(n) never overflows. Requires n >= 2.
BigFloat eval_model(const LateTermModel& model, unsigned long n,
                    unsigned precision_bits = kDefaultPrecisionBits);

// Same sum without the doubled-real-part shortcut: conjugate partners are
// evaluated separately. Used to check that predictions are real.
ComplexBF eval_model_complex(const LateTermModel& model, unsigned long n,
                             unsigned precision_bits = kDefaultPrecisionBits);

// Exact factored form, predicted(n) = rational_part(n) * transcendental:
// available whenever exact_k/exact_chi are set. gamma must be an integer or
// half-integer (half-integer gammas expand through gamma_half_ratio, moving
// the sqrt(pi) into the transcendental factor).
bool has_exact_form(const LateTermModel& model);
Rational exact_rational_part(const LateTermModel& model, unsigned long n);
bool exact_transcendental_is_one(const LateTermModel& model);
BigFloat exact_transcendental_factor(const LateTermModel& model,
                                     unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace lateterms
