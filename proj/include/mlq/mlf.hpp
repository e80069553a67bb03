#pragma once

#include <limits>

namespace mlq {

// Tail index and time scale of a Mittag-Leffler law, scaled as X = X_alpha / lambda
// so that the cdf reads 1 - E_{alpha,1}(-(lambda x)^alpha).
struct MLParams {
  double alpha = 1.0;   // tail index, 0 < alpha <= 1
  double lambda = 1.0;  // time scale, > 0

  void validate() const;
};

// Generalized Mittag-Leffler function E_{alpha,beta}(z) = sum_l z^l / Gamma(beta + alpha l)
// for real z, alpha in (0,2), beta > 0.
//
// Evaluation: power series below an alpha-dependent crossover (in extended or quad
// precision where the alternating sum cancels), algebraic expansion
// -sum_{k>=1} z^{-k} / Gamma(beta - alpha k) beyond it. alpha = beta = 1 short-circuits
// to exp. Absolute accuracy ~1e-9 or better on z in [-1e6, 5]; relative ~1e-10 on |z| <= 5.
//
// `accuracy_warning`, when non-null, is set when alpha > 0.95 (and != 1) and z sits in
// the crossover band where the two expansions are at their weakest.
double ml_e(double alpha, double beta, double z, bool* accuracy_warning = nullptr);

// Density lambda^alpha x^{alpha-1} E_{alpha,alpha}(-(lambda x)^alpha).
// For alpha < 1 the density diverges at x = 0; returns +infinity there.
double ml_pdf(const MLParams& params, double x);

// Distribution function 1 - E_{alpha,1}(-(lambda x)^alpha).
double ml_cdf(const MLParams& params, double x);

// Leading-order survival approximation sin(alpha pi) Gamma(alpha) / pi * (lambda x)^{-alpha}.
// Valid for alpha < 1 only; the alpha = 1 tail is exponential.
double ml_tail_asymptotic(const MLParams& params, double x);

inline constexpr double kInfiniteDensity = std::numeric_limits<double>::infinity();

}  // namespace mlq
