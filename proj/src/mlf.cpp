#include "mlq/mlf.hpp"

#include <quadmath.h>

#include <cmath>
#include <stdexcept>
#include <string>

namespace mlq {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// 1/Gamma(x) with zeros at the poles x = 0, -1, -2, ...
double rgamma(double x) {
  if (x > 0.5) {
    if (x > 171.6) return 0.0;  // Gamma overflows double
    return 1.0 / std::tgamma(x);
  }
  // reflection: 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
  const double s = std::sin(kPi * x);
  if (s == 0.0) return 0.0;
  const double ln = std::lgamma(1.0 - x) + std::log(std::abs(s) / kPi);
  if (ln > 709.0) return s > 0 ? std::numeric_limits<double>::infinity()
                               : -std::numeric_limits<double>::infinity();
  return std::copysign(std::exp(ln), s);
}

template <typename Real>
struct FloatOps;

template <>
struct FloatOps<double> {
  static double lgamma(double x) { return ::lgamma(x); }
  static double exp(double x) { return std::exp(x); }
  static double log(double x) { return std::log(x); }
  static double to_double(double x) { return x; }
};

template <>
struct FloatOps<long double> {
  static long double lgamma(long double x) { return ::lgammal(x); }
  static long double exp(long double x) { return ::expl(x); }
  static long double log(long double x) { return ::logl(x); }
  static double to_double(long double x) { return static_cast<double>(x); }
};

template <>
struct FloatOps<__float128> {
  static __float128 lgamma(__float128 x) { return ::lgammaq(x); }
  static __float128 exp(__float128 x) { return ::expq(x); }
  static __float128 log(__float128 x) { return ::logq(x); }
  static double to_double(__float128 x) { return static_cast<double>(x); }
};

// Power series sum_l z^l / Gamma(beta + alpha l). The alternating sum for z < 0
// cancels down from a peak term of size ~exp(|z|^{1/alpha}), which dictates the
// working precision chosen by the caller. All exponent arithmetic stays in Real:
// a double-rounded exponent would cap every term at ~1e-14 relative error and
// void the extended tiers.
template <typename Real>
double ml_series(double alpha, double beta, double z) {
  using F = FloatOps<Real>;
  if (z == 0.0) return rgamma(beta);
  const Real ra = static_cast<Real>(alpha);
  const Real rb = static_cast<Real>(beta);
  const Real ln_az = F::log(static_cast<Real>(std::abs(z)));
  const bool negative = z < 0;
  Real sum = 0;
  Real comp = 0;  // Kahan compensation
  Real peak = 0;
  long peak_l = 0;
  const long max_terms = 20000;
  for (long l = 0; l < max_terms; ++l) {
    const Real rl = static_cast<Real>(l);
    const Real ln_term = rl * ln_az - F::lgamma(rb + ra * rl);
    Real term = F::exp(ln_term);
    if (negative && (l & 1)) term = -term;
    const Real y = term - comp;
    const Real t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    const Real a = term < 0 ? -term : term;
    if (a > peak) {
      peak = a;
      peak_l = l;
    } else if (l > peak_l + 4 && a < peak * static_cast<Real>(1e-25) &&
               (sum == 0 || a < (sum < 0 ? -sum : sum) * static_cast<Real>(1e-25))) {
      return F::to_double(sum);
    }
  }
  throw std::domain_error("ml_e: power series did not converge (alpha=" + std::to_string(alpha) +
                          ", z=" + std::to_string(z) + ")");
}

// Algebraic expansion for z far down the negative axis:
//   E_{alpha,beta}(z) = -sum_{k=1..} z^{-k} / Gamma(beta - alpha k) + O(|z|^{-K-1}).
// Truncated at the optimal index alpha k ~ |z|^{1/alpha}, past which the terms grow.
double ml_asymptotic(double alpha, double beta, double z) {
  const double x = std::pow(-z, 1.0 / alpha);
  const long k_break = static_cast<long>(x / alpha) + 2;
  const long k_max = std::min<long>(k_break, 100000);
  long double sum = 0;
  long double zpow = 1;
  for (long k = 1; k <= k_max; ++k) {
    zpow /= z;
    const double term = -static_cast<double>(zpow) * rgamma(beta - alpha * k);
    sum += term;
    if (std::abs(term) < 1e-18L * std::abs(sum) && k >= 2) break;
  }
  return static_cast<double>(sum);
}

}  // namespace

double ml_e(double alpha, double beta, double z, bool* accuracy_warning) {
  if (accuracy_warning) *accuracy_warning = false;
  if (!(alpha > 0.0 && alpha < 2.0)) throw std::domain_error("ml_e: alpha must lie in (0,2)");
  if (!(beta > 0.0)) throw std::domain_error("ml_e: beta must be positive");
  if (!std::isfinite(z)) throw std::domain_error("ml_e: z must be finite");

  if (alpha == 1.0 && beta == 1.0) return std::exp(z);

  if (z >= 0.0) {
    // all-positive terms: no cancellation, but the value itself can overflow
    if (z > 0.0 && std::pow(z, 1.0 / alpha) > 700.0)
      throw std::domain_error("ml_e: positive argument too large, result overflows");
    return ml_series<double>(alpha, beta, z);
  }

  // cancellation exponent: the peak series term is ~exp(x)
  const double x = std::pow(-z, 1.0 / alpha);
  if (accuracy_warning && alpha > 0.95 && alpha != 1.0 && x > 22.0 && x < 32.0)
    *accuracy_warning = true;
  if (x <= 10.0) return ml_series<double>(alpha, beta, z);
  if (x <= 16.0) return ml_series<long double>(alpha, beta, z);
  if (x <= 27.0) return ml_series<__float128>(alpha, beta, z);
  return ml_asymptotic(alpha, beta, z);
}

void MLParams::validate() const {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw std::domain_error("MLParams: alpha must lie in (0,1]");
  if (!(lambda > 0.0)) throw std::domain_error("MLParams: lambda must be positive");
}

double ml_pdf(const MLParams& params, double x) {
  params.validate();
  if (x < 0.0 || std::isnan(x)) throw std::domain_error("ml_pdf: x must be nonnegative");
  if (x == 0.0) return params.alpha == 1.0 ? params.lambda : kInfiniteDensity;
  const double lx = params.lambda * x;
  if (params.alpha == 1.0) return params.lambda * std::exp(-lx);
  const double za = std::pow(lx, params.alpha);
  return std::pow(params.lambda, params.alpha) * std::pow(x, params.alpha - 1.0) *
         ml_e(params.alpha, params.alpha, -za);
}

double ml_cdf(const MLParams& params, double x) {
  params.validate();
  if (x < 0.0 || std::isnan(x)) throw std::domain_error("ml_cdf: x must be nonnegative");
  if (x == 0.0) return 0.0;
  const double za = std::pow(params.lambda * x, params.alpha);
  if (params.alpha == 1.0) return -std::expm1(-za);
  return 1.0 - ml_e(params.alpha, 1.0, -za);
}

double ml_tail_asymptotic(const MLParams& params, double x) {
  params.validate();
  if (params.alpha >= 1.0)
    throw std::domain_error("ml_tail_asymptotic: exponential tail at alpha = 1, asymptote invalid");
  if (!(x > 0.0)) throw std::domain_error("ml_tail_asymptotic: x must be positive");
  const double c = std::sin(params.alpha * kPi) * std::tgamma(params.alpha) / kPi;
  return c * std::pow(params.lambda * x, -params.alpha);
}

}  // namespace mlq
