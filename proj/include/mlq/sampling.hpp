#pragma once

#include <cstdint>

#include "mlq/mlf.hpp"
#include "mlq/paths.hpp"
#include "mlq/rng.hpp"

namespace mlq {

// Guard against event bursts in the small-alpha regime. Overflow raises
// EventCapError, never a silent truncation. The CLI lets MLQ_EVENT_CAP override it.
inline constexpr std::uint64_t kDefaultEventCap = 100'000'000;

// One draw of the standard positive alpha-stable law S_alpha,
// E[exp(-w S_alpha)] = exp(-w^alpha), via the Kanter/CMS representation
//   S = sin(alpha U) / sin(U)^{1/alpha} * (sin((1-alpha) U) / W)^{(1-alpha)/alpha},
// U uniform on (0,pi), W unit exponential. Requires 0 < alpha < 1.
double sample_positive_stable(double alpha, RngStream& rng);

// Mittag-Leffler draw with cdf ml_cdf(params, .): X = W^{1/alpha} S_alpha / lambda.
// alpha = 1 reduces to an exponential of rate lambda.
double sample_ml(const MLParams& params, RngStream& rng);

// Fractional Poisson process as a renewal process with i.i.d. ML inter-event times.
CountingPath simulate_fpp_renewal(const MLParams& params, double horizon, RngStream& rng,
                                  std::uint64_t event_cap = kDefaultEventCap);

// Inverse alpha-stable subordinator Y_alpha(t) = inf{u >= 0 : L_alpha(u) > t} on the
// grid t_i = i*grid_step. L_alpha is simulated on a u-grid of the same step via
// self-similar increments grid_step^{1/alpha} S_alpha; the first-crossing inverse
// has bias O(grid_step).
SubordinatorPath simulate_inverse_subordinator(double alpha, double horizon, double grid_step,
                                               RngStream& rng,
                                               std::uint64_t event_cap = kDefaultEventCap);

// Fractional Poisson process as a time change N_{lambda^alpha}(Y_alpha(t)): Poisson
// points placed on the subordinator time axis and mapped back through L_alpha.
// Equal in law to the renewal construction.
CountingPath simulate_fpp_timechange(const MLParams& params, double horizon, double grid_step,
                                     RngStream& rng,
                                     std::uint64_t event_cap = kDefaultEventCap);

}  // namespace mlq
