#pragma once

#include "kgscatter/barriers.hpp"
#include "kgscatter/special_functions.hpp"

namespace kgscatter {

struct RTPair {
  double R;
  double T;
};

/// Hypergeometric parameters and connection amplitudes for the tanh
/// barrier. nu_h, mu_h are the wave numbers divided by 2b; A and B are the
/// incident and reflected amplitudes multiplying the unit transmitted wave.
struct TanhScatteringData {
  double nu_h;
  Complex mu_h;
  Complex lambda_h;
  Complex A;
  Complex B;
  /// log A and log B; R and T are formed from these so that very small or
  /// very large Gamma products never overflow.
  Complex log_A;
  Complex log_B;
};

/// Sharp step. Evanescent band returns {1, 0}; SingularityError at mu = -nu.
RTPair step_rt(double E, double m, double V0);

TanhScatteringData tanh_ab(double E, double m, double V0, double b);

/// tanh_ab with an explicit root lambda of lambda (lambda - 1) = -V0^2/(4b^2).
/// Both roots give the same R and T.
TanhScatteringData tanh_ab_with_lambda(double E, double m, double V0, double b,
                                       Complex lambda);

/// |B/A|^2 and (mu/nu)/|A|^2 with the Gamma moduli reduced to cosh/sinh;
/// agrees with tanh_ab to ~1e-12 and stays inside [0, 1] above the barrier.
RTPair tanh_rt(double E, double m, double V0, double b);

/// Lambert-W barrier reflection with the group-velocity-signed mu; T = 1 - R.
RTPair lambertw_rt(double E, double m, double V0, double sigma);

/// Dispatches on cfg.barrier.
RTPair closed_form_rt(const ScatteringConfig& cfg);

}  // namespace kgscatter
