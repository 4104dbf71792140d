#include <cmath>
#include <numbers>
#include <string>

#include "kgscatter/coefficients.hpp"
#include "kgscatter/errors.hpp"

namespace kgscatter {

namespace {

using std::numbers::pi;

constexpr double kSingularWindow = 1e-9;

void check_not_singular(double nu, double mu, double E) {
  if (std::abs(mu + nu) <= kSingularWindow * nu) {
    throw SingularityError("closed form diverges at E=" + std::to_string(E) +
                           " (mu = -nu, E = V0/2)");
  }
}

// log sinh(t) for t > 0
double log_sinh(double t) { return t + std::log(-std::expm1(-2.0 * t)) - std::numbers::ln2; }

// cosh(t) e^{-x}
double scaled_cosh(double t, double x) {
  return 0.5 * (std::exp(std::abs(t) - x) + std::exp(-std::abs(t) - x));
}

// sinh(t) e^{-|t|}
double damped_sinh(double t) { return std::copysign(-0.5 * std::expm1(-2.0 * std::abs(t)), t); }

}  // namespace

RTPair step_rt(double E, double m, double V0) {
  const Dispersion d = dispersion(E, m, V0);
  if (d.region == Region::Evanescent) return {1.0, 0.0};
  const double nu = d.nu.real();
  const double mu = d.mu.real();
  check_not_singular(nu, mu, E);
  const double ratio = (mu - nu) / (mu + nu);
  const double sum = mu + nu;
  return {ratio * ratio, 4.0 * mu * nu / (sum * sum)};
}

TanhScatteringData tanh_ab_with_lambda(double E, double m, double V0, double b,
                                       Complex lambda) {
  if (!(b > 0.0)) throw InvalidConfig("tanh_ab: b must be positive");
  const Dispersion d = dispersion(E, m, V0);
  const Complex i{0.0, 1.0};
  const double nu = d.nu.real() / (2.0 * b);
  const Complex mu = d.mu / (2.0 * b);

  const Complex log_num_common = log_gamma(1.0 - 2.0 * i * mu);
  const Complex log_A = log_num_common + log_gamma(-2.0 * i * nu) -
                        log_gamma(-i * nu + lambda - i * mu) -
                        log_gamma(1.0 - i * nu - lambda - i * mu);
  const Complex log_B = log_num_common + log_gamma(2.0 * i * nu) -
                        log_gamma(i * nu + lambda - i * mu) -
                        log_gamma(1.0 + i * nu - lambda - i * mu);
  return {nu, mu, lambda, std::exp(log_A), std::exp(log_B), log_A, log_B};
}

TanhScatteringData tanh_ab(double E, double m, double V0, double b) {
  if (!(b > 0.0)) throw InvalidConfig("tanh_ab: b must be positive");
  const Complex lambda = (b + std::sqrt(Complex{b * b - V0 * V0, 0.0})) / (2.0 * b);
  return tanh_ab_with_lambda(E, m, V0, b, lambda);
}

RTPair tanh_rt(double E, double m, double V0, double b) {
  if (classify_region(E, m, V0) == Region::Evanescent) {
    if (!(b > 0.0)) throw InvalidConfig("tanh_rt: b must be positive");
    return {1.0, 0.0};
  }
  if (!(b > 0.0)) throw InvalidConfig("tanh_rt: b must be positive");
  // |B|^2/|A|^2 and (mu/nu)/|A|^2 with the Gamma moduli in closed form:
  //   R = N / D,  T = S / D,  D = N + S,
  //   N = cosh 2pi(nu - mu) + cosh 2pi kappa,  S = 2 sinh 2pi nu sinh 2pi mu,
  // where lambda = 1/2 + i kappa. All terms carry a common factor e^{-x}.
  const Dispersion d = dispersion(E, m, V0);
  const double nu = d.nu.real() / (2.0 * b);
  const double mu = d.mu.real() / (2.0 * b);
  const double tau = 2.0 * std::numbers::pi;
  const double q = V0 * V0 / (b * b);
  const double kappa_growth = q > 1.0 ? 0.5 * tau * std::sqrt(q - 1.0) : 0.0;
  const double x = std::max(tau * (nu + std::abs(mu)), kappa_growth);
  // cosh(a) + cosh(2 pi kappa), scaled. For V0 < b, cosh 2pi kappa = -cos(pi delta)
  // with delta = 1 - sqrt(1 - q), and the sum is 2 sinh^2(a/2) + 2 sin^2(pi delta/2).
  auto pair_sum = [&](double a) {
    if (q > 1.0) return scaled_cosh(a, x) + scaled_cosh(kappa_growth, x);
    const double delta = q / (1.0 + std::sqrt(1.0 - q));
    const double s_delta = std::sin(0.5 * std::numbers::pi * delta);
    const double cosh_minus_one = std::abs(a) < 1.0
                                      ? 2.0 * std::pow(std::sinh(0.5 * a), 2) * std::exp(-x)
                                      : scaled_cosh(a, x) - std::exp(-x);
    return cosh_minus_one + 2.0 * s_delta * s_delta * std::exp(-x);
  };
  const double N = pair_sum(tau * (nu - mu));
  const double S = 2.0 * damped_sinh(tau * nu) * damped_sinh(tau * mu) *
                   std::exp(tau * (nu + std::abs(mu)) - x);
  // above the barrier N, S >= 0 and N + S keeps R, T inside [0, 1]; below it
  // N + S cancels near mu = -nu, so D is evaluated directly
  const double D = S >= 0.0 ? N + S : pair_sum(tau * (nu + mu));
  return {N / D, S / D};
}

RTPair lambertw_rt(double E, double m, double V0, double sigma) {
  if (!(sigma > 0.0)) throw InvalidConfig("lambertw_rt: sigma must be positive");
  const Dispersion d = dispersion(E, m, V0);
  if (d.region == Region::Evanescent) return {1.0, 0.0};
  const double nu = d.nu.real();
  const double mu = d.mu.real();
  check_not_singular(nu, mu, E);

  const double arg_minus = pi * sigma * (nu - mu) * (nu - mu) / (2.0 * nu);
  const double arg_plus = pi * sigma * (nu + mu) * (nu + mu) / (2.0 * nu);
  if (arg_minus == 0.0) return {0.0, 1.0};
  const double R =
      std::exp(-2.0 * pi * sigma * mu + log_sinh(arg_minus) - log_sinh(arg_plus));
  return {R, 1.0 - R};
}

RTPair closed_form_rt(const ScatteringConfig& cfg) {
  cfg.validate();
  switch (cfg.barrier) {
    case Barrier::Step: return step_rt(cfg.E, cfg.m, cfg.V0);
    case Barrier::Tanh: return tanh_rt(cfg.E, cfg.m, cfg.V0, cfg.b);
    case Barrier::LambertW: return lambertw_rt(cfg.E, cfg.m, cfg.V0, cfg.sigma);
  }
  throw InvalidConfig("unknown barrier kind");
}

}  // namespace kgscatter
