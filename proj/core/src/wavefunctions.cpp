#include <cmath>
#include <numbers>

#include "kgscatter/barriers.hpp"
#include "kgscatter/coefficients.hpp"
#include "kgscatter/errors.hpp"
#include "kgscatter/wavefunctions.hpp"

namespace kgscatter {

namespace {

using std::numbers::pi;
constexpr Complex kI{0.0, 1.0};

// log(1 + e^t)
double softplus(double t) { return t > 0.0 ? t + std::log1p(std::exp(-t)) : std::log1p(std::exp(t)); }

struct TanhParams {
  double nu;
  Complex mu;
  Complex lambda;
};

TanhParams tanh_params(double E, double m, double V0, double b) {
  if (!(b > 0.0)) throw InvalidConfig("tanh wave: b must be positive");
  const Dispersion d = dispersion(E, m, V0);
  const Complex lambda = (b + std::sqrt(Complex{b * b - V0 * V0, 0.0})) / (2.0 * b);
  return {d.nu.real() / (2.0 * b), d.mu / (2.0 * b), lambda};
}

ValueAndDerivative heun_on_axis(const HeunCParams& p, double w) {
  if (w <= 0.5) return heun_c_with_derivative(p, Complex{-w, 0.0});
  return heun_c_continued(p, -w);
}

}  // namespace

WaveSample tanh_wave(double E, double m, double V0, double b, Complex c1, Complex c2,
                     double x) {
  const TanhParams tp = tanh_params(E, m, V0, b);
  const double u = std::exp(2.0 * b * x);
  const Complex z{-u, 0.0};
  const double log_one_plus_u = softplus(2.0 * b * x);
  const double dlog_one_plus_u = 2.0 * b * u / (1.0 + u);
  // (-e^{2bx})^{s i nu} with arg(-1) = +pi
  const Complex log_minus_u{2.0 * b * x, pi};

  WaveSample out{x, 0.0, 0.0};
  auto add_branch = [&](Complex coeff, double s) {
    if (coeff == 0.0) return;
    const Complex a = s * kI * tp.nu + tp.lambda - s * kI * tp.mu;
    const Complex bb = s * kI * tp.nu + tp.lambda + s * kI * tp.mu;
    const Complex c = 1.0 + 2.0 * s * kI * tp.nu;
    const Complex F = gauss_2f1(a, bb, c, z);
    const Complex dF = gauss_2f1_derivative(a, bb, c, z);
    const Complex pref = std::exp(s * kI * tp.nu * log_minus_u + tp.lambda * log_one_plus_u);
    const Complex dlog_pref = 2.0 * b * s * kI * tp.nu + tp.lambda * dlog_one_plus_u;
    out.phi += coeff * pref * F;
    out.dphi += coeff * pref * (dlog_pref * F + 2.0 * b * z * dF);
  };
  add_branch(c1, 1.0);
  add_branch(c2, -1.0);
  return out;
}

WaveSample tanh_transmitted_wave(double E, double m, double V0, double b, double x) {
  const TanhParams tp = tanh_params(E, m, V0, b);
  const double v = std::exp(-2.0 * b * x);
  const Complex w{-v, 0.0};
  const Complex a = kI * tp.nu + tp.lambda - kI * tp.mu;
  const Complex bb = -kI * tp.nu + tp.lambda - kI * tp.mu;
  const Complex c = 1.0 - 2.0 * kI * tp.mu;
  const Complex F = gauss_2f1(a, bb, c, w);
  const Complex dF = gauss_2f1_derivative(a, bb, c, w);
  // e^{-2b lambda x} (1 + e^{2bx})^lambda = (1 + e^{-2bx})^lambda
  const Complex pref = std::exp(tp.lambda * softplus(-2.0 * b * x) + 2.0 * kI * b * tp.mu * x);
  const Complex dlog_pref = -2.0 * b * tp.lambda * v / (1.0 + v) + 2.0 * kI * b * tp.mu;
  return {x, pref * F, pref * (dlog_pref * F - 2.0 * b * w * dF)};
}

HeunCParams lambertw_heun_params(double E, double m, double V0, double sigma) {
  if (!(sigma > 0.0)) throw InvalidConfig("lambertw_heun_params: sigma must be positive");
  const double s = m * m - E * E + E * V0;
  return {2.0 * sigma * std::sqrt(Complex{m * m - E * E, 0.0}),
          2.0 * sigma * std::sqrt(Complex{m * m - E * E + 2.0 * E * V0 - V0 * V0, 0.0}),
          Complex{-2.0, 0.0},
          Complex{2.0 * sigma * sigma * s, 0.0},
          Complex{1.0 - 2.0 * sigma * sigma * s, 0.0}};
}

WaveSample lw_wave(double E, double m, double V0, double sigma, Complex c1, Complex c2,
                   double x) {
  const HeunCParams p = lambertw_heun_params(E, m, V0, sigma);
  const double t = -x / sigma;
  const double w = lambert_w0_exp(t);
  const double log_w = t - w;  // W e^W = e^t
  const double dw = -w / (sigma * (1.0 + w));

  WaveSample out{x, 0.0, 0.0};
  auto add_branch = [&](Complex coeff, double s) {
    if (coeff == 0.0) return;
    HeunCParams ps = p;
    ps.beta = s * p.beta;
    const ValueAndDerivative h = heun_on_axis(ps, w);
    const Complex pref = std::exp(-0.5 * p.alpha * w + 0.5 * ps.beta * log_w);
    out.phi += coeff * pref * h.value;
    out.dphi += coeff * pref *
                (h.value * (-0.5 * p.alpha * dw - 0.5 * ps.beta / (sigma * (1.0 + w))) -
                 h.derivative * dw);
  };
  add_branch(c1, 1.0);
  add_branch(c2, -1.0);
  return out;
}

double current(const WaveSample& s) { return (std::conj(s.phi) * s.dphi).imag(); }

}  // namespace kgscatter
