#include <cmath>
#include <numbers>
#include <string>

#include "kgscatter/errors.hpp"
#include "kgscatter/special_functions.hpp"

namespace kgscatter {

namespace {

constexpr double kTolerance = 1e-15;
constexpr int kMaxIterations = 64;

// Halley iteration on w e^w - x = 0, used for x <= e.
double halley(double x, double w) {
  for (int i = 0; i < kMaxIterations; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) return w;  // branch point, f is already ~0 here
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    w -= step;
    if (std::abs(step) <= kTolerance * (1.0 + std::abs(w))) return w;
  }
  throw ConvergenceError("lambert_w0: Halley iteration did not converge for x=" +
                         std::to_string(x));
}

// Newton on w + ln w - t = 0, i.e. W(e^t) for t > 1 (w > 0.56).
double newton_log_form(double t, double w) {
  for (int i = 0; i < kMaxIterations; ++i) {
    const double step = (w + std::log(w) - t) * w / (w + 1.0);
    w -= step;
    if (std::abs(step) <= kTolerance * (1.0 + std::abs(w))) return w;
  }
  throw ConvergenceError("lambert_w0: log-form Newton did not converge for t=" +
                         std::to_string(t));
}

}  // namespace

double lambert_w0(double x) {
  constexpr double kMinusInvE = -1.0 / std::numbers::e;
  if (!std::isfinite(x)) throw DomainError("lambert_w0: non-finite argument");
  if (x < kMinusInvE) {
    throw DomainError("lambert_w0: argument " + std::to_string(x) +
                      " below -1/e");
  }
  if (x == 0.0) return 0.0;
  if (x == kMinusInvE) return -1.0;

  if (x > std::numbers::e) {
    const double lx = std::log(x);
    return newton_log_form(lx, lx - std::log(lx));
  }

  double guess;
  if (x < -0.25) {
    // branch-point expansion in p = sqrt(2 (e x + 1))
    const double p = std::sqrt(2.0 * (std::numbers::e * x + 1.0));
    guess = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else {
    guess = x / (1.0 + x);
  }
  return halley(x, guess);
}

double lambert_w0_exp(double t) {
  if (!std::isfinite(t)) throw DomainError("lambert_w0_exp: non-finite argument");
  if (t <= 1.0) return lambert_w0(std::exp(t));
  return newton_log_form(t, t - std::log(t));
}

}  // namespace kgscatter
