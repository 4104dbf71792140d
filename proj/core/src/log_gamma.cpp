#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "kgscatter/errors.hpp"
#include "kgscatter/special_functions.hpp"

namespace kgscatter {

namespace {

using std::numbers::pi;

// B_{2k} / (2k (2k-1)), k = 1..8
constexpr std::array<double, 8> kStirling = {
    1.0 / 12.0,         -1.0 / 360.0,  1.0 / 1260.0,   -1.0 / 1680.0,
    1.0 / 1188.0,       -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0};

constexpr double kAsymptoticRadius = 15.0;

// log sin(w) without overflow for large |Im w|.
Complex log_sin(Complex w) {
  const Complex i{0.0, 1.0};
  const Complex shift = -i * (pi / 2.0) - std::numbers::ln2;
  if (w.imag() > 0.0) return shift - i * w + std::log(std::exp(2.0 * i * w) - 1.0);
  return shift + i * w + std::log(1.0 - std::exp(-2.0 * i * w));
}

Complex stirling(Complex z) {
  const Complex inv = 1.0 / z;
  const Complex inv2 = inv * inv;
  Complex series = 0.0;
  Complex power = inv;
  for (double coeff : kStirling) {
    series += coeff * power;
    power *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi) + series;
}

// Re z >= 1/2
Complex log_gamma_right(Complex z) {
  Complex shift_sum = 0.0;
  while (std::abs(z) < kAsymptoticRadius) {
    shift_sum += std::log(z);
    z += 1.0;
  }
  return stirling(z) - shift_sum;
}

}  // namespace

Complex log_gamma(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("log_gamma: non-finite argument");
  }
  if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real())) {
    throw PoleError("log_gamma: pole at z=" + std::to_string(z.real()));
  }
  if (z.real() >= 0.5) return log_gamma_right(z);
  return std::log(pi) - log_sin(pi * z) - log_gamma_right(1.0 - z);
}

}  // namespace kgscatter
