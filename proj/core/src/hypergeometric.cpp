#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "kgscatter/errors.hpp"
#include "kgscatter/special_functions.hpp"

namespace kgscatter {

namespace {

constexpr double kSeriesEps = 1e-16;
constexpr long kMaxTerms = 100000;
constexpr double kDirectRadius = 0.9;
constexpr double kInverseRadius = 1.1;

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

bool is_integer(Complex z) {
  return z.imag() == 0.0 && z.real() == std::floor(z.real());
}

// Stops once the term drops below kSeriesEps |sum| on two consecutive terms.
Complex series(Complex a, Complex b, Complex c, Complex z) {
  Complex term = 1.0;
  Complex sum = 1.0;
  int small_in_a_row = 0;
  for (long n = 0; n < kMaxTerms; ++n) {
    const double dn = static_cast<double>(n);
    term *= (a + dn) * (b + dn) / ((c + dn) * (dn + 1.0)) * z;
    sum += term;
    if (term == 0.0) return sum;
    if (std::abs(term) < kSeriesEps * std::abs(sum)) {
      if (++small_in_a_row == 2) return sum;
    } else {
      small_in_a_row = 0;
    }
  }
  throw ConvergenceError("gauss_2f1: series did not converge at |z|=" +
                         std::to_string(std::abs(z)));
}

// log(1/Gamma(z)), or nullopt where 1/Gamma vanishes.
std::optional<Complex> log_rgamma(Complex z) {
  if (is_nonpositive_integer(z)) return std::nullopt;
  return -log_gamma(z);
}

Complex gauss_summation(Complex a, Complex b, Complex c) {
  const Complex s = c - a - b;
  if (s.real() <= 0.0) {
    throw ConvergenceError("gauss_2f1: series diverges at z=1 (Re(c-a-b) <= 0)");
  }
  const auto ra = log_rgamma(c - a);
  const auto rb = log_rgamma(c - b);
  if (!ra || !rb) return 0.0;
  return std::exp(log_gamma(c) + log_gamma(s) + *ra + *rb);
}

// z -> 1/z connection formula.
Complex inverse_transform(Complex a, Complex b, Complex c, Complex z) {
  if (is_integer(a - b)) {
    throw PoleError("gauss_2f1: a - b is an integer; 1/z connection degenerate");
  }
  const Complex log_minus_z = std::log(-z);
  const Complex inv = 1.0 / z;
  const Complex log_gc = log_gamma(c);

  auto branch = [&](Complex p, Complex q) -> Complex {
    // Gamma(c) Gamma(q-p) / (Gamma(q) Gamma(c-p)) (-z)^{-p} F(p, 1-c+p; 1-q+p; 1/z)
    const auto rq = log_rgamma(q);
    const auto rcp = log_rgamma(c - p);
    if (!rq || !rcp) return 0.0;
    const Complex log_coeff = log_gc + log_gamma(q - p) + *rq + *rcp - p * log_minus_z;
    return std::exp(log_coeff) * series(p, 1.0 - c + p, 1.0 - q + p, inv);
  };
  return branch(a, b) + branch(b, a);
}

}  // namespace

Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z) {
  if (is_nonpositive_integer(c)) {
    throw PoleError("gauss_2f1: c is a non-positive integer");
  }
  // Canonical parameter order makes F(a,b) and F(b,a) bitwise identical.
  if (b.real() < a.real() || (b.real() == a.real() && b.imag() < a.imag())) {
    std::swap(a, b);
  }
  if (z == 0.0) return 1.0;
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b)) {
    return series(a, b, c, z);  // terminates
  }
  if (z == 1.0) return gauss_summation(a, b, c);

  const double r = std::abs(z);
  if (r <= kDirectRadius) return series(a, b, c, z);
  if (r >= kInverseRadius) return inverse_transform(a, b, c, z);

  const Complex w = z / (z - 1.0);
  if (std::abs(w) <= kDirectRadius) {
    return std::pow(1.0 - z, -a) * series(a, c - b, c, w);
  }
  // Slowly convergent fallbacks; the term cap turns a hopeless case into
  // ConvergenceError.
  if (r < 1.0) return series(a, b, c, z);
  return inverse_transform(a, b, c, z);
}

Complex gauss_2f1_derivative(Complex a, Complex b, Complex c, Complex z) {
  if (is_nonpositive_integer(c)) {
    throw PoleError("gauss_2f1_derivative: c is a non-positive integer");
  }
  return a * b / c * gauss_2f1(a + 1.0, b + 1.0, c + 1.0, z);
}

}  // namespace kgscatter
