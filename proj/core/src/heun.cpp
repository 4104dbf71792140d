#include <algorithm>
#include <cmath>
#include <string>

#include "kgscatter/errors.hpp"
#include "kgscatter/special_functions.hpp"

namespace kgscatter {

namespace {

constexpr double kSeriesEps = 1e-16;
constexpr long kMaxTerms = 100000;
constexpr double kSeriesHandoff = 0.5;

// Polynomial coefficients of the equation written as
//   y (y-1) f'' = (-alpha y^2 + kappa y + beta + 1) f' + (P y + Q)/2 f.
struct HeunPolynomials {
  Complex alpha;
  Complex kappa;
  Complex beta_plus_one;
  Complex P;
  Complex Q;
};

HeunPolynomials polynomials(const HeunCParams& p) {
  return {p.alpha,
          -p.beta + p.alpha - p.gamma - 2.0,
          p.beta + 1.0,
          (-p.beta - p.gamma - 2.0) * p.alpha - 2.0 * p.delta,
          (p.beta + 1.0) * p.alpha + (-p.gamma - 1.0) * p.beta - 2.0 * p.eta - p.gamma};
}

void check_finite(const HeunCParams& p) {
  for (Complex v : {p.alpha, p.beta, p.gamma, p.delta, p.eta}) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw DomainError("heun_c: non-finite parameter");
    }
  }
}

// Accumulates sum a_n t^n and its derivative; stops on two consecutive
// negligible terms in both sums.
class SeriesAccumulator {
public:
  explicit SeriesAccumulator(Complex t) : t_(t) {}

  // Returns true once converged.
  bool add(long n, Complex coeff) {
    const Complex term = coeff * power_;
    const Complex dterm = n == 0 ? Complex{0.0} : static_cast<double>(n) * coeff * dpower_;
    value_ += term;
    derivative_ += dterm;
    dpower_ = power_;
    power_ *= t_;
    const bool small = std::abs(term) <= kSeriesEps * std::abs(value_) &&
                       std::abs(dterm) <= kSeriesEps * std::abs(derivative_);
    small_in_a_row_ = small ? small_in_a_row_ + 1 : 0;
    return small_in_a_row_ >= 2;
  }

  ValueAndDerivative result() const { return {value_, derivative_}; }

private:
  Complex t_;
  Complex power_{1.0};
  Complex dpower_{0.0};
  Complex value_{0.0};
  Complex derivative_{0.0};
  int small_in_a_row_ = 0;
};

// One Taylor step of length h from a regular point y0 where (f, f') are known.
ValueAndDerivative taylor_step(const HeunPolynomials& poly, Complex y0,
                               ValueAndDerivative start, Complex h) {
  const Complex s0 = y0 * (y0 - 1.0);
  const Complex s1 = 2.0 * y0 - 1.0;
  const Complex q0 = -poly.alpha * y0 * y0 + poly.kappa * y0 + poly.beta_plus_one;
  const Complex q1 = -2.0 * poly.alpha * y0 + poly.kappa;
  const Complex q2 = -poly.alpha;
  const Complex r0 = 0.5 * (poly.P * y0 + poly.Q);
  const Complex r1 = 0.5 * poly.P;

  SeriesAccumulator acc(h);
  Complex prev{0.0};
  Complex cur = start.value;
  Complex next = start.derivative;
  acc.add(0, cur);
  if (acc.add(1, next)) return acc.result();
  for (long n = 0; n + 2 < kMaxTerms; ++n) {
    const double dn = static_cast<double>(n);
    const Complex a2 = ((q0 - s1 * dn) * (dn + 1.0) * next +
                        (q1 * dn + r0 - dn * (dn - 1.0)) * cur +
                        (q2 * (dn - 1.0) + r1) * prev) /
                       (s0 * (dn + 2.0) * (dn + 1.0));
    prev = cur;
    cur = next;
    next = a2;
    if (acc.add(n + 2, a2)) return acc.result();
  }
  throw ConvergenceError("heun_c_continued: Taylor step did not converge");
}

}  // namespace

ValueAndDerivative heun_c_with_derivative(const HeunCParams& p, Complex y) {
  check_finite(p);
  if (!(std::abs(y) < 1.0)) {
    throw DomainError("heun_c: |y| = " + std::to_string(std::abs(y)) +
                      " outside the unit disk");
  }
  const Complex& beta = p.beta;
  if (beta.imag() == 0.0 && beta.real() < 0.0 && beta.real() == std::floor(beta.real())) {
    throw PoleError("heun_c: beta is a negative integer");
  }
  const HeunPolynomials poly = polynomials(p);

  SeriesAccumulator acc(y);
  Complex prev{0.0};
  Complex cur{1.0};
  acc.add(0, cur);
  for (long n = 0; n + 1 < kMaxTerms; ++n) {
    const double dn = static_cast<double>(n);
    const Complex denom = (dn + 1.0) * (dn + poly.beta_plus_one);
    if (denom == 0.0) throw PoleError("heun_c: recurrence denominator vanishes");
    const Complex c_next = ((dn * (dn - 1.0) - (poly.kappa) * dn - 0.5 * poly.Q) * cur +
                            (poly.alpha * (dn - 1.0) - 0.5 * poly.P) * prev) /
                           denom;
    prev = cur;
    cur = c_next;
    if (acc.add(n + 1, c_next)) return acc.result();
  }
  throw ConvergenceError("heun_c: series did not converge at |y| = " +
                         std::to_string(std::abs(y)));
}

Complex heun_c(const HeunCParams& p, Complex y) {
  return heun_c_with_derivative(p, y).value;
}

ValueAndDerivative heun_c_continued(const HeunCParams& p, double y) {
  if (!std::isfinite(y) || y > 0.0 || y < -kHeunContinuationLimit) {
    throw DomainError("heun_c_continued: y = " + std::to_string(y) +
                      " outside [-" + std::to_string(kHeunContinuationLimit) + ", 0]");
  }
  if (y >= -kSeriesHandoff) return heun_c_with_derivative(p, y);

  const HeunPolynomials poly = polynomials(p);
  const double max_step = 2.0 / (1.0 + std::abs(p.alpha));
  double y0 = -kSeriesHandoff;
  ValueAndDerivative state = heun_c_with_derivative(p, y0);
  while (y0 > y) {
    // radius of convergence about y0 is |y0| (singular point at the origin)
    const double h = std::max(y - y0, -std::min(0.5 * std::abs(y0), max_step));
    state = taylor_step(poly, y0, state, h);
    y0 += h;
  }
  return state;
}

}  // namespace kgscatter
