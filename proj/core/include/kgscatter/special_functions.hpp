#pragma once

#include <complex>

namespace kgscatter {

using Complex = std::complex<double>;

/// Parameters of the confluent Heun equation in the Maple convention
///
///   f'' - [-a y^2 + (-b + a - g - 2) y + b + 1] / (y (y-1)) f'
///       - {[(-b - g - 2) a - 2 d] y + (b + 1) a + (-g - 1) b - 2 e - g}
///         / (2 y (y-1)) f = 0
///
/// with (a, b, g, d, e) = (alpha, beta, gamma, delta, eta).
struct HeunCParams {
  Complex alpha;
  Complex beta;
  Complex gamma;
  Complex delta;
  Complex eta;
};

/// Value and first derivative of a function at one point.
struct ValueAndDerivative {
  Complex value;
  Complex derivative;
};

/// Principal branch W0 of the Lambert-W function on the real axis.
/// Throws DomainError for x < -1/e or non-finite x.
double lambert_w0(double x);

/// W0(exp(t)) without forming exp(t); finite for any finite t.
double lambert_w0_exp(double t);

/// log Gamma(z). For Re z >= 1/2 this is the continuous principal branch;
/// for Re z < 1/2 it comes from the reflection formula and may differ from
/// it by a multiple of 2 pi i, which leaves exp() and the real part intact.
/// Throws PoleError at z = 0, -1, -2, ...
Complex log_gamma(Complex z);

/// Gauss hypergeometric function 2F1(a, b; c; z) for complex parameters.
///
/// Direct series for |z| <= 0.9, the z -> 1/z connection formula for
/// |z| >= 1.1 and the Pfaff transformation z -> z/(z-1) in between.
/// z = 1 exactly uses Gauss's summation theorem.
/// Throws PoleError if c is a non-positive integer, ConvergenceError if no
/// route converges.
Complex gauss_2f1(Complex a, Complex b, Complex c, Complex z);

/// d/dz 2F1(a, b; c; z) = (a b / c) 2F1(a+1, b+1; c+1; z).
Complex gauss_2f1_derivative(Complex a, Complex b, Complex c, Complex z);

/// Local Frobenius solution of the confluent Heun equation at y = 0,
/// normalised to HeunC(0) = 1. Power series only, so |y| < 1 is required
/// (DomainError otherwise). PoleError if beta is a negative integer.
Complex heun_c(const HeunCParams& p, Complex y);

/// heun_c together with its term-wise differentiated series.
ValueAndDerivative heun_c_with_derivative(const HeunCParams& p, Complex y);

/// HeunC continued analytically along the negative real axis beyond the
/// unit disk by repeated Taylor re-expansion of the ODE about regular
/// points. Accepts -kHeunContinuationLimit <= y <= 0.
ValueAndDerivative heun_c_continued(const HeunCParams& p, double y);

inline constexpr double kHeunContinuationLimit = 1000.0;

}  // namespace kgscatter
