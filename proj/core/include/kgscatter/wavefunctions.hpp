#pragma once

#include "kgscatter/special_functions.hpp"

namespace kgscatter {

struct WaveSample {
  double x;
  Complex phi;
  Complex dphi;
};

/// General tanh-barrier solution
///   phi = c1 (-e^{2bx})^{i nu} (1+e^{2bx})^lambda 2F1(i nu+lambda-i mu, i nu+lambda+i mu; 1+2i nu; -e^{2bx})
///       + c2 (-e^{2bx})^{-i nu} (1+e^{2bx})^lambda 2F1(-i nu+lambda+i mu, -i nu+lambda-i mu; 1-2i nu; -e^{2bx})
/// with nu, mu scaled by 1/(2b) and (-e^{2bx})^{s} = exp(s (2bx + i pi)).
WaveSample tanh_wave(double E, double m, double V0, double b, Complex c1,
                     Complex c2, double x);

/// Transmitted tanh solution, equal to e^{i mu' x} as x -> +inf and to
/// A e^{i nu' x} + B e^{-i nu' x} as x -> -inf.
WaveSample tanh_transmitted_wave(double E, double m, double V0, double b,
                                 double x);

/// HeunC parameters of the Lambert-W barrier reduction.
HeunCParams lambertw_heun_params(double E, double m, double V0, double sigma);

/// General Lambert-W barrier solution, with W = W0(e^{-x/sigma}),
///   phi = e^{-alpha W/2} [ c1 W^{beta/2} HeunC(alpha, beta, ...; -W)
///                        + c2 W^{-beta/2} HeunC(alpha, -beta, ...; -W) ].
/// Inside W <= 1/2 the HeunC power series is used directly, beyond it the
/// analytic continuation along the negative axis.
WaveSample lw_wave(double E, double m, double V0, double sigma, Complex c1,
                   Complex c2, double x);

/// Conserved Klein-Gordon current Im(conj(phi) dphi).
double current(const WaveSample& s);

}  // namespace kgscatter
