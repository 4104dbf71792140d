#include <algorithm>
#include <cmath>
#include <random>

#include <doctest.h>

#include "kgscatter/barriers.hpp"
#include "kgscatter/coefficients.hpp"
#include "kgscatter/errors.hpp"
#include "kgscatter/wavefunctions.hpp"
#include "test_oracles.hpp"

using namespace kgscatter;
using kgscatter::testing::C;
using kgscatter::testing::relative_error;

namespace {

constexpr double kE = 5.0, kM = 1.0, kV0 = 3.0, kB = 0.5, kSigma = 0.15;

ScatteringConfig config(Barrier barrier, double E = kE) {
  ScatteringConfig cfg;
  cfg.E = E;
  cfg.barrier = barrier;
  cfg.b = kB;
  cfg.sigma = kSigma;
  return cfg;
}

// Relative residual of phi'' + [(E - V)^2 - m^2] phi = 0, with phi'' from a
// central difference of the library's analytic first derivative.
template <class Wave>
double residual(const ScatteringConfig& cfg, Wave wave, double x, double h = 1e-5) {
  const WaveSample s = wave(x);
  const C d2 = (wave(x + h).dphi - wave(x - h).dphi) / (2.0 * h);
  const double v = potential_value(cfg, x);
  const double k2 = (cfg.E - v) * (cfg.E - v) - cfg.m * cfg.m;
  return std::abs(d2 + k2 * s.phi) / (std::abs(d2) + std::abs(k2 * s.phi));
}

template <class Wave>
double derivative_mismatch(Wave wave, double x, double h = 1e-5) {
  const C fd = (wave(x + h).phi - wave(x - h).phi) / (2.0 * h);
  return relative_error(wave(x).dphi, fd);
}

}  // namespace

TEST_CASE("current of simple fields") {
  const double k = 1.7, x = 0.4;
  const C plane = std::exp(C(0.0, k * x));
  CHECK(current({x, plane, C(0.0, k) * plane}) == doctest::Approx(k).epsilon(1e-15));
  CHECK(current({x, C(2.0), C(-3.0)}) == 0.0);
  const C A(0.3, 1.1), B(-0.7, 0.2);
  const C phi = A * plane + B / plane;
  const C dphi = C(0.0, k) * (A * plane - B / plane);
  CHECK(current({x, phi, dphi}) == doctest::Approx(k * (std::norm(A) - std::norm(B))).epsilon(1e-14));
}

TEST_CASE("tanh wave asymptotics") {
  const double nu = std::sqrt(kE * kE - kM * kM);
  const double mu = std::sqrt((kE - kV0) * (kE - kV0) - kM * kM);
  // c2 = 0 on the far left: a pure e^{i nu x} wave
  const auto left = [](double x) { return tanh_wave(kE, kM, kV0, kB, 1.0, 0.0, x); };
  const C ratio = left(-25.0).phi / left(-25.3).phi;
  CHECK(relative_error(ratio, std::exp(C(0.0, nu * 0.3))) < 1e-9);
  CHECK(relative_error(left(-25.0).dphi, C(0.0, nu) * left(-25.0).phi) < 1e-9);
  // transmitted solution is e^{i mu x} on the far right
  for (double x : {20.0, 35.0}) {
    const auto s = tanh_transmitted_wave(kE, kM, kV0, kB, x);
    CHECK(std::abs(s.phi - std::exp(C(0.0, mu * x))) < 1e-8);
    CHECK(std::abs(s.dphi - C(0.0, mu) * std::exp(C(0.0, mu * x))) < 1e-7);
  }
}

TEST_CASE("tanh wave solves the Klein-Gordon equation") {
  const auto cfg = config(Barrier::Tanh);
  const auto wave = [](double x) { return tanh_wave(kE, kM, kV0, kB, 1.0, 0.0, x); };
  CHECK(residual(cfg, wave, 0.7) < 1e-6);
  const auto mixed = [](double x) { return tanh_wave(kE, kM, kV0, kB, C(0.4, 1.0), C(-2.0, 0.3), x); };
  const auto trans = [](double x) { return tanh_transmitted_wave(kE, kM, kV0, kB, x); };
  double worst = 0.0, worst_d = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double x = -10.0 + 20.0 * i / 100.0;
    worst = std::max({worst, residual(cfg, wave, x), residual(cfg, mixed, x), residual(cfg, trans, x)});
    worst_d = std::max({worst_d, derivative_mismatch(wave, x), derivative_mismatch(trans, x)});
  }
  CHECK(worst < 1e-6);
  CHECK(worst_d < 1e-8);
}

TEST_CASE("tanh current is conserved") {
  for (double E : {1.3, 5.0}) {  // superradiant and transmissive
    for (auto [c1, c2] : {std::pair<C, C>{1.0, 0.0}, {C(0.4, 1.0), C(-2.0, 0.3)}}) {
      const double j0 = current(tanh_wave(E, kM, kV0, kB, c1, c2, 0.0));
      double spread = 0.0;
      for (int i = 0; i <= 100; ++i) {
        const double x = -10.0 + 20.0 * i / 100.0;
        spread = std::max(spread, std::abs(current(tanh_wave(E, kM, kV0, kB, c1, c2, x)) - j0));
      }
      CHECK(spread <= 1e-8 * std::abs(j0));
    }
  }
}

TEST_CASE("reflection from the transmitted wave's far-left decomposition") {
  for (double E : {1.2, 1.7, 4.3, 5.0, 8.0}) {
    const double nu = std::sqrt(E * E - kM * kM);
    const double x = -30.0;
    const auto s = tanh_transmitted_wave(E, kM, kV0, kB, x);
    const C A = 0.5 * (s.phi + s.dphi / C(0.0, nu)) * std::exp(C(0.0, -nu * x));
    const C B = 0.5 * (s.phi - s.dphi / C(0.0, nu)) * std::exp(C(0.0, nu * x));
    const auto closed = tanh_rt(E, kM, kV0, kB);
    CHECK(std::abs(std::norm(B / A) - closed.R) < 1e-10 * std::max(1.0, closed.R));
    // transmitted current is mu' for the unit wave
    const double mu = dispersion(E, kM, kV0).mu.real();
    CHECK(current(s) == doctest::Approx(mu).epsilon(1e-10));
    CHECK(relative_error(mu / nu / std::norm(A), closed.T) < 1e-10);
  }
}

TEST_CASE("linearity in the branch coefficients") {
  auto rng = testing::seeded_rng();
  std::normal_distribution<double> n(0.0, 1.0);
  for (int i = 0; i < 20; ++i) {
    const C c1(n(rng), n(rng)), c2(n(rng), n(rng));
    const double x = 3.0 * n(rng);
    const auto both = tanh_wave(kE, kM, kV0, kB, c1, c2, x);
    const auto one = tanh_wave(kE, kM, kV0, kB, 1.0, 0.0, x);
    const auto two = tanh_wave(kE, kM, kV0, kB, 0.0, 1.0, x);
    CHECK(relative_error(both.phi, c1 * one.phi + c2 * two.phi) < 1e-12);
    CHECK(relative_error(both.dphi, c1 * one.dphi + c2 * two.dphi) < 1e-12);
    const auto lw = lw_wave(kE, kM, kV0, kSigma, c1, c2, x / 3.0);
    const auto lw1 = lw_wave(kE, kM, kV0, kSigma, 1.0, 0.0, x / 3.0);
    const auto lw2 = lw_wave(kE, kM, kV0, kSigma, 0.0, 1.0, x / 3.0);
    CHECK(relative_error(lw.phi, c1 * lw1.phi + c2 * lw2.phi) < 1e-12);
  }
}

TEST_CASE("Lambert-W wave: Heun argument and right asymptotics") {
  CHECK(-lambert_w0(std::exp(-0.0 / kSigma)) == doctest::Approx(-0.5671433).epsilon(1e-7));
  const double mu = std::sqrt((kE - kV0) * (kE - kV0) - kM * kM);
  // the c1 branch oscillates with |mu'| and runs leftwards: current -|mu'| |c1|^2
  const auto a = lw_wave(kE, kM, kV0, kSigma, 1.0, 0.0, 8.0);
  const auto b = lw_wave(kE, kM, kV0, kSigma, 1.0, 0.0, 8.5);
  CHECK(relative_error(b.phi / a.phi, std::exp(C(0.0, -mu * 0.5))) < 1e-9);
  CHECK(current(a) == doctest::Approx(-mu * std::norm(a.phi)).epsilon(1e-9));
  const auto c = lw_wave(kE, kM, kV0, kSigma, 0.0, 1.0, 8.0);
  CHECK(relative_error(c.dphi, C(0.0, mu) * c.phi) < 1e-9);
}

TEST_CASE("Lambert-W wave solves the Klein-Gordon equation") {
  const auto cfg = config(Barrier::LambertW);
  const auto wave = [](double x) { return lw_wave(kE, kM, kV0, kSigma, C(0.4, 1.0), C(-2.0, 0.3), x); };
  CHECK(residual(cfg, wave, 1.0) < 1e-6);
  double worst = 0.0, worst_d = 0.0;
  for (int i = 0; i <= 130; ++i) {
    const double x = -3.0 + 13.0 * i / 130.0;
    worst = std::max(worst, residual(cfg, wave, x));
    worst_d = std::max(worst_d, derivative_mismatch(wave, x));
  }
  CHECK(worst < 1e-6);
  CHECK(worst_d < 1e-8);
}

TEST_CASE("Lambert-W current is conserved") {
  for (double E : {1.3, 5.0}) {
    for (auto [c1, c2] : {std::pair<C, C>{1.0, 0.0}, {0.0, 1.0}, {C(0.4, 1.0), C(-2.0, 0.3)}}) {
      const double j0 = current(lw_wave(E, kM, kV0, kSigma, c1, c2, 0.0));
      double spread = 0.0;
      for (int i = 0; i <= 130; ++i) {
        const double x = -3.0 + 13.0 * i / 130.0;
        spread = std::max(spread, std::abs(current(lw_wave(E, kM, kV0, kSigma, c1, c2, x)) - j0));
      }
      CHECK(spread <= 1e-6 * std::abs(j0));
    }
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(lw_wave(kE, kM, kV0, kSigma, 1.0, 0.0, -300.0), DomainError);
  CHECK_THROWS_AS(lw_wave(kE, kM, kV0, 0.0, 1.0, 0.0, 1.0), InvalidConfig);
  CHECK_THROWS_AS(tanh_wave(kE, kM, kV0, -1.0, 1.0, 0.0, 1.0), InvalidConfig);
}
