#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include <boost/numeric/odeint.hpp>

#include "kgscatter/errors.hpp"
#include "kgscatter/ode_oracle.hpp"

namespace kgscatter {

namespace {

namespace odeint = boost::numeric::odeint;

// (Re phi, Im phi, Re phi', Im phi')
using State = std::array<double, 4>;

constexpr Complex kI{0.0, 1.0};
constexpr double kDegenerate = 1e-8;

struct KleinGordonRhs {
  const ScatteringConfig* cfg;
  double lo;
  double hi;

  void operator()(const State& s, State& ds, double x) const {
    // keep evaluations inside the open segment so the step barrier sees
    // the value of the side being integrated
    const double xe = std::clamp(x, std::nextafter(lo, hi), std::nextafter(hi, lo));
    const double v = potential_value(*cfg, xe);
    const double k2 = (cfg->E - v) * (cfg->E - v) - cfg->m * cfg->m;
    ds[0] = s[2];
    ds[1] = s[3];
    ds[2] = -k2 * s[0];
    ds[3] = -k2 * s[1];
  }
};

void integrate_segment(const ScatteringConfig& cfg, State& state, double from, double to,
                       double local_tol) {
  if (from == to) return;
  KleinGordonRhs rhs{&cfg, std::min(from, to), std::max(from, to)};
  auto stepper = odeint::make_controlled(local_tol, local_tol,
                                         odeint::runge_kutta_fehlberg78<State>());
  const double dt0 = std::copysign(std::min(0.01, std::abs(to - from)), to - from);
  odeint::integrate_adaptive(stepper, rhs, state, from, to, dt0);
}

// Integrate from `from` to `to`, stopping at every potential breakpoint
// that lies in between.
void integrate_piecewise(const ScatteringConfig& cfg, State& state, double from, double to,
                         double local_tol) {
  std::vector<double> knots;
  if (cfg.barrier == Barrier::Step && std::min(from, to) < 0.0 && 0.0 < std::max(from, to)) {
    knots.push_back(0.0);
  }
  knots.push_back(to);
  double x = from;
  for (double knot : knots) {
    integrate_segment(cfg, state, x, knot, local_tol);
    x = knot;
  }
}

struct Amplitudes {
  double incident_current;  // |u+|^2
  double reflected_current;  // |u-|^2
};

// Split (phi, phi') at x into WKB waves u+ q^{-1/2} e^{+i theta} and
// u- q^{-1/2} e^{-i theta}, with q the second-order WKB momentum.
Amplitudes split_wkb(const ScatteringConfig& cfg, const State& s, double x) {
  const double v = potential_value(cfg, x);
  const PotentialSlope slope = potential_slope(cfg, x);
  const double ev = cfg.E - v;
  const double k2 = ev * ev - cfg.m * cfg.m;
  if (!(k2 > 0.0)) {
    throw DomainError("integrate_rt: matching point x=" + std::to_string(x) +
                      " is not in a propagating zone");
  }
  const double k = std::sqrt(k2);
  const double dk2 = -2.0 * ev * slope.first;
  const double ddk2 = 2.0 * slope.first * slope.first - 2.0 * ev * slope.second;
  const double dk = dk2 / (2.0 * k);
  const double ddk = (ddk2 - 2.0 * dk * dk) / (2.0 * k);
  const double q = std::sqrt(k2 + 0.75 * (dk / k) * (dk / k) - 0.5 * ddk / k);

  const Complex phi{s[0], s[1]};
  const Complex dphi{s[2], s[3]};
  const Complex reduced = (dphi + dk / (2.0 * q) * phi) / (kI * q);
  const double scale = std::sqrt(q) / 2.0;
  const Complex up = scale * (phi + reduced);
  const Complex um = scale * (phi - reduced);
  return {std::norm(up), std::norm(um)};
}

}  // namespace

OracleDomain default_domain(const ScatteringConfig& cfg) {
  switch (cfg.barrier) {
    case Barrier::Step:
      return {-200.0, 50.0};
    case Barrier::Tanh: {
      const double scale = std::max(1.0 / cfg.b, 1.0);
      return {-200.0 * scale, 50.0 * scale};
    }
    case Barrier::LambertW:
      return {-2000.0 * cfg.sigma, 50.0 * std::max(cfg.sigma, 1.0)};
  }
  throw InvalidConfig("unknown barrier kind");
}

OracleResult integrate_rt(const ScatteringConfig& cfg, double x_left, double x_right,
                          double tol) {
  cfg.validate();
  if (!(x_left < 0.0 && x_right > 0.0)) {
    throw InvalidConfig("integrate_rt: need x_left < 0 < x_right");
  }
  if (!(tol > 0.0)) throw InvalidConfig("integrate_rt: tol must be positive");

  const Dispersion d = dispersion(cfg.E, cfg.m, cfg.V0);
  const double nu = d.nu.real();
  if (nu < kDegenerate || std::abs(d.mu) < kDegenerate) {
    throw DomainError("integrate_rt: degenerate matching (nu' or mu' ~ 0) at E=" +
                      std::to_string(cfg.E));
  }
  const double local_tol = std::clamp(1e-4 * tol, 1e-13, 1e-12);
  const bool evanescent = d.region == Region::Evanescent;

  State state;
  if (evanescent) {
    // decaying solution e^{i mu' x}, mu' = i|mu|, normalised to 1 at x_right
    state = {1.0, 0.0, -d.mu.imag(), 0.0};
  } else {
    const double mu = d.mu.real();
    const Complex phi = std::exp(kI * mu * x_right);
    const Complex dphi = kI * mu * phi;
    state = {phi.real(), phi.imag(), dphi.real(), dphi.imag()};
  }

  auto rt_from = [&](const State& s, double x) {
    const Amplitudes a = split_wkb(cfg, s, x);
    const double R = a.reflected_current / a.incident_current;
    const double T = evanescent ? 0.0 : d.mu.real() / a.incident_current;
    return RTPair{R, T};
  };

  integrate_piecewise(cfg, state, x_right, x_left, local_tol);
  const RTPair near = rt_from(state, x_left);
  integrate_piecewise(cfg, state, x_left, 2.0 * x_left, local_tol);
  const RTPair far = rt_from(state, 2.0 * x_left);

  OracleResult result{near.R,      near.T, std::abs(near.R + near.T - 1.0),
                      x_left,      x_right, std::abs(near.R - far.R)};
  if (!std::isfinite(result.R) || !std::isfinite(result.T)) {
    throw ConvergenceError("integrate_rt: non-finite amplitudes at E=" + std::to_string(cfg.E));
  }
  if (result.est_error > 10.0 * tol) {
    throw ConvergenceError("integrate_rt: tail estimate " + std::to_string(result.est_error) +
                           " exceeds 10*tol at E=" + std::to_string(cfg.E));
  }
  return result;
}

OracleResult integrate_rt(const ScatteringConfig& cfg, double tol) {
  const OracleDomain dom = default_domain(cfg);
  return integrate_rt(cfg, dom.x_left, dom.x_right, tol);
}

ComparisonReport compare_closed_form(const ScatteringConfig& cfg, double tol) {
  ComparisonReport report{cfg, tol, false, {}, std::nullopt, std::nullopt, 0.0, 0.0, 0.0, false};
  try {
    report.closed_form = closed_form_rt(cfg);
  } catch (const SingularityError&) {
    report.skipped = true;
    report.note = "skipped: singular";
    return report;
  }
  report.oracle = integrate_rt(cfg, tol);
  report.abs_dev_R = std::abs(report.oracle->R - report.closed_form->R);
  report.rel_dev_R = report.abs_dev_R / std::max(std::abs(report.closed_form->R), 1e-300);
  report.abs_dev_T = std::abs(report.oracle->T - report.closed_form->T);
  report.pass = std::max(report.abs_dev_R, report.abs_dev_T) <= tol;
  return report;
}

}  // namespace kgscatter
