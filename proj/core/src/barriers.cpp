#include <algorithm>
#include <cmath>
#include <string>

#include "kgscatter/barriers.hpp"
#include "kgscatter/errors.hpp"

namespace kgscatter {

void ScatteringConfig::validate() const {
  if (!(m > 0.0) || !std::isfinite(m)) throw InvalidConfig("mass m must be positive");
  if (!(V0 > 0.0) || !std::isfinite(V0)) throw InvalidConfig("barrier height V0 must be positive");
  if (!(E > m) || !std::isfinite(E)) {
    throw InvalidConfig("energy E=" + std::to_string(E) + " must exceed m=" + std::to_string(m));
  }
  if (barrier == Barrier::Tanh && !(b > 0.0)) throw InvalidConfig("tanh smoothness b must be positive");
  if (barrier == Barrier::LambertW && !(sigma > 0.0)) {
    throw InvalidConfig("Lambert-W smoothness sigma must be positive");
  }
}

double potential_value(const ScatteringConfig& cfg, double x) {
  switch (cfg.barrier) {
    case Barrier::Step:
      return x >= 0.0 ? cfg.V0 : 0.0;
    case Barrier::Tanh:
      return 0.5 * cfg.V0 * (std::tanh(cfg.b * x) + 1.0);
    case Barrier::LambertW:
      return cfg.V0 / (1.0 + lambert_w0_exp(-x / cfg.sigma));
  }
  throw InvalidConfig("unknown barrier kind");
}

PotentialSlope potential_slope(const ScatteringConfig& cfg, double x) {
  switch (cfg.barrier) {
    case Barrier::Step:
      return {0.0, 0.0};
    case Barrier::Tanh: {
      const double t = std::tanh(cfg.b * x);
      const double sech2 = 1.0 - t * t;
      return {0.5 * cfg.V0 * cfg.b * sech2, -cfg.V0 * cfg.b * cfg.b * t * sech2};
    }
    case Barrier::LambertW: {
      // dW/dx = -W / (sigma (1 + W))
      const double w = lambert_w0_exp(-x / cfg.sigma);
      const double opw = 1.0 + w;
      const double first = cfg.V0 * w / (cfg.sigma * opw * opw * opw);
      const double second =
          -cfg.V0 * w * (1.0 - 2.0 * w) / (cfg.sigma * cfg.sigma * std::pow(opw, 5));
      return {first, second};
    }
  }
  throw InvalidConfig("unknown barrier kind");
}

Region classify_region(double E, double m, double V0) {
  if (!(E > m)) {
    throw InvalidConfig("classify_region: E=" + std::to_string(E) + " must exceed m=" +
                        std::to_string(m));
  }
  if (E < V0 - m) return Region::Superradiant;
  if (E <= V0 + m) return Region::Evanescent;
  return Region::Transmissive;
}

Dispersion dispersion(double E, double m, double V0) {
  const Region region = classify_region(E, m, V0);
  const Complex nu{std::sqrt((E - m) * (E + m)), 0.0};
  const double d = E - V0;
  Complex mu;
  if (region == Region::Evanescent) {
    const double kappa2 = (m - d) * (m + d);
    mu = Complex{0.0, std::sqrt(std::max(kappa2, 0.0))};
  } else {
    // dE/dmu' = mu' / (E - V0) >= 0 fixes sign(mu') = sign(E - V0)
    const double k = std::sqrt((d - m) * (d + m));
    mu = Complex{std::copysign(k, d), 0.0};
  }
  return {nu, mu, region};
}

std::string_view to_string(Region region) {
  switch (region) {
    case Region::Superradiant: return "superradiant";
    case Region::Evanescent: return "evanescent";
    case Region::Transmissive: return "transmissive";
  }
  return "unknown";
}

std::string_view to_string(Barrier barrier) {
  switch (barrier) {
    case Barrier::Step: return "step";
    case Barrier::Tanh: return "tanh";
    case Barrier::LambertW: return "lambertw";
  }
  return "unknown";
}

Barrier parse_barrier(std::string_view name) {
  if (name == "step") return Barrier::Step;
  if (name == "tanh") return Barrier::Tanh;
  if (name == "lambertw") return Barrier::LambertW;
  throw InvalidConfig("unknown barrier '" + std::string(name) + "'");
}

}  // namespace kgscatter
