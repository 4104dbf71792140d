#pragma once

#include <string_view>

#include "kgscatter/special_functions.hpp"

namespace kgscatter {

enum class Barrier { Step, Tanh, LambertW };

/// Energy bands of a Klein-Gordon particle hitting a barrier of height V0.
enum class Region {
  Superradiant,  ///< m < E < V0 - m: R > 1, T < 0
  Evanescent,    ///< V0 - m <= E <= V0 + m: transmitted wave decays
  Transmissive,  ///< E > V0 + m
};

/// Input record shared by all coefficient computations. Natural units.
struct ScatteringConfig {
  double E = 0.0;
  double m = 1.0;
  double V0 = 3.0;
  Barrier barrier = Barrier::Step;
  double b = 0.5;       ///< tanh smoothness, used iff barrier == Tanh
  double sigma = 0.15;  ///< Lambert-W smoothness, used iff barrier == LambertW

  /// Throws InvalidConfig unless m > 0, V0 > 0, E > m and the active shape
  /// parameter is positive.
  void validate() const;
};

/// Group-velocity-signed wave numbers on the incident (nu) and transmitted
/// (mu) side. nu > 0 always; mu < 0 in the superradiant band, +i|mu| in the
/// evanescent band, mu > 0 above V0 + m.
struct Dispersion {
  Complex nu;
  Complex mu;
  Region region;
};

double potential_value(const ScatteringConfig& cfg, double x);

/// First and second x-derivatives of the potential (zero for the step
/// away from x = 0).
struct PotentialSlope {
  double first;
  double second;
};
PotentialSlope potential_slope(const ScatteringConfig& cfg, double x);

/// Boundary energies E = V0 -+ m belong to the evanescent band.
/// Throws InvalidConfig if E <= m.
Region classify_region(double E, double m, double V0);

Dispersion dispersion(double E, double m, double V0);

std::string_view to_string(Region region);
std::string_view to_string(Barrier barrier);
/// Accepts "step", "tanh", "lambertw"; throws InvalidConfig otherwise.
Barrier parse_barrier(std::string_view name);

}  // namespace kgscatter
