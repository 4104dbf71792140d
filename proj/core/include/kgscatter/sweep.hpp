#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kgscatter/barriers.hpp"
#include "kgscatter/special_functions.hpp"

namespace kgscatter {

struct SweepOptions {
  Barrier barrier = Barrier::Step;
  double V0 = 3.0;
  double m = 1.0;
  double b = 0.5;
  double sigma = 0.15;
  double emin = 1.05;
  double emax = 6.0;
  int steps = 200;
  bool oracle = false;
  double tol = 1e-4;
  unsigned threads = 0;  ///< 0 = hardware concurrency
};

/// One energy of a sweep. Singular points carry flags == "singular" and no
/// R/T values.
struct SweepRecord {
  double E;
  std::optional<double> R;
  std::optional<double> T;
  Region region;
  std::string flags;
  std::optional<double> oracle_deviation;
};

struct SweepResult {
  std::vector<SweepRecord> records;
  std::size_t singular_count = 0;
  std::size_t oracle_failures = 0;
};

/// Evenly spaced grid emin..emax inclusive (steps points).
std::vector<double> energy_grid(double emin, double emax, int steps);

SweepResult run_energy_sweep(const SweepOptions& opts);

/// "%.11e": 12 significant digits, lowercase scientific.
std::string format_real(double v);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& rows);
void write_sweep_json(std::ostream& out, const std::vector<SweepRecord>& rows);

struct WaveDumpOptions {
  Barrier barrier = Barrier::Tanh;
  double E = 5.0;
  double m = 1.0;
  double V0 = 3.0;
  double b = 0.5;
  double sigma = 0.15;
  double xmin = -10.0;
  double xmax = 10.0;
  int points = 100;
  Complex c1{1.0, 0.0};
  Complex c2{0.0, 0.0};
};

struct WaveDumpResult {
  std::vector<double> x;
  std::vector<Complex> phi;
  std::vector<double> current;
  double current_spread;  ///< max |j - j0| / max(|j0|, tiny)
};

/// Throws NumericalError naming the failing x on special-function failure.
WaveDumpResult run_wave_dump(const WaveDumpOptions& opts);

void write_wave_csv(std::ostream& out, const WaveDumpResult& dump);

}  // namespace kgscatter
