#pragma once

#include <optional>
#include <string>

#include "kgscatter/barriers.hpp"
#include "kgscatter/coefficients.hpp"

namespace kgscatter {

/// R and T obtained by direct integration of phi'' = -[(E - V)^2 - m^2] phi.
struct OracleResult {
  double R;
  double T;
  double unitarity_defect;  ///< |R + T - 1|
  double left_match_x;
  double right_match_x;
  double est_error;  ///< |R(x_left) - R(2 x_left)|
};

struct OracleDomain {
  double x_left;
  double x_right;
};

/// Default matching points: -200 L / +50 L with L = max(1/b, 1) for tanh and
/// 1 for the step; -2000 sigma / +50 max(sigma, 1) for Lambert-W.
OracleDomain default_domain(const ScatteringConfig& cfg);

/// Integrates from x_right (pure transmitted wave) to x_left and splits the
/// solution into WKB incident and reflected waves there. tol is the target
/// accuracy on R; the integrator runs at clamp(1e-4 tol, 1e-13, 1e-12).
/// ConvergenceError if est_error > 10 tol, DomainError when nu' or mu'
/// vanishes.
OracleResult integrate_rt(const ScatteringConfig& cfg, double x_left,
                          double x_right, double tol = 1e-8);

OracleResult integrate_rt(const ScatteringConfig& cfg, double tol = 1e-8);

struct ComparisonReport {
  ScatteringConfig cfg;
  double tol;
  bool skipped;        ///< closed form singular at this energy
  std::string note;    ///< "skipped: singular" or empty
  std::optional<RTPair> closed_form;
  std::optional<OracleResult> oracle;
  double abs_dev_R;    ///< |R_oracle - R_closed|
  double rel_dev_R;    ///< abs_dev_R / max(|R_closed|, 1e-300)
  double abs_dev_T;
  bool pass;           ///< max(abs_dev_R, abs_dev_T) <= tol
};

ComparisonReport compare_closed_form(const ScatteringConfig& cfg, double tol);

}  // namespace kgscatter
