#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <ostream>
#include <string>
#include <thread>

#include "kgscatter/coefficients.hpp"
#include "kgscatter/errors.hpp"
#include "kgscatter/ode_oracle.hpp"
#include "kgscatter/sweep.hpp"
#include "kgscatter/wavefunctions.hpp"

namespace kgscatter {

namespace {

// Runs body(i) for i in [0, n) on up to `threads` workers. Exceptions are
// collected per index and the lowest-index one is rethrown.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  std::vector<std::exception_ptr> errors(n);
  auto worker = [&](unsigned id) {
    for (std::size_t i = id; i < n; i += threads) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::vector<double> energy_grid(double emin, double emax, int steps) {
  if (steps < 1) throw InvalidConfig("steps must be at least 1");
  if (!(emax >= emin)) throw InvalidConfig("emax must not be below emin");
  std::vector<double> grid(static_cast<std::size_t>(steps));
  if (steps == 1) {
    grid[0] = emin;
    return grid;
  }
  const double h = (emax - emin) / static_cast<double>(steps - 1);
  for (int i = 0; i < steps; ++i) grid[static_cast<std::size_t>(i)] = emin + h * i;
  grid.back() = emax;
  return grid;
}

SweepResult run_energy_sweep(const SweepOptions& opts) {
  const std::vector<double> grid = energy_grid(opts.emin, opts.emax, opts.steps);
  if (!(opts.emin > opts.m)) throw InvalidConfig("emin must exceed m");
  if (opts.oracle && !(opts.tol > 0.0)) throw InvalidConfig("tol must be positive");

  SweepResult result;
  result.records.resize(grid.size());
  std::vector<char> oracle_failed(grid.size(), 0);

  parallel_for(grid.size(), opts.oracle ? opts.threads : 1u, [&](std::size_t i) {
    ScatteringConfig cfg{grid[i], opts.m, opts.V0, opts.barrier, opts.b, opts.sigma};
    cfg.validate();
    SweepRecord& rec = result.records[i];
    rec.E = grid[i];
    rec.region = classify_region(cfg.E, cfg.m, cfg.V0);
    try {
      const RTPair rt = closed_form_rt(cfg);
      rec.R = rt.R;
      rec.T = rt.T;
    } catch (const SingularityError&) {
      rec.flags = "singular";
      return;
    }
    if (!opts.oracle) return;
    rec.flags = "oracle-checked";
    try {
      const ComparisonReport report = compare_closed_form(cfg, opts.tol);
      rec.oracle_deviation = std::max(report.abs_dev_R, report.abs_dev_T);
      if (!report.pass) oracle_failed[i] = 1;
    } catch (const NumericalError&) {
      oracle_failed[i] = 1;
    }
  });

  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (result.records[i].flags == "singular") ++result.singular_count;
    if (oracle_failed[i]) ++result.oracle_failures;
  }
  return result;
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", v);
  return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& rows) {
  out << "E,R,T,region,flags\n";
  for (const SweepRecord& r : rows) {
    out << format_real(r.E) << ',' << (r.R ? format_real(*r.R) : "") << ','
        << (r.T ? format_real(*r.T) : "") << ',' << to_string(r.region) << ',' << r.flags
        << '\n';
  }
}

void write_sweep_json(std::ostream& out, const std::vector<SweepRecord>& rows) {
  out << "[";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRecord& r = rows[i];
    out << (i == 0 ? "\n" : ",\n") << "  {\"E\": " << format_real(r.E)
        << ", \"R\": " << (r.R ? format_real(*r.R) : "null")
        << ", \"T\": " << (r.T ? format_real(*r.T) : "null") << ", \"region\": \""
        << to_string(r.region) << "\", \"flags\": \"" << r.flags << "\"}";
  }
  out << (rows.empty() ? "]\n" : "\n]\n");
}

WaveDumpResult run_wave_dump(const WaveDumpOptions& opts) {
  if (opts.barrier == Barrier::Step) {
    throw InvalidConfig("wavefunction supports the tanh and lambertw barriers only");
  }
  if (opts.points < 1) throw InvalidConfig("points must be at least 1");
  if (!(opts.xmax >= opts.xmin)) throw InvalidConfig("xmax must not be below xmin");
  ScatteringConfig cfg{opts.E, opts.m, opts.V0, opts.barrier, opts.b, opts.sigma};
  cfg.validate();

  WaveDumpResult dump;
  dump.x = energy_grid(opts.xmin, opts.xmax, opts.points);
  for (double x : dump.x) {
    WaveSample s;
    try {
      s = opts.barrier == Barrier::Tanh
              ? tanh_wave(opts.E, opts.m, opts.V0, opts.b, opts.c1, opts.c2, x)
              : lw_wave(opts.E, opts.m, opts.V0, opts.sigma, opts.c1, opts.c2, x);
    } catch (const NumericalError& e) {
      throw NumericalError("wavefunction failed at x=" + format_real(x) + ": " + e.what());
    }
    if (!std::isfinite(s.phi.real()) || !std::isfinite(s.phi.imag())) {
      throw NumericalError("wavefunction is not finite at x=" + format_real(x));
    }
    dump.phi.push_back(s.phi);
    dump.current.push_back(current(s));
  }
  double max_abs = 0.0;
  double max_dev = 0.0;
  for (double j : dump.current) {
    max_abs = std::max(max_abs, std::abs(j));
    max_dev = std::max(max_dev, std::abs(j - dump.current.front()));
  }
  dump.current_spread = max_abs > 0.0 ? max_dev / max_abs : 0.0;
  return dump;
}

void write_wave_csv(std::ostream& out, const WaveDumpResult& dump) {
  out << "x,phi_re,phi_im,density,current\n";
  for (std::size_t i = 0; i < dump.x.size(); ++i) {
    out << format_real(dump.x[i]) << ',' << format_real(dump.phi[i].real()) << ','
        << format_real(dump.phi[i].imag()) << ',' << format_real(std::norm(dump.phi[i]))
        << ',' << format_real(dump.current[i]) << '\n';
  }
}

}  // namespace kgscatter
