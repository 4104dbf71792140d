#include "cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "kgscatter/errors.hpp"
#include "kgscatter/sweep.hpp"

namespace kgscatter::cli {

namespace {

// "re" or "re,im"
Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    if (comma == std::string::npos) {
      const double re = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return {re, 0.0};
    }
    const std::string re_text = text.substr(0, comma);
    const std::string im_text = text.substr(comma + 1);
    const double re = std::stod(re_text, &used);
    if (used != re_text.size()) throw std::invalid_argument(text);
    const double im = std::stod(im_text, &used);
    if (used != im_text.size()) throw std::invalid_argument(text);
    return {re, im};
  } catch (const std::exception&) {
    throw InvalidConfig("cannot parse complex coefficient '" + text + "' (expected re or re,im)");
  }
}

const std::map<std::string, Barrier> kBarrierNames = {
    {"step", Barrier::Step}, {"tanh", Barrier::Tanh}, {"lambertw", Barrier::LambertW}};

int run_sweep(const SweepOptions& opts, const std::string& format, bool strict,
              std::ostream& out, std::ostream& err) {
  const SweepResult result = run_energy_sweep(opts);
  if (format == "json") {
    write_sweep_json(out, result.records);
  } else {
    write_sweep_csv(out, result.records);
  }
  if (result.singular_count > 0) {
    err << "note: " << result.singular_count << " singular energy point(s) flagged\n";
  }
  if (opts.oracle) {
    double worst = 0.0;
    for (const auto& r : result.records) {
      if (r.oracle_deviation) worst = std::max(worst, *r.oracle_deviation);
    }
    err << "oracle: max deviation " << format_real(worst) << ", " << result.oracle_failures
        << " point(s) beyond tol " << format_real(opts.tol) << '\n';
    if (result.oracle_failures > 0) return kCheckFailed;
  }
  if (strict && result.singular_count > 0) return kCheckFailed;
  return kOk;
}

int run_wavefunction(const WaveDumpOptions& opts, std::ostream& out, std::ostream& err) {
  const WaveDumpResult dump = run_wave_dump(opts);
  write_wave_csv(out, dump);
  err << "current spread max|j-j0|/max|j| = " << format_real(dump.current_spread) << '\n';
  return kOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Klein-Gordon reflection/transmission for step, tanh and Lambert-W barriers",
               "kgscatter"};

  SweepOptions sweep;
  std::string barrier_name;
  std::string format = "csv";
  bool strict = false;
  app.add_option("--barrier", barrier_name, "step | tanh | lambertw")
      ->check(CLI::IsMember({"step", "tanh", "lambertw"}));
  app.add_option("--V0", sweep.V0, "barrier height")->capture_default_str();
  app.add_option("--m", sweep.m, "particle mass")->capture_default_str();
  app.add_option("--b", sweep.b, "tanh smoothness")->capture_default_str();
  app.add_option("--sigma", sweep.sigma, "Lambert-W smoothness")->capture_default_str();
  app.add_option("--emin", sweep.emin, "lowest energy")->capture_default_str();
  app.add_option("--emax", sweep.emax, "highest energy")->capture_default_str();
  app.add_option("--steps", sweep.steps, "number of grid energies")->capture_default_str();
  app.add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_flag("--oracle", sweep.oracle, "cross-check every point against the ODE oracle");
  app.add_option("--tol", sweep.tol, "oracle tolerance")->capture_default_str();
  app.add_flag("--strict", strict, "treat singular points as failures");
  app.add_option("--threads", sweep.threads, "oracle worker threads (0 = all cores)");

  WaveDumpOptions wave;
  std::string wave_barrier;
  std::string c1_text = "1";
  std::string c2_text = "0";
  CLI::App* wf = app.add_subcommand("wavefunction", "dump phi(x) and the current on an x grid");
  wf->add_option("--barrier", wave_barrier, "tanh | lambertw")
      ->required()
      ->check(CLI::IsMember({"tanh", "lambertw"}));
  wf->add_option("--E", wave.E, "energy")->capture_default_str();
  wf->add_option("--V0", wave.V0, "barrier height")->capture_default_str();
  wf->add_option("--m", wave.m, "particle mass")->capture_default_str();
  wf->add_option("--b", wave.b, "tanh smoothness")->capture_default_str();
  wf->add_option("--sigma", wave.sigma, "Lambert-W smoothness")->capture_default_str();
  wf->add_option("--xmin", wave.xmin, "left end of the x grid")->capture_default_str();
  wf->add_option("--xmax", wave.xmax, "right end of the x grid")->capture_default_str();
  wf->add_option("--points", wave.points, "number of x points")->capture_default_str();
  wf->add_option("--c1", c1_text, "coefficient of the first branch, re or re,im")
      ->capture_default_str();
  wf->add_option("--c2", c2_text, "coefficient of the second branch, re or re,im")
      ->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (wf->parsed()) {
      wave.barrier = kBarrierNames.at(wave_barrier);
      wave.c1 = parse_complex(c1_text);
      wave.c2 = parse_complex(c2_text);
      return run_wavefunction(wave, out, err);
    }
    if (barrier_name.empty()) {
      err << "error: --barrier is required\n" << app.help();
      return kUsage;
    }
    sweep.barrier = kBarrierNames.at(barrier_name);
    return run_sweep(sweep, format, strict, out, err);
  } catch (const InvalidConfig& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
}

}  // namespace kgscatter::cli
