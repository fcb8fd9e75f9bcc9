#include "fockbound/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <ostream>

#include "fockbound/config.hpp"
#include "fockbound/errors.hpp"
#include "fockbound/ladder.hpp"
#include "fockbound/report.hpp"
#include "fockbound/rng.hpp"

namespace fockbound {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr double kFinalErrorTol = 1e-12;

struct Context {
  ExperimentConfig config;
  fs::path out_dir;
};

Context prepare(const CommandOptions& options) {
  Context ctx{load_config(options.config), {}};
  if (options.seed) ctx.config.seed = *options.seed;
  if (options.out_dir) {
    ctx.out_dir = *options.out_dir;
  } else if (const char* env = std::getenv(kOutDirEnv); env && *env) {
    ctx.out_dir = env;
  } else {
    ctx.out_dir = ctx.config.output_dir;
  }
  return ctx;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6e", v);
  return buf;
}

void print_check(std::ostream& out, const CheckResult& c) {
  out << c.name << ' ' << (c.passed ? "PASS" : "FAIL") << ' ' << sci(c.residual) << ' '
      << sci(c.tolerance) << '\n';
}

/// Runs fn(i) for every cell, possibly concurrently; rethrows the first failure in index order.
template <class Fn>
void run_cells(std::size_t count, Fn&& fn) {
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<Index>(count);
#pragma omp parallel for schedule(dynamic, 1)
  for (Index i = 0; i < n; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void write_report(const fs::path& dir, const std::string& file, const RunReport& report) {
  write_file_atomic(dir / file, to_json(report).dump(2) + "\n");
}

double elapsed(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class Body>
int guarded(const char* command, const CommandOptions& options, std::ostream& err, Body&& body) {
  const auto start = Clock::now();
  try {
    const int code = body();
    if (!options.quiet) {
      err << command << ": wall time " << sci(elapsed(start)) << " s\n";
    }
    return code;
  } catch (const ConfigError& e) {
    err << command << ": config error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << command << ": invalid input: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << command << ": " << e.what() << '\n';
    return kExitCheckFailed;
  }
  return kExitConfigError;
}

}  // namespace

int cmd_verify(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded("verify", options, err, [&] {
    const Context ctx = prepare(options);
    if (ctx.config.n_max < 2) throw ConfigError("verify needs n_max >= 2 (pair-creation checks)");

    RunReport report;
    report.command = "verify";
    report.config = config_to_json(ctx.config);
    report.checks = run_full_suite(ctx.config.suite_options());
    report.passed = true;
    for (const auto& c : report.checks) {
      report.passed = report.passed && c.passed;
      if (!options.quiet) print_check(out, c);
    }
    write_report(ctx.out_dir, "verify_report.json", report);
    return report.passed ? kExitOk : kExitCheckFailed;
  });
}

int cmd_converge(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded("converge", options, err, [&] {
    const Context ctx = prepare(options);
    const ExperimentConfig& cfg = ctx.config;
    if (cfg.converge.empty()) throw ConfigError("converge: no experiments configured");

    std::vector<CurveRecord> curves(cfg.converge.size());
    std::vector<std::vector<CheckResult>> checks(cfg.converge.size());
    run_cells(cfg.converge.size(), [&](std::size_t i) {
      const ConvergeExperiment& e = cfg.converge[i];
      const BasisPtr basis = build_basis(e.d, e.n_max);
      const bool number = e.family == QuadraticKind::Number;
      const OperatorProfile profile =
          number ? OperatorProfile{} : cfg.profiles.at(e.profile);
      const auto spec = QuadraticOperatorSpec::complete(
          e.family, profile.build(e.d, cfg.seed), OrthonormalSystem::canonical(e.d));

      Rng rng(derive_seed(cfg.seed, "converge." + e.name));
      const FockVector phi = e.state == InitialState::Vacuum ? FockVector::vacuum(basis)
                                                             : random_sector_state(basis, rng, 2);
      const ConvergenceCurve curve = convergence_curve(spec, phi, e.m_grid, cfg.seed);

      CurveRecord& rec = curves[i];
      rec.name = e.name;
      rec.family = std::string(to_string(e.family));
      rec.profile = number ? "" : e.profile;
      rec.m_values = curve.m_values;
      rec.values = curve.errors;

      const double final_error = curve.errors.empty() ? 0.0 : curve.errors.back();
      checks[i].push_back(make_check("converge." + e.name + ".final", final_error, kFinalErrorTol));
      if (const auto entry = profile.diagonal_entry()) {
        std::vector<double> diag(e.d);
        for (int j = 0; j < e.d; ++j) diag[j] = (*entry)(j + 1);
        double worst = 0.0;
        for (std::size_t k = 0; k < curve.m_values.size(); ++k) {
          const double ref = diagonal_tail_error(e.family, diag, phi, curve.m_values[k]);
          rec.reference.push_back(ref);
          worst = std::max(worst, std::abs(ref - curve.errors[k]) / std::max(1.0, std::abs(ref)));
        }
        checks[i].push_back(make_check("converge." + e.name + ".tail", worst, kTailTol));
      }
      rec.passed = std::all_of(checks[i].begin(), checks[i].end(),
                               [](const CheckResult& c) { return c.passed; });
    });

    RunReport report;
    report.command = "converge";
    report.config = config_to_json(cfg);
    report.passed = true;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      write_file_atomic(ctx.out_dir / ("converge_" + curves[i].name + ".csv"), curve_csv(curves[i]));
      for (const auto& c : checks[i]) {
        if (!options.quiet) print_check(out, c);
        report.checks.push_back(c);
      }
      report.passed = report.passed && curves[i].passed;
    }
    report.curves = std::move(curves);
    write_report(ctx.out_dir, "converge_report.json", report);
    return report.passed ? kExitOk : kExitCheckFailed;
  });
}

int cmd_diverge(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded("diverge", options, err, [&] {
    const Context ctx = prepare(options);
    const ExperimentConfig& cfg = ctx.config;
    if (cfg.witnesses.empty()) throw ConfigError("diverge: no witnesses configured");

    std::vector<CurveRecord> curves(cfg.witnesses.size());
    std::vector<std::vector<CheckResult>> checks(cfg.witnesses.size());
    run_cells(cfg.witnesses.size(), [&](std::size_t i) {
      const WitnessExperiment& w = cfg.witnesses[i];
      const auto entry = *cfg.profiles.at(w.profile).diagonal_entry();
      const ConvergenceCurve curve = divergence_witness(w.family, entry, w.grid);

      CurveRecord& rec = curves[i];
      rec.name = w.name;
      rec.family = std::string(to_string(w.family));
      rec.profile = w.profile;
      rec.value_label = "value";
      rec.m_values = curve.m_values;
      rec.values = curve.errors;
      rec.reference = curve.reference;

      double worst = 0.0;
      for (std::size_t k = 0; k < curve.errors.size(); ++k) {
        const double ref = curve.reference[k];
        worst = std::max(worst, std::abs(curve.errors[k] - ref) / std::max(1.0, std::abs(ref)));
      }
      checks[i].push_back(make_check("diverge." + w.name + ".closed_form", worst, kWitnessTol));
      checks[i].push_back(
          make_check("diverge." + w.name + ".unbounded", witness_diverges(curve) ? 0.0 : 1.0, 0.0));
      rec.passed = checks[i][0].passed && checks[i][1].passed;
    });

    RunReport report;
    report.command = "diverge";
    report.config = config_to_json(cfg);
    report.passed = true;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      write_file_atomic(ctx.out_dir / ("diverge_" + curves[i].name + ".csv"), curve_csv(curves[i]));
      for (const auto& c : checks[i]) {
        if (!options.quiet) print_check(out, c);
        report.checks.push_back(c);
      }
      report.passed = report.passed && curves[i].passed;
    }
    report.curves = std::move(curves);
    write_report(ctx.out_dir, "diverge_report.json", report);
    return report.passed ? kExitOk : kExitCheckFailed;
  });
}

}  // namespace fockbound
