// Command-line front end: analytic capacity queries, figure-data emission,
// Monte Carlo sweeps and the pattern-storage demo, all reproducible from the
// run manifest written next to every output.
//
// Exit codes: 0 success, 1 runtime/feasibility failure (including interrupt
// with partial output), 2 usage error.

#include <CLI11.hpp>

#include <atomic>
#include <chrono>
#include <csignal>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gardner/capacity.hpp"
#include "gardner/csv.hpp"
#include "gardner/dynamics.hpp"
#include "gardner/manifest.hpp"
#include "gardner/montecarlo.hpp"
#include "gardner/parallel.hpp"
#include "gardner/version.hpp"

namespace {

std::atomic<bool> g_interrupted{false};

void handle_sigint(int) { g_interrupted.store(true); }

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::string manifest_path_for(const std::string& out, const std::string& command) {
  return out.empty() ? command + ".manifest" : out + ".manifest";
}

gardner::EnsembleKind make_ensemble(const std::string& name, double ma) {
  if (name == "gaussian") return gardner::EnsembleKind::gaussian();
  if (name == "bernoulli") return gardner::EnsembleKind::bernoulli_symmetric();
  if (name == "asymmetric") return gardner::EnsembleKind::bernoulli_asymmetric(ma);
  throw std::invalid_argument("unknown ensemble '" + name +
                              "' (expected gaussian|bernoulli|asymmetric)");
}

std::string exactness_name(gardner::Exactness e) {
  return e == gardner::Exactness::Exact ? "exact" : "upper_bound";
}

// ---------------------------------------------------------------------------
// capacity
// ---------------------------------------------------------------------------

struct CapacityArgs {
  double kappa = 0.0;
  std::optional<double> ma;
  std::string out;
};

int run_capacity(const CapacityArgs& args) {
  Timer timer;
  gardner::RunManifest mf;
  mf.set("command", "capacity");
  mf.set("kappa", args.kappa);
  if (args.ma) mf.set("ma", *args.ma);
  if (!args.out.empty()) mf.set("out", args.out);

  gardner::CapacityResult r;
  if (args.ma) {
    r = gardner::alpha_c_correlated(args.kappa, gardner::CorrelationParams(*args.ma));
  } else {
    r = gardner::alpha_c_uncorrelated(args.kappa);
  }

  std::ostringstream record;
  record << "kappa = " << gardner::format_g17(r.kappa) << '\n';
  if (args.ma) record << "ma = " << gardner::format_g17(*args.ma) << '\n';
  record << "f_value = " << gardner::format_g17(r.f_value) << '\n'
         << "alpha_c = " << gardner::format_g17(r.alpha_c) << '\n'
         << "exactness = " << exactness_name(r.exactness) << '\n';
  if (r.v_opt) record << "v_opt = " << gardner::format_g17(*r.v_opt) << '\n';
  if (r.kappa_adj) record << "kappa_adj = " << gardner::format_g17(*r.kappa_adj) << '\n';

  std::cout << record.str();
  if (!args.out.empty()) {
    std::ofstream os(args.out);
    if (!os) throw std::runtime_error("cannot write " + args.out);
    os << record.str();
  }
  mf.set("duration_seconds", timer.seconds());
  mf.write(manifest_path_for(args.out, "capacity"));
  return 0;
}

// ---------------------------------------------------------------------------
// figure-alpha / figure-kadj
// ---------------------------------------------------------------------------

struct FigureArgs {
  double kappa_lo = -2.0;
  double kappa_hi = 3.0;
  double step = 0.05;
  std::vector<double> ma_list;
  std::string out;
};

std::vector<double> kappa_grid(const FigureArgs& args) {
  if (!(args.kappa_lo < args.kappa_hi)) throw std::invalid_argument("requires kappa_lo < kappa_hi");
  if (!(args.step > 0.0)) throw std::invalid_argument("requires step > 0");
  const int count = static_cast<int>(std::floor((args.kappa_hi - args.kappa_lo) / args.step + 1e-9)) + 1;
  std::vector<double> grid(count);
  for (int i = 0; i < count; ++i) grid[i] = args.kappa_lo + i * args.step;
  return grid;
}

void set_figure_manifest(gardner::RunManifest& mf, const FigureArgs& args) {
  mf.set("kappa_lo", args.kappa_lo);
  mf.set("kappa_hi", args.kappa_hi);
  mf.set("step", args.step);
  std::ostringstream mas;
  for (std::size_t i = 0; i < args.ma_list.size(); ++i) {
    if (i) mas << ',';
    mas << gardner::format_g17(args.ma_list[i]);
  }
  mf.set("ma_list", mas.str());
  mf.set("out", args.out);
}

int run_figure_alpha(const FigureArgs& args) {
  Timer timer;
  const auto grid = kappa_grid(args);
  gardner::RunManifest mf;
  mf.set("command", "figure-alpha");
  set_figure_manifest(mf, args);

  std::ofstream os(args.out);
  if (!os) throw std::runtime_error("cannot write " + args.out);
  os << "kappa,ma,alpha_c,exactness,kappa_adj\n";

  auto emit = [&os](double kappa, double ma, const gardner::CapacityResult& r,
                    const std::string& flag) {
    os << gardner::format_g17(kappa) << ',' << gardner::format_g17(ma) << ','
       << gardner::format_g17(r.alpha_c) << ',' << (flag.empty() ? exactness_name(r.exactness) : flag)
       << ',' << gardner::format_g17(r.kappa_adj.value_or(kappa)) << '\n';
  };

  for (double ma : args.ma_list) {
    const gardner::CorrelationParams params(ma);
    std::optional<double> critical;
    if (ma > 0.0) critical = gardner::critical_margin(params, 1e-8);
    bool critical_emitted = false;
    for (double kappa : grid) {
      // The vertical-bar value: flag kappa^(c) as its own row in kappa order.
      if (critical && !critical_emitted && *critical <= kappa) {
        emit(*critical, ma, gardner::alpha_c_correlated(*critical, params), "critical");
        critical_emitted = true;
      }
      emit(kappa, ma, gardner::alpha_c_correlated(kappa, params), "");
    }
    if (critical && !critical_emitted)
      emit(*critical, ma, gardner::alpha_c_correlated(*critical, params), "critical");
  }
  mf.set("duration_seconds", timer.seconds());
  mf.write(manifest_path_for(args.out, "figure-alpha"));
  return 0;
}

int run_figure_kadj(const FigureArgs& args) {
  Timer timer;
  const auto grid = kappa_grid(args);
  gardner::RunManifest mf;
  mf.set("command", "figure-kadj");
  set_figure_manifest(mf, args);

  std::ofstream os(args.out);
  if (!os) throw std::runtime_error("cannot write " + args.out);
  os << "kappa,ma,kappa_adj\n";

  auto emit = [&os](double kappa, double ma, double kadj) {
    os << gardner::format_g17(kappa) << ',' << gardner::format_g17(ma) << ','
       << gardner::format_g17(kadj) << '\n';
  };

  std::ostringstream roots;
  for (double ma : args.ma_list) {
    const gardner::CorrelationParams params(ma);
    std::optional<double> critical;
    if (ma > 0.0) critical = gardner::critical_margin(params, 1e-8);
    bool critical_emitted = false;
    for (double kappa : grid) {
      if (critical && !critical_emitted && *critical <= kappa) {
        emit(*critical, ma, gardner::adjusted_margin(*critical, params));
        critical_emitted = true;
      }
      emit(kappa, ma, gardner::adjusted_margin(kappa, params));
    }
    if (critical && !critical_emitted)
      emit(*critical, ma, gardner::adjusted_margin(*critical, params));
    if (critical)
      roots << "# kappa_c ma=" << gardner::format_g17(ma) << " = "
            << gardner::format_g17(*critical) << '\n';
  }
  os << roots.str();
  mf.set("duration_seconds", timer.seconds());
  mf.write(manifest_path_for(args.out, "figure-kadj"));
  return 0;
}

// ---------------------------------------------------------------------------
// sweep
// ---------------------------------------------------------------------------

struct SweepArgs {
  int n = 200;
  double kappa = 0.5;
  std::string ensemble = "gaussian";
  double ma = 0.0;
  double alpha_lo = 0.5;
  double alpha_hi = 1.5;
  int alpha_steps = 11;
  int trials = 100;
  std::uint64_t seed = 0;
  int workers = 0;
  double solver_tol = 1e-6;
  std::string out = "sweep.csv";
};

std::vector<double> alpha_grid_of(const SweepArgs& args) {
  if (!(args.alpha_lo > 0.0)) throw std::invalid_argument("requires alpha_lo > 0");
  if (!(args.alpha_hi > args.alpha_lo)) throw std::invalid_argument("requires alpha_hi > alpha_lo");
  if (args.alpha_steps < 2) throw std::invalid_argument("requires alpha_steps >= 2");
  std::vector<double> grid(args.alpha_steps);
  for (int i = 0; i < args.alpha_steps; ++i)
    grid[i] = args.alpha_lo + (args.alpha_hi - args.alpha_lo) * i / (args.alpha_steps - 1);
  return grid;
}

void set_sweep_manifest(gardner::RunManifest& mf, const SweepArgs& args) {
  mf.set("n", args.n);
  mf.set("kappa", args.kappa);
  mf.set("ensemble", args.ensemble);
  mf.set("ma", args.ma);
  mf.set("alpha_lo", args.alpha_lo);
  mf.set("alpha_hi", args.alpha_hi);
  mf.set("alpha_steps", args.alpha_steps);
  mf.set("trials", args.trials);
  mf.set("seed", args.seed);
  mf.set("workers", args.workers);
  mf.set("solver_tol", args.solver_tol);
  mf.set("out", args.out);
}

int run_sweep(const SweepArgs& args) {
  Timer timer;
  gardner::RunManifest mf;
  mf.set("command", "sweep");
  set_sweep_manifest(mf, args);

  const auto ensemble = make_ensemble(args.ensemble, args.ma);
  const auto grid = alpha_grid_of(args);

  const auto sweep = gardner::sweep_alpha(args.n, args.kappa, ensemble, grid, args.trials,
                                          args.seed, args.workers, args.solver_tol,
                                          &g_interrupted);

  std::ofstream os(args.out);
  if (!os) throw std::runtime_error("cannot write " + args.out);
  gardner::write_sweep_csv(os, sweep);
  os.close();

  const bool interrupted = g_interrupted.load();
  mf.set("interrupted", std::string(interrupted ? "true" : "false"));
  mf.set("duration_seconds", timer.seconds());
  mf.write(manifest_path_for(args.out, "sweep"));
  if (interrupted) {
    std::cerr << "interrupted: partial sweep written to " << args.out << '\n';
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// alpha-hat
// ---------------------------------------------------------------------------

struct AlphaHatArgs {
  int n = 200;
  double kappa = 0.5;
  std::string ensemble = "gaussian";
  double ma = 0.0;
  int trials = 100;
  std::uint64_t seed = 0;
  int workers = 0;
  double solver_tol = 1e-6;
  std::string out = "alpha_hat.txt";
};

int run_alpha_hat(const AlphaHatArgs& args) {
  Timer timer;
  gardner::RunManifest mf;
  mf.set("command", "alpha-hat");
  mf.set("n", args.n);
  mf.set("kappa", args.kappa);
  mf.set("ensemble", args.ensemble);
  mf.set("ma", args.ma);
  mf.set("trials", args.trials);
  mf.set("seed", args.seed);
  mf.set("workers", args.workers);
  mf.set("solver_tol", args.solver_tol);
  mf.set("out", args.out);

  const auto ensemble = make_ensemble(args.ensemble, args.ma);
  const auto result = gardner::estimate_alpha_hat(args.n, args.kappa, ensemble, args.trials,
                                                  args.seed, args.workers, args.solver_tol,
                                                  &g_interrupted);

  std::ostringstream record;
  record << "alpha_hat = " << gardner::format_g17(result.alpha_hat) << '\n'
         << "ci = " << gardner::format_g17(result.ci) << '\n'
         << "trials = " << args.trials << '\n';
  record << "m_star = ";
  for (std::size_t i = 0; i < result.m_star.size(); ++i) {
    if (i) record << ',';
    record << result.m_star[i];
  }
  record << '\n';

  std::cout << record.str();
  std::ofstream os(args.out);
  if (!os) throw std::runtime_error("cannot write " + args.out);
  os << record.str();
  os.close();

  const bool interrupted = g_interrupted.load();
  mf.set("interrupted", std::string(interrupted ? "true" : "false"));
  mf.set("duration_seconds", timer.seconds());
  mf.write(manifest_path_for(args.out, "alpha-hat"));
  return interrupted ? 1 : 0;
}

// ---------------------------------------------------------------------------
// dynamics-demo
// ---------------------------------------------------------------------------

struct DynamicsArgs {
  int n = 60;
  int m = 12;
  double kappa = 0.1;
  std::uint64_t seed = 0;
  int steps = 10;
  std::string out;
};

int run_dynamics_demo(const DynamicsArgs& args) {
  Timer timer;
  gardner::RunManifest mf;
  mf.set("command", "dynamics-demo");
  mf.set("n", args.n);
  mf.set("m", args.m);
  mf.set("kappa", args.kappa);
  mf.set("seed", args.seed);
  mf.set("steps", args.steps);
  if (!args.out.empty()) mf.set("out", args.out);

  gardner::TrialConfig cfg;
  cfg.n = args.n;
  cfg.alpha = static_cast<double>(args.m) / args.n;
  cfg.kappa = args.kappa;
  cfg.ensemble = gardner::EnsembleKind::bernoulli_symmetric();
  cfg.seed = args.seed;
  const gardner::PatternSet patterns(gardner::sample_matrix(cfg).rows());

  std::ostringstream report;
  report << "n = " << args.n << '\n' << "m = " << args.m << '\n'
         << "kappa = " << gardner::format_g17(args.kappa) << '\n';

  try {
    const auto stored = gardner::store_patterns(patterns, args.kappa, 1e-9);
    const auto& margins = stored.per_site_margin;
    report << "stored = true\n"
           << "margin_min = " << gardner::format_g17(margins.minCoeff()) << '\n'
           << "margin_mean = " << gardner::format_g17(margins.mean()) << '\n'
           << "margin_max = " << gardner::format_g17(margins.maxCoeff()) << '\n';

    const auto verify = gardner::verify_fixed_points(patterns, stored.interactions, args.kappa);
    report << "fixed_point_violations = " << verify.violations << '\n'
           << "fixed_points_ok = " << (verify.all_satisfied() ? "true" : "false") << '\n';

    // One-bit-flip recovery, exhaustive over (pattern, site).
    int recovered = 0, total = 0;
    for (int i = 0; i < args.m; ++i) {
      for (int k = 0; k < args.n; ++k) {
        Eigen::VectorXd state = patterns.patterns().row(i).transpose();
        state(k) = -state(k);
        ++total;
        for (int s = 0; s < args.steps; ++s) {
          state = gardner::step_dynamics(state, stored.interactions);
          if ((state.array() == patterns.patterns().row(i).transpose().array()).all()) {
            ++recovered;
            break;
          }
        }
      }
    }
    report << "flip_trials = " << total << '\n'
           << "flip_recovered = " << recovered << '\n';
  } catch (const gardner::StorageFailed& failure) {
    report << "stored = false\n"
           << "failed_site = " << failure.site() << '\n'
           << "failed_margin_upper = "
           << gardner::format_g17(failure.certificate().margin_upper) << '\n';
    std::cout << report.str();
    if (!args.out.empty()) {
      std::ofstream os(args.out);
      os << report.str();
    }
    mf.set("duration_seconds", timer.seconds());
    mf.write(manifest_path_for(args.out, "dynamics-demo"));
    std::cerr << failure.what() << '\n';
    return 1;
  }

  std::cout << report.str();
  if (!args.out.empty()) {
    std::ofstream os(args.out);
    if (!os) throw std::runtime_error("cannot write " + args.out);
    os << report.str();
  }
  mf.set("duration_seconds", timer.seconds());
  mf.write(manifest_path_for(args.out, "dynamics-demo"));
  return 0;
}

// ---------------------------------------------------------------------------
// rerun
// ---------------------------------------------------------------------------

int run_from_manifest(const std::string& path, int workers_override,
                      const std::string& out_override) {
  const auto mf = gardner::RunManifest::read(path);
  const std::string command = mf.get("command");

  if (command == "capacity") {
    CapacityArgs a;
    a.kappa = mf.get_double("kappa");
    if (mf.has("ma")) a.ma = mf.get_double("ma");
    a.out = out_override.empty() ? mf.get_or("out", "") : out_override;
    return run_capacity(a);
  }
  if (command == "figure-alpha" || command == "figure-kadj") {
    FigureArgs a;
    a.kappa_lo = mf.get_double("kappa_lo");
    a.kappa_hi = mf.get_double("kappa_hi");
    a.step = mf.get_double("step");
    std::stringstream ss(mf.get("ma_list"));
    std::string tok;
    while (std::getline(ss, tok, ',')) a.ma_list.push_back(std::stod(tok));
    a.out = out_override.empty() ? mf.get("out") : out_override;
    return command == "figure-alpha" ? run_figure_alpha(a) : run_figure_kadj(a);
  }
  if (command == "sweep") {
    SweepArgs a;
    a.n = mf.get_int("n");
    a.kappa = mf.get_double("kappa");
    a.ensemble = mf.get("ensemble");
    a.ma = mf.get_double("ma");
    a.alpha_lo = mf.get_double("alpha_lo");
    a.alpha_hi = mf.get_double("alpha_hi");
    a.alpha_steps = mf.get_int("alpha_steps");
    a.trials = mf.get_int("trials");
    a.seed = mf.get_u64("seed");
    a.workers = workers_override > 0 ? workers_override : mf.get_int("workers");
    a.solver_tol = mf.get_double("solver_tol");
    a.out = out_override.empty() ? mf.get("out") : out_override;
    return run_sweep(a);
  }
  if (command == "alpha-hat") {
    AlphaHatArgs a;
    a.n = mf.get_int("n");
    a.kappa = mf.get_double("kappa");
    a.ensemble = mf.get("ensemble");
    a.ma = mf.get_double("ma");
    a.trials = mf.get_int("trials");
    a.seed = mf.get_u64("seed");
    a.workers = workers_override > 0 ? workers_override : mf.get_int("workers");
    a.solver_tol = mf.get_double("solver_tol");
    a.out = out_override.empty() ? mf.get("out") : out_override;
    return run_alpha_hat(a);
  }
  if (command == "dynamics-demo") {
    DynamicsArgs a;
    a.n = mf.get_int("n");
    a.m = mf.get_int("m");
    a.kappa = mf.get_double("kappa");
    a.seed = mf.get_u64("seed");
    a.steps = mf.get_int("steps");
    a.out = out_override.empty() ? mf.get_or("out", "") : out_override;
    return run_dynamics_demo(a);
  }
  throw std::invalid_argument("manifest has unknown command '" + command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, handle_sigint);

  CLI::App app{"Spherical perceptron storage capacity: analytic curves, certified "
               "margin solving, Monte Carlo phase-transition sweeps"};
  app.require_subcommand(1);

  CapacityArgs cap;
  auto* cmd_cap = app.add_subcommand("capacity", "Analytic storage capacity at one point");
  cmd_cap->add_option("--kappa", cap.kappa, "margin parameter")->required();
  double cap_ma = 0.0;
  auto* cap_ma_opt = cmd_cap->add_option("--ma", cap_ma, "pattern bias (correlated case)");
  cmd_cap->add_option("--out", cap.out, "write the record to this file");

  FigureArgs figa;
  figa.ma_list = {0.0, 0.5, 0.8};
  figa.out = "figure_alpha.csv";
  auto* cmd_figa = app.add_subcommand("figure-alpha", "alpha_c vs kappa curves (CSV)");
  cmd_figa->add_option("--kappa-lo", figa.kappa_lo, "grid start");
  cmd_figa->add_option("--kappa-hi", figa.kappa_hi, "grid end");
  cmd_figa->add_option("--step", figa.step, "grid step");
  cmd_figa->add_option("--ma", figa.ma_list, "bias values (repeatable)");
  cmd_figa->add_option("--out", figa.out, "output CSV path");

  FigureArgs figk;
  figk.ma_list = {0.5, 0.8};
  figk.out = "figure_kadj.csv";
  auto* cmd_figk = app.add_subcommand("figure-kadj", "adjusted margin vs kappa (CSV)");
  cmd_figk->add_option("--kappa-lo", figk.kappa_lo, "grid start");
  cmd_figk->add_option("--kappa-hi", figk.kappa_hi, "grid end");
  cmd_figk->add_option("--step", figk.step, "grid step");
  cmd_figk->add_option("--ma", figk.ma_list, "bias values (repeatable)");
  cmd_figk->add_option("--out", figk.out, "output CSV path");

  SweepArgs sw;
  auto* cmd_sw = app.add_subcommand("sweep", "Monte Carlo feasibility sweep over alpha");
  cmd_sw->add_option("--n", sw.n, "pattern dimension")->required();
  cmd_sw->add_option("--kappa", sw.kappa, "margin parameter")->required();
  cmd_sw->add_option("--ensemble", sw.ensemble, "gaussian|bernoulli|asymmetric");
  cmd_sw->add_option("--ma", sw.ma, "bias for the asymmetric ensemble");
  cmd_sw->add_option("--alpha-lo", sw.alpha_lo, "grid start")->required();
  cmd_sw->add_option("--alpha-hi", sw.alpha_hi, "grid end")->required();
  cmd_sw->add_option("--alpha-steps", sw.alpha_steps, "number of grid points");
  cmd_sw->add_option("--trials", sw.trials, "coupled trials per point")->required();
  cmd_sw->add_option("--seed", sw.seed, "master seed")->required();
  cmd_sw->add_option("--workers", sw.workers, "worker threads (0 = GARDNER_WORKERS or cores)");
  cmd_sw->add_option("--tol", sw.solver_tol, "solver certificate tolerance");
  cmd_sw->add_option("--out", sw.out, "output CSV path");

  AlphaHatArgs ah;
  auto* cmd_ah = app.add_subcommand("alpha-hat", "Empirical capacity estimate");
  cmd_ah->add_option("--n", ah.n, "pattern dimension")->required();
  cmd_ah->add_option("--kappa", ah.kappa, "margin parameter")->required();
  cmd_ah->add_option("--ensemble", ah.ensemble, "gaussian|bernoulli|asymmetric");
  cmd_ah->add_option("--ma", ah.ma, "bias for the asymmetric ensemble");
  cmd_ah->add_option("--trials", ah.trials, "independent trials")->required();
  cmd_ah->add_option("--seed", ah.seed, "master seed")->required();
  cmd_ah->add_option("--workers", ah.workers, "worker threads");
  cmd_ah->add_option("--tol", ah.solver_tol, "solver certificate tolerance");
  cmd_ah->add_option("--out", ah.out, "output record path");

  DynamicsArgs dyn;
  auto* cmd_dyn = app.add_subcommand("dynamics-demo", "Store random patterns, verify fixed points");
  cmd_dyn->add_option("--n", dyn.n, "sites")->required();
  cmd_dyn->add_option("--m", dyn.m, "patterns")->required();
  cmd_dyn->add_option("--kappa", dyn.kappa, "storage margin")->required();
  cmd_dyn->add_option("--seed", dyn.seed, "pattern seed")->required();
  cmd_dyn->add_option("--steps", dyn.steps, "max dynamics steps per recovery trial");
  cmd_dyn->add_option("--out", dyn.out, "write the report to this file");

  std::string rerun_path;
  int rerun_workers = 0;
  std::string rerun_out;
  auto* cmd_rerun = app.add_subcommand("rerun", "Re-execute a command from its manifest");
  cmd_rerun->add_option("manifest", rerun_path, "manifest file")->required();
  cmd_rerun->add_option("--workers", rerun_workers, "override worker count");
  cmd_rerun->add_option("--out", rerun_out, "override output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (cmd_cap->parsed()) {
      if (cap_ma_opt->count() > 0) cap.ma = cap_ma;
      return run_capacity(cap);
    }
    if (cmd_figa->parsed()) return run_figure_alpha(figa);
    if (cmd_figk->parsed()) return run_figure_kadj(figk);
    if (cmd_sw->parsed()) return run_sweep(sw);
    if (cmd_ah->parsed()) return run_alpha_hat(ah);
    if (cmd_dyn->parsed()) return run_dynamics_demo(dyn);
    if (cmd_rerun->parsed()) return run_from_manifest(rerun_path, rerun_workers, rerun_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
