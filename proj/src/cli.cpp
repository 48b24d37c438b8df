#include "distgame/cli.hpp"

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "distgame/io.hpp"
#include "distgame/random.hpp"
#include "distgame/verify.hpp"
#include "distgame/version.hpp"

namespace distgame {

namespace {

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    const std::string token = text.substr(pos, comma - pos);
    std::size_t used = 0;
    values.push_back(std::stod(token, &used));
    if (used != token.size()) {
      throw std::invalid_argument("malformed number '" + token + "'");
    }
    pos = comma + 1;
  }
  return values;
}

std::vector<std::int64_t> parse_count_list(const std::string& text) {
  std::vector<std::int64_t> counts;
  for (const double v : parse_double_list(text)) {
    counts.push_back(static_cast<std::int64_t>(v));
  }
  return counts;
}

void print_reports(const std::vector<VerificationReport>& reports) {
  for (const auto& r : reports) {
    std::cout << (r.pass ? "[ok]   " : "[FAIL] ") << r.suite
              << "  max_abs=" << io::format_double(r.max_abs_diff)
              << "  max_rel=" << io::format_double(r.max_rel_diff)
              << "  tol=" << io::format_double(r.tolerance) << "\n";
  }
}

struct VerifyOpts {
  int trials = 100;
  std::int64_t k_min = 2;
  std::int64_t k_max = 50;
  std::uint64_t seed = 0;
  std::string out;
};

void add_verify_flags(CLI::App* cmd, VerifyOpts& opts) {
  cmd->add_option("--trials", opts.trials, "Number of random cases per sub-suite")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--k-min", opts.k_min, "Smallest support size")->check(CLI::Range(2, 100000));
  cmd->add_option("--k-max", opts.k_max, "Largest support size")->check(CLI::Range(2, 100000));
  cmd->add_option("--seed", opts.seed, "Random stream seed");
}

int emit_verify(const std::string& command, const VerifyOpts& opts,
                const std::vector<VerificationReport>& reports) {
  io::write_reports(reports, opts.out);
  io::RunManifest manifest;
  manifest.command = command;
  manifest.parameters = {{"trials", std::to_string(opts.trials)},
                         {"k_min", std::to_string(opts.k_min)},
                         {"k_max", std::to_string(opts.k_max)},
                         {"seed", std::to_string(opts.seed)},
                         {"out", opts.out}};
  manifest.seed = opts.seed;
  manifest.tool_version = kVersion;
  manifest.outputs = {opts.out};
  io::write_manifest(manifest, io::manifest_path_for(opts.out));
  print_reports(reports);
  std::cout << "report written to " << opts.out << "\n";
  return all_pass(reports) ? 0 : 1;
}

SuiteOptions to_suite_options(const VerifyOpts& opts) {
  SuiteOptions suite;
  suite.trials = opts.trials;
  suite.k_min = static_cast<Index>(opts.k_min);
  suite.k_max = static_cast<Index>(opts.k_max);
  suite.seed = opts.seed;
  return suite;
}

struct CurveOpts {
  double a_min = -5.0;
  double a_max = 5.0;
  int points = 101;
  std::string out = "cost_curve.csv";
};

int run_cost_curve(const CurveOpts& opts) {
  const auto rows = cost_curve(opts.a_min, opts.a_max, opts.points);
  std::string csv = "a,f_minimax,f_heuristic,f_mle\n";
  for (const auto& row : rows) {
    csv += io::format_double(row.a) + "," + io::format_double(row.f_minimax) + "," +
           io::format_double(row.f_heuristic) + "," + io::format_double(row.f_mle) + "\n";
  }
  io::atomic_write_text(opts.out, csv);

  io::RunManifest manifest;
  manifest.command = "cost-curve";
  manifest.parameters = {{"min", io::format_double(opts.a_min)},
                         {"max", io::format_double(opts.a_max)},
                         {"points", std::to_string(opts.points)},
                         {"out", opts.out}};
  manifest.tool_version = kVersion;
  manifest.outputs = {opts.out};
  io::write_manifest(manifest, io::manifest_path_for(opts.out));
  std::cout << rows.size() << " rows written to " << opts.out << "\n";
  return 0;
}

struct DynamicsOpts {
  std::string game = "tabular";
  std::string mode = "simultaneous";
  std::string cost = "minimax";
  double eta = 0.1;
  double eta_g = -1.0;  // defaults to --eta when unset
  double eta_c = -1.0;
  int disc_steps = 1;
  int iters = 1000;
  std::int64_t k = 2;
  std::string pd;
  double init_u = 1.0;
  double init_v = 0.0;
  double tol = kDefaultConvergenceTol;
  std::uint64_t seed = 0;
  std::string out = "dynamics_trajectory.csv";
  std::string report = "dynamics_report.json";
};

int run_dynamics(const DynamicsOpts& opts) {
  const auto mode = parse_update_mode(opts.mode);
  if (!mode) {
    throw std::invalid_argument("unknown mode '" + opts.mode + "'");
  }
  const auto kind = parse_cost_kind(opts.cost);
  if (!kind) {
    throw std::invalid_argument("unknown cost variant '" + opts.cost + "'");
  }

  GameTrajectory traj;
  if (opts.game == "bilinear") {
    DynamicsConfig cfg(ParamVector{opts.init_u}, Discriminator{opts.init_v}, {*kind});
    cfg.mode = *mode;
    cfg.eta_g = opts.eta_g > 0.0 ? opts.eta_g : opts.eta;
    cfg.eta_c = opts.eta_c > 0.0 ? opts.eta_c : opts.eta;
    cfg.disc_steps_per_gen_step = opts.disc_steps;
    cfg.iterations = opts.iters;
    traj = simulate(BilinearGame(), cfg);
  } else if (opts.game == "tabular") {
    DistributionTable p_d = [&] {
      if (!opts.pd.empty()) {
        const std::vector<double> probs = parse_double_list(opts.pd);
        return DistributionTable(
            Eigen::Map<const Vector>(probs.data(), static_cast<Index>(probs.size())));
      }
      UniformStream stream(opts.seed);
      return random_distribution(stream, static_cast<Index>(opts.k));
    }();
    DynamicsConfig cfg(ParamVector::zero(p_d.size()), Discriminator::zero(p_d.size()), {*kind});
    cfg.mode = *mode;
    cfg.eta_g = opts.eta_g > 0.0 ? opts.eta_g : opts.eta;
    cfg.eta_c = opts.eta_c > 0.0 ? opts.eta_c : opts.eta;
    cfg.disc_steps_per_gen_step = opts.disc_steps;
    cfg.iterations = opts.iters;
    traj = simulate_dynamics(p_d, cfg);
  } else {
    throw std::invalid_argument("unknown game '" + opts.game + "' (tabular or bilinear)");
  }

  std::string csv = "iteration,value,grad_norm_g,grad_norm_c,param_norm_g\n";
  for (const auto& snap : traj.snapshots) {
    csv += std::to_string(snap.iteration) + "," + io::format_double(snap.value) + "," +
           io::format_double(snap.grad_norm_g) + "," + io::format_double(snap.grad_norm_c) + "," +
           io::format_double(snap.theta_g.norm()) + "\n";
  }
  io::atomic_write_text(opts.out, csv);

  const DynamicsReport report = diagnose_trajectory(traj, opts.tol);
  nlohmann::ordered_json j;
  j["game"] = opts.game;
  j["verdict"] = to_string(report.verdict);
  j["final_value"] = report.final_value;
  j["final_grad_norm_g"] = report.final_grad_norms.first;
  j["final_grad_norm_c"] = report.final_grad_norms.second;
  j["oscillation_score"] = report.oscillation_score;
  j["iterations_recorded"] = traj.snapshots.size();
  j["nonfinite_abort"] = traj.nonfinite_abort;
  io::atomic_write_text(opts.report, j.dump(2) + "\n");

  io::RunManifest manifest;
  manifest.command = "dynamics";
  manifest.parameters = {{"game", opts.game},
                         {"mode", opts.mode},
                         {"cost", opts.cost},
                         {"eta_g", io::format_double(opts.eta_g > 0.0 ? opts.eta_g : opts.eta)},
                         {"eta_c", io::format_double(opts.eta_c > 0.0 ? opts.eta_c : opts.eta)},
                         {"disc_steps", std::to_string(opts.disc_steps)},
                         {"iters", std::to_string(opts.iters)},
                         {"k", std::to_string(opts.k)},
                         {"pd", opts.pd},
                         {"init_u", io::format_double(opts.init_u)},
                         {"init_v", io::format_double(opts.init_v)},
                         {"tol", io::format_double(opts.tol)},
                         {"seed", std::to_string(opts.seed)},
                         {"out", opts.out},
                         {"report", opts.report}};
  manifest.seed = opts.seed;
  manifest.tool_version = kVersion;
  manifest.outputs = {opts.out, opts.report};
  io::write_manifest(manifest, io::manifest_path_for(opts.out));

  std::cout << "verdict " << to_string(report.verdict) << " after "
            << traj.snapshots.back().iteration << " iterations; trajectory in " << opts.out
            << "\n";
  return 0;
}

struct VarianceOpts {
  std::string n_list = "100,1000,10000,100000";
  std::uint64_t seed = 0;
  std::string out = "variance_study.csv";
};

int run_variance(const VarianceOpts& opts) {
  const std::vector<VarianceStudyRow> rows = variance_study(parse_count_list(opts.n_list), opts.seed);
  std::string csv = "variant,n_samples,per_sample_variance,grad_error_norm\n";
  for (const auto& row : rows) {
    csv += std::string(to_string(row.variant)) + "," + std::to_string(row.n_samples) + "," +
           io::format_double(row.per_sample_variance) + "," +
           io::format_double(row.grad_error_norm) + "\n";
  }
  io::atomic_write_text(opts.out, csv);

  io::RunManifest manifest;
  manifest.command = "variance";
  manifest.parameters = {{"n", opts.n_list}, {"seed", std::to_string(opts.seed)}, {"out", opts.out}};
  manifest.seed = opts.seed;
  manifest.tool_version = kVersion;
  manifest.outputs = {opts.out};
  io::write_manifest(manifest, io::manifest_path_for(opts.out));
  std::cout << rows.size() << " rows written to " << opts.out << "\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Exact finite-support testbed for contrastive estimation and "
               "adversarial game dynamics"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  VerifyOpts sce_opts;
  sce_opts.out = "verify_sce_report.json";
  CLI::App* sce = app.add_subcommand(
      "verify-sce", "Check the self-contrastive gradient identity, constant objective "
                    "and vanishing term on random instances");
  add_verify_flags(sce, sce_opts);
  sce->add_option("--out", sce_opts.out, "Report path");

  VerifyOpts gan_opts;
  gan_opts.out = "verify_gan_mle_report.json";
  CLI::App* gan = app.add_subcommand(
      "verify-gan-mle", "Check maximum-likelihood recovery, offset invariance and optimal "
                        "discriminator stationarity");
  add_verify_flags(gan, gan_opts);
  gan->add_option("--out", gan_opts.out, "Report path");

  CurveOpts curve_opts;
  CLI::App* curve = app.add_subcommand("cost-curve",
                                       "Tabulate the three generator cost variants on a grid");
  curve->add_option("--min", curve_opts.a_min, "Grid start");
  curve->add_option("--max", curve_opts.a_max, "Grid end");
  curve->add_option("--points", curve_opts.points, "Grid size")->check(CLI::Range(2, 10000000));
  curve->add_option("--out", curve_opts.out, "CSV path");

  DynamicsOpts dyn_opts;
  CLI::App* dyn = app.add_subcommand("dynamics", "Simulate two-player gradient dynamics");
  dyn->add_option("--game", dyn_opts.game, "tabular or bilinear");
  dyn->add_option("--mode", dyn_opts.mode, "simultaneous or alternating");
  dyn->add_option("--cost", dyn_opts.cost, "minimax, heuristic or maximum_likelihood");
  dyn->add_option("--eta", dyn_opts.eta, "Step size for both players");
  dyn->add_option("--eta-g", dyn_opts.eta_g, "Generator step size (overrides --eta)");
  dyn->add_option("--eta-c", dyn_opts.eta_c, "Discriminator step size (overrides --eta)");
  dyn->add_option("--disc-steps", dyn_opts.disc_steps,
                  "Discriminator steps per generator step (alternating mode)");
  dyn->add_option("--iters", dyn_opts.iters, "Iterations")->check(CLI::PositiveNumber);
  dyn->add_option("--k", dyn_opts.k, "Support size for the tabular game")
      ->check(CLI::Range(2, 100000));
  dyn->add_option("--pd", dyn_opts.pd, "Comma-separated data table (tabular game)");
  dyn->add_option("--init-u", dyn_opts.init_u, "Bilinear generator initial value");
  dyn->add_option("--init-v", dyn_opts.init_v, "Bilinear discriminator initial value");
  dyn->add_option("--tol", dyn_opts.tol, "Convergence tolerance for the verdict");
  dyn->add_option("--seed", dyn_opts.seed, "Seed for the random data table");
  dyn->add_option("--out", dyn_opts.out, "Trajectory CSV path");
  dyn->add_option("--report", dyn_opts.report, "Verdict report path");

  VarianceOpts var_opts;
  CLI::App* var = app.add_subcommand(
      "variance", "Monte-Carlo gradient variance study on the concentrated-data scenario");
  var->add_option("--n", var_opts.n_list, "Comma-separated sample counts");
  var->add_option("--seed", var_opts.seed, "Sampling seed");
  var->add_option("--out", var_opts.out, "CSV path");

  VerifyOpts all_opts;
  all_opts.out = "all_checks_report.json";
  CLI::App* all = app.add_subcommand("all-checks", "Run every verification suite");
  add_verify_flags(all, all_opts);
  all->add_option("--out", all_opts.out, "Report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*sce) {
      return emit_verify("verify-sce", sce_opts, verify_sce(to_suite_options(sce_opts)));
    }
    if (*gan) {
      return emit_verify("verify-gan-mle", gan_opts, verify_gan_mle(to_suite_options(gan_opts)));
    }
    if (*curve) {
      return run_cost_curve(curve_opts);
    }
    if (*dyn) {
      return run_dynamics(dyn_opts);
    }
    if (*var) {
      return run_variance(var_opts);
    }
    if (*all) {
      std::vector<VerificationReport> reports = verify_sce(to_suite_options(all_opts));
      const auto gan_reports = verify_gan_mle(to_suite_options(all_opts));
      reports.insert(reports.end(), gan_reports.begin(), gan_reports.end());
      const auto dyn_reports = verify_dynamics_sanity(all_opts.seed);
      reports.insert(reports.end(), dyn_reports.begin(), dyn_reports.end());
      const auto var_reports = verify_variance_ordering(all_opts.seed);
      reports.insert(reports.end(), var_reports.begin(), var_reports.end());
      return emit_verify("all-checks", all_opts, reports);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("distgame");
  for (const auto& arg : args) {
    argv.push_back(arg.c_str());
  }
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace distgame
