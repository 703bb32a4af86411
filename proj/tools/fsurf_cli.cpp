// fsurf: fit, score and benchmark Fourier control surfaces from the command line.

#include "fsurf/fsurf.hpp"
#include "fsurf/verification.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <string>

namespace {

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  bool defaults = false;
  std::uint64_t seed = 12345;
};

fsurf::ExperimentConfig resolve_config(const CommonArgs& args) {
  fsurf::ExperimentConfig cfg;
  if (!args.config_path.empty() && !args.defaults) cfg = fsurf::load_config(args.config_path);
  if (!args.out_dir.empty()) cfg.output_dir = args.out_dir;
  return cfg;
}

std::pair<int, int> parse_order(const std::string& text) {
  int m = -1;
  int n = -1;
  char extra = 0;
  if (std::sscanf(text.c_str(), "%d,%d%c", &m, &n, &extra) != 2 || m < 0 || n < 0)
    throw CLI::ValidationError("--order", "expected M,N with non-negative integers, got '" + text + "'");
  return {m, n};
}

void print_rows(const fsurf::ExperimentResult& result) {
  for (const auto& row : result.orders) {
    std::cout << "order " << row.M << ',' << row.N;
    if (!row.fit) {
      std::cout << "  FAILED: " << row.error << '\n';
      continue;
    }
    std::cout << std::fixed << std::setprecision(4) << "  J=" << row.fit->objective_history.back()
              << "  iters=" << row.fit->iterations << "  control MAPE=" << row.control_mape.percent
              << "%  state MAPE=" << row.state_mape.percent << "%"
              << (row.fit->converged ? "" : "  (unconverged)") << '\n';
    std::cout.unsetf(std::ios::fixed);
  }
  for (const auto& b : result.benchmark)
    std::cout << "bench " << b.M << ',' << b.N << "  analytic=" << b.analytic_seconds
              << "s  fd=" << b.fd_seconds << "s  speedup=" << b.ratio() << '\n';
}

int run_check(const CommonArgs& args, int instances) {
  std::mt19937_64 rng(args.seed);
  const fsurf::QuadratureRule quad{fsurf::QuadratureScheme::simpson, 0.05};
  double worst_grad = 0.0;
  double worst_flow = 0.0;
  for (int k = 0; k < instances; ++k) {
    const auto inst = fsurf::random_instance(rng);
    worst_grad = std::max(worst_grad, fsurf::gradient_check(inst, quad));
    const auto grid = fsurf::random_grid(rng, inst.grid.M(), inst.grid.N(), 1.0, 4.0, 1.0);
    worst_flow = std::max(worst_flow, fsurf::flow_check(grid, {0.5, 0.25}, inst.train));
  }
  const bool grad_ok = worst_grad <= 1e-6;
  const bool flow_ok = worst_flow <= 1e-5;
  std::cout << (grad_ok ? "PASS" : "FAIL") << "  gradient vs finite differences: max rel err "
            << worst_grad << " (<= 1e-6) over " << instances << " instances\n";
  std::cout << (flow_ok ? "PASS" : "FAIL") << "  closed-form flow vs RK4: sup err " << worst_flow
            << " (<= 1e-5)\n";
  return grad_ok && flow_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier control surfaces for 2x2 skew-symmetric replicator dynamics"};
  app.require_subcommand(1);

  CommonArgs args;
  std::string order_text = "5,5";
  int instances = 20;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", args.config_path, "JSON experiment config")->check(CLI::ExistingFile);
    sub->add_option("--out", args.out_dir, "Output directory (overrides the config)");
    sub->add_option("--seed", args.seed, "Seed for randomized verification instances");
    sub->add_flag("--defaults", args.defaults, "Ignore --config and use the built-in defaults");
  };

  auto* fit = app.add_subcommand("fit", "Fit one Fourier order and score it against the reference");
  add_common(fit);
  fit->add_option("--order", order_text, "Fourier order M,N")->capture_default_str();

  auto* sweep = app.add_subcommand("sweep", "Fit every order in the config, score, and benchmark");
  add_common(sweep);
  auto* run = app.add_subcommand("run", "Alias of sweep");
  add_common(run);

  auto* reference = app.add_subcommand("reference", "Solve only the collocation reference surfaces");
  add_common(reference);

  auto* bench = app.add_subcommand("bench", "Time analytic vs finite-difference gradient descent");
  add_common(bench);
  bench->add_option("--order", order_text, "Single order M,N (default: the config's list)");

  auto* check = app.add_subcommand("check", "Randomized gradient and flow verification");
  add_common(check);
  check->add_option("--instances", instances, "Number of random instances")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (check->parsed()) return run_check(args, instances);

    auto cfg = resolve_config(args);
    fsurf::RunOptions opts;
    if (fit->parsed()) {
      cfg.fourier_orders = {parse_order(order_text)};
      opts.benchmark = false;
    } else if (reference->parsed()) {
      opts.fits = false;
      opts.benchmark = false;
    } else if (bench->parsed()) {
      if (bench->count("--order")) cfg.fourier_orders = {parse_order(order_text)};
      opts.fits = false;
      opts.reference = false;
    }
    const auto result = fsurf::run_experiment(cfg, opts);
    print_rows(result);
    if (reference->parsed())
      std::cout << "reference: " << result.reference.size() << " solutions written to "
                << cfg.output_dir << "/reference.csv\n";
    std::cout << "report: " << cfg.output_dir << "/report.json\n";
    return result.exit_status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
