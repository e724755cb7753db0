#include <CLI11.hpp>

#include "clockrc/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"dilute clock model: random-cluster representation, domination thresholds, "
               "exact small-graph verification, percolation and Gibbs sampling"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML config file (flags take precedence)");

  clockrc::RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "64-bit RNG seed");
    sub->add_option("--threads", cfg.threads, "worker threads (0 = logical cores)")
        ->envname("CLOCKRC_THREADS");
    sub->add_option("--out", cfg.out, "output file (default stdout)");
  };

  auto* wt = app.add_subcommand("weight-table", "dump the level table (t, r, K) as JSON");
  wt->add_option("--q", cfg.q, "number of spins")->required();
  wt->add_option("--beta", cfg.beta, "inverse temperature")->required();
  add_common(wt);

  auto* curve = app.add_subcommand("phi-curve", "CSV of the threshold function varphi(beta)");
  curve->add_option("--q", cfg.q)->required();
  curve->add_option("--beta-min", cfg.beta_min);
  curve->add_option("--beta-max", cfg.beta_max);
  curve->add_option("--points", cfg.points);
  add_common(curve);

  auto* b0 = app.add_subcommand("beta0", "inverse threshold beta0 = varphi^{-1}(rho)");
  b0->add_option("--q", cfg.q)->required();
  b0->add_option("--rho", cfg.rho)->required();
  add_common(b0);

  auto* bound = app.add_subcommand("beta0-bound", "closed-form upper bound for beta0(pc/p)");
  bound->add_option("--q", cfg.q)->required();
  bound->add_option("--d", cfg.d)->required();
  bound->add_option("--p", cfg.p)->required();
  bound->add_option("--pc", cfg.pc, "percolation threshold (default 1/2 when d = 2)");
  add_common(bound);

  auto* oracle = app.add_subcommand("oracle-verify",
                                    "exact verification table over the corpus of small graphs");
  oracle->add_option("--corpus", cfg.corpus, "'default' or a manifest JSON path");
  add_common(oracle);

  auto* injection = app.add_subcommand("injection-verify",
                                       "constructive injection sweep over the corpus");
  injection->add_option("--corpus", cfg.corpus, "'default' or a manifest JSON path");
  injection->add_option("--dump-dir", cfg.dump_dir, "directory for failure dumps (JSON)");
  add_common(injection);

  auto* perc = app.add_subcommand("percolate", "Bernoulli bond percolation estimates");
  perc->add_option("--p", cfg.p);
  perc->add_option("--n", cfg.n);
  perc->add_option("--d", cfg.d);
  perc->add_option("--samples", cfg.samples);
  perc->add_flag("--pc-estimate", cfg.pc_estimate, "estimate pc from crossing probabilities");
  perc->add_option("--n-list", cfg.n_list, "box sizes for the pc extrapolation");
  add_common(perc);

  auto* sim = app.add_subcommand("simulate", "heat-bath chain and coexistence report");
  sim->add_option("--q", cfg.q)->required();
  sim->add_option("--beta", cfg.beta)->required();
  sim->add_option("--p", cfg.p);
  sim->add_option("--n", cfg.n);
  sim->add_option("--d", cfg.d);
  sim->add_option("--sweeps", cfg.sweeps);
  sim->add_option("--burnin", cfg.burnin);
  sim->add_option("--quench-samples", cfg.quench_samples, "disorder replicas (p < 1)");
  add_common(sim);

  CLI11_PARSE(app, argc, argv);

  cfg.subcommand = app.get_subcommands().front()->get_name();
  return clockrc::run(cfg);
}
