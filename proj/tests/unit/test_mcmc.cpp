#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "clockrc/exact.hpp"
#include "clockrc/mcmc.hpp"
#include "clockrc/stats.hpp"

using namespace clockrc;

namespace {

Graph single_edge() { return make_graph(2, {0}, {{0, 1}}); }

std::vector<double> exact_probe_marginal(const ExactDistributions& d, Vertex x) {
  std::vector<double> marginal(static_cast<std::size_t>(d.wt.q), 0.0);
  for (std::uint64_t s = 0; s < d.num_sigma; ++s)
    marginal[d.decode_sigma(s).spin[static_cast<std::size_t>(x)]] += d.mu[s];
  return marginal;
}

}  // namespace

TEST_SUITE_BEGIN("mcmc");

TEST_CASE("boundary stays pinned through sweeps") {
  Graph g = build_box_graph(2, 2);
  WeightTable wt = build_weight_table(3, 1.0);
  ChainState state(g, Rng(5));
  for (int s = 0; s < 50; ++s) {
    heat_bath_sweep(state, g, wt);
    for (Vertex u : g.boundary) CHECK(state.sigma.spin[static_cast<std::size_t>(u)] == 0);
  }
  CHECK(state.sweep == 50);
}

TEST_CASE("near-zero beta gives iid uniform spins after one sweep") {
  Graph g = build_box_graph(2, 1);  // 5 free sites on a line
  WeightTable wt = build_weight_table(4, 1e-9);
  ChainState state(g, Rng(8));
  std::vector<std::uint64_t> counts(4, 0);
  for (int s = 0; s < 20000; ++s) {
    heat_bath_sweep(state, g, wt);
    for (Vertex v = 0; v < g.num_vertices; ++v) {
      if (!g.is_boundary(v)) ++counts[state.sigma.spin[static_cast<std::size_t>(v)]];
    }
  }
  auto res = chi2_gof(counts, {0.25, 0.25, 0.25, 0.25});
  CHECK(res.p_value >= 0.01);
}

TEST_CASE("single free vertex: sweeps are exact mu samples") {
  Graph g = single_edge();
  WeightTable wt = build_weight_table(2, 1.0);
  ExactDistributions d = enumerate_all(g, wt);
  ChainRunResult run = run_chain(g, wt, 1, 100000, 0, 1, Rng(123));
  auto res = chi2_gof(run.probe_histogram, exact_probe_marginal(d, 1));
  CHECK(res.p_value >= 0.01);
}

TEST_CASE("probe marginal matches the oracle on the 1-d box n=2, q=2") {
  Graph g = build_box_graph(2, 1);
  WeightTable wt = build_weight_table(2, 1.0);
  ExactDistributions d = enumerate_all(g, wt);
  Vertex probe = box_center_vertex(g);
  ChainRunResult run = run_chain(g, wt, probe, 100000, 1000, 5, Rng(2));
  auto res = chi2_gof(run.probe_histogram, exact_probe_marginal(d, probe));
  CHECK(res.p_value >= 0.01);
}

TEST_CASE("derived-omega connection frequency matches exact phi") {
  Graph g = single_edge();

  SUBCASE("beta = 1: phi(x<->U) = 0.7616") {
    WeightTable wt = build_weight_table(2, 1.0);
    ChainRunResult run = run_chain(g, wt, 1, 100000, 100, 1, Rng(3));
    const double e2 = std::exp(-2.0);
    double expected = (1.0 - e2) / (1.0 + e2);
    double sigma = std::sqrt(expected * (1.0 - expected) / static_cast<double>(run.samples));
    CHECK(std::abs(run.connection_frequency() - expected) <= 4.0 * sigma);
  }

  SUBCASE("beta = 0.01: frequency below 0.05") {
    WeightTable wt = build_weight_table(2, 0.01);
    ChainRunResult run = run_chain(g, wt, 1, 50000, 100, 1, Rng(4));
    CHECK(run.connection_frequency() < 0.05);
  }

  SUBCASE("probe on the boundary is always connected") {
    WeightTable wt = build_weight_table(2, 1.0);
    ChainRunResult run = run_chain(g, wt, 0, 2000, 10, 1, Rng(5));
    CHECK(run.connection_frequency() == 1.0);
  }
}

TEST_CASE("run_chain is deterministic in the seed") {
  Graph g = build_box_graph(1, 2);
  WeightTable wt = build_weight_table(3, 1.2);
  ChainRunResult a = run_chain(g, wt, box_center_vertex(g), 2000, 100, 10, Rng::stream(7, 1));
  ChainRunResult b = run_chain(g, wt, box_center_vertex(g), 2000, 100, 10, Rng::stream(7, 1));
  CHECK(a.probe_series == b.probe_series);
  CHECK(a.connection_series == b.connection_series);
}

TEST_CASE("coexistence report smoke run") {
  CoexistenceParams params;
  params.q = 3;
  params.beta = 2.0;
  params.p = 1.0;
  params.n = 4;
  params.d = 2;
  params.sweeps = 2000;
  params.burnin = 200;
  params.seed = 99;
  CoexistenceReport rep = estimate_coexistence(params);
  REQUIRE(rep.replicas.size() == 1);
  CHECK(rep.delta > 0.0);
  CHECK(rep.delta <= 1.0);
  CHECK(rep.replicas[0].p_zero > rep.replicas[0].p_max);
  CHECK(rep.i15_pass);

  CoexistenceReport again = estimate_coexistence(params);
  CHECK(rep.delta == again.delta);
  CHECK(rep.connection == again.connection);
}

TEST_CASE("quenched replicas aggregate across disorders") {
  CoexistenceParams params;
  params.q = 3;
  params.beta = 2.5;
  params.p = 0.75;
  params.n = 4;
  params.d = 2;
  params.sweeps = 1000;
  params.burnin = 100;
  params.replicas = 4;
  params.seed = 31;
  CoexistenceReport rep = estimate_coexistence(params);
  REQUIRE(rep.replicas.size() == 4);
  // replicas see different disorders, so the chains differ
  bool any_different = false;
  for (std::size_t i = 1; i < rep.replicas.size(); ++i)
    any_different = any_different || rep.replicas[i].delta != rep.replicas[0].delta;
  CHECK(any_different);
  CHECK(rep.delta_se >= 0.0);
}

TEST_CASE("invalid parameters are rejected") {
  CoexistenceParams params;
  params.replicas = 0;
  CHECK_THROWS_AS(estimate_coexistence(params), std::invalid_argument);
  CoexistenceParams bad_p;
  bad_p.p = 0.0;
  CHECK_THROWS_AS(estimate_coexistence(bad_p), std::invalid_argument);
}

TEST_SUITE_END();
