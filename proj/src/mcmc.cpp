#include "clockrc/mcmc.hpp"

#include <cmath>
#include <stdexcept>

#include "clockrc/parallel.hpp"
#include "clockrc/percolation.hpp"
#include "clockrc/stats.hpp"

namespace clockrc {

namespace {

void conditional_weights_into(std::vector<double>& weight, const SpinConfig& sigma, Vertex x,
                              const Graph& g, const WeightTable& wt) {
  weight.assign(static_cast<std::size_t>(wt.q), 1.0);
  for (const auto& [nb, edge] : g.adjacency[static_cast<std::size_t>(x)]) {
    (void)edge;
    int s = sigma.spin[static_cast<std::size_t>(nb)];
    for (int a = 0; a < wt.q; ++a)
      weight[static_cast<std::size_t>(a)] *= wt.class_weight[static_cast<std::size_t>(pair_class(a, s, wt.q))];
  }
}

int sample_from_weights(const std::vector<double>& weight, Rng& rng) {
  double total = 0.0;
  for (double v : weight) total += v;
  double u = rng.next_double() * total;
  double acc = 0.0;
  for (std::size_t a = 0; a + 1 < weight.size(); ++a) {
    acc += weight[a];
    if (u < acc) return static_cast<int>(a);
  }
  return static_cast<int>(weight.size()) - 1;
}

}  // namespace

void heat_bath_sweep(ChainState& state, const Graph& g, const WeightTable& wt) {
  std::vector<double> weight;
  for (Vertex v = 0; v < g.num_vertices; ++v) {
    if (g.is_boundary(v)) continue;
    conditional_weights_into(weight, state.sigma, v, g, wt);
    state.sigma.spin[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(sample_from_weights(weight, state.rng));
  }
  ++state.sweep;
}

bool phi_connection_indicator(const SpinConfig& sigma, const Graph& g, const WeightTable& wt, Vertex x,
                              Rng& rng) {
  EdgeConfig w = sample_edges_given_spins(sigma, g, wt, rng);
  return connected_to_boundary(g, w, wt, x);
}

ChainRunResult run_chain(const Graph& g, const WeightTable& wt, Vertex probe, long sweeps, long burnin,
                         int sample_every, Rng rng) {
  if (sample_every < 1) throw std::invalid_argument("run_chain: sample_every must be >= 1");
  ChainRunResult res;
  res.probe = probe;
  res.probe_histogram.assign(static_cast<std::size_t>(wt.q), 0);

  ChainState state(g, rng);
  for (long s = 0; s < burnin; ++s) heat_bath_sweep(state, g, wt);
  for (long s = 1; s <= sweeps; ++s) {
    heat_bath_sweep(state, g, wt);
    if (s % sample_every != 0) continue;
    std::uint8_t spin = state.sigma.spin[static_cast<std::size_t>(probe)];
    res.probe_series.push_back(spin);
    ++res.probe_histogram[spin];
    bool conn = phi_connection_indicator(state.sigma, g, wt, probe, state.rng);
    res.connection_series.push_back(conn ? 1 : 0);
    if (conn) ++res.connection_count;
    ++res.samples;
  }
  return res;
}

namespace {

ReplicaResult analyze_replica(const ChainRunResult& run, int replica, int q, int batches) {
  ReplicaResult r;
  r.replica = replica;
  const auto total = static_cast<double>(run.samples);
  r.p_zero = static_cast<double>(run.probe_histogram[0]) / total;
  r.arg_max = 1;
  for (int a = 2; a < q; ++a) {
    if (run.probe_histogram[static_cast<std::size_t>(a)] >
        run.probe_histogram[static_cast<std::size_t>(r.arg_max)])
      r.arg_max = a;
  }
  r.p_max = static_cast<double>(run.probe_histogram[static_cast<std::size_t>(r.arg_max)]) / total;

  std::vector<double> delta_series(run.probe_series.size());
  for (std::size_t i = 0; i < run.probe_series.size(); ++i) {
    double zero = run.probe_series[i] == 0 ? 1.0 : 0.0;
    double lead = run.probe_series[i] == r.arg_max ? 1.0 : 0.0;
    delta_series[i] = zero - lead;
  }
  auto bm = batch_means(delta_series, batches);
  r.delta = bm.mean;
  r.delta_se = bm.std_error;

  std::vector<double> conn_series(run.connection_series.begin(), run.connection_series.end());
  auto cm = batch_means(conn_series, batches);
  r.connection = cm.mean;
  r.connection_se = cm.std_error;

  r.i15_pass = r.delta + 3.0 * r.delta_se >= r.connection - 3.0 * r.connection_se;

  // split-chain diagnostic on the spin-0 indicator
  std::vector<double> zero_series(run.probe_series.size());
  for (std::size_t i = 0; i < run.probe_series.size(); ++i)
    zero_series[i] = run.probe_series[i] == 0 ? 1.0 : 0.0;
  std::size_t half = zero_series.size() / 2;
  std::vector<double> first(zero_series.begin(), zero_series.begin() + static_cast<std::ptrdiff_t>(half));
  std::vector<double> second(zero_series.begin() + static_cast<std::ptrdiff_t>(half), zero_series.end());
  int half_batches = std::max(2, batches / 2);
  auto b1 = batch_means(first, half_batches);
  auto b2 = batch_means(second, half_batches);
  double spread = std::sqrt(b1.std_error * b1.std_error + b2.std_error * b2.std_error);
  double gap = std::abs(b1.mean - b2.mean);
  r.converged = spread > 0.0 ? gap <= 5.0 * spread : gap == 0.0;
  return r;
}

}  // namespace

CoexistenceReport estimate_coexistence(const CoexistenceParams& params) {
  if (params.replicas < 1) throw std::invalid_argument("estimate_coexistence: replicas must be >= 1");
  if (!(params.p > 0.0 && params.p <= 1.0))
    throw std::invalid_argument("estimate_coexistence: p must lie in (0,1]");
  const Graph box = build_box_graph(params.n, params.d);
  const Vertex probe = box_center_vertex(box);
  const WeightTable wt = build_weight_table(params.q, params.beta);

  CoexistenceReport report;
  report.probe = probe;
  report.replicas.resize(static_cast<std::size_t>(params.replicas));
  parallel_for(static_cast<std::size_t>(params.replicas), params.threads, [&](std::size_t i) {
    Rng disorder_rng = Rng::stream(params.seed, 2 * i);
    Rng chain_rng = Rng::stream(params.seed, 2 * i + 1);
    Graph g = box;
    if (params.p < 1.0) {
      Disorder J = sample_disorder(box, params.p, disorder_rng);
      g = apply_disorder(box, J);
    }
    ChainRunResult run =
        run_chain(g, wt, probe, params.sweeps, params.burnin, params.sample_every, chain_rng);
    report.replicas[i] = analyze_replica(run, static_cast<int>(i), params.q, params.batches);
  });

  const auto m = static_cast<double>(params.replicas);
  if (params.replicas == 1) {
    const auto& r = report.replicas[0];
    report.delta = r.delta;
    report.delta_se = r.delta_se;
    report.connection = r.connection;
    report.connection_se = r.connection_se;
  } else {
    for (const auto& r : report.replicas) {
      report.delta += r.delta;
      report.connection += r.connection;
    }
    report.delta /= m;
    report.connection /= m;
    double var_d = 0.0, var_c = 0.0;
    for (const auto& r : report.replicas) {
      var_d += (r.delta - report.delta) * (r.delta - report.delta);
      var_c += (r.connection - report.connection) * (r.connection - report.connection);
    }
    report.delta_se = std::sqrt(var_d / (m - 1.0) / m);
    report.connection_se = std::sqrt(var_c / (m - 1.0) / m);
  }
  report.i15_pass =
      report.delta + 3.0 * report.delta_se >= report.connection - 3.0 * report.connection_se;
  for (const auto& r : report.replicas) report.all_converged = report.all_converged && r.converged;
  return report;
}

}  // namespace clockrc
