#pragma once

#include <cstdint>
#include <vector>

#include "clockrc/graph.hpp"
#include "clockrc/random_cluster.hpp"
#include "clockrc/rng.hpp"
#include "clockrc/weights.hpp"

namespace clockrc {

// Single chain targeting the clock measure with 0-boundary condition. The
// boundary stays pinned at 0; only free vertices are resampled.
struct ChainState {
  SpinConfig sigma;
  std::uint64_t sweep = 0;
  Rng rng;

  ChainState(const Graph& g, Rng r) : sigma(static_cast<std::size_t>(g.num_vertices), 0), rng(r) {}
};

// One systematic scan: every free vertex resampled once from its single-site
// Gibbs conditional, ascending id order.
void heat_bath_sweep(ChainState& state, const Graph& g, const WeightTable& wt);

// sigma -> omega ~ Q(.|sigma) -> 1[x <-> U]; by the coupling, omega is
// phi-distributed when sigma is mu-distributed.
bool phi_connection_indicator(const SpinConfig& sigma, const Graph& g, const WeightTable& wt, Vertex x,
                              Rng& rng);

struct ChainRunResult {
  Vertex probe = -1;
  std::uint64_t samples = 0;
  std::vector<std::uint64_t> probe_histogram;     // q cells
  std::vector<std::uint8_t> probe_series;         // spin at probe per sample
  std::vector<std::uint8_t> connection_series;    // derived-omega connection per sample

  std::uint64_t connection_count = 0;
  double connection_frequency() const {
    return samples ? static_cast<double>(connection_count) / static_cast<double>(samples) : 0.0;
  }
};

ChainRunResult run_chain(const Graph& g, const WeightTable& wt, Vertex probe, long sweeps, long burnin,
                         int sample_every, Rng rng);

struct CoexistenceParams {
  int q = 3;
  double beta = 1.0;
  double p = 1.0;
  int n = 8;
  int d = 2;
  long sweeps = 10000;
  long burnin = 1000;
  int sample_every = 10;
  int batches = 50;
  int replicas = 1;  // quenched disorder replicas; each gets a fresh J when p < 1
  std::uint64_t seed = 1;
  int threads = 0;
};

struct ReplicaResult {
  int replica = 0;
  double delta = 0.0;       // probe excess of spin 0 over the leading a != 0
  double delta_se = 0.0;    // batch-means standard error
  double connection = 0.0;  // derived-omega estimate of phi(x <-> U)
  double connection_se = 0.0;
  double p_zero = 0.0;
  int arg_max = 1;
  double p_max = 0.0;
  bool i15_pass = false;    // delta + 3 se >= connection - 3 se
  bool converged = true;    // split-chain agreement within 5 sigma
};

struct CoexistenceReport {
  Vertex probe = -1;
  std::vector<ReplicaResult> replicas;
  // aggregate over replicas (mean and spread across J realizations when
  // quenched; the single replica's values otherwise)
  double delta = 0.0;
  double delta_se = 0.0;
  double connection = 0.0;
  double connection_se = 0.0;
  bool i15_pass = false;
  bool all_converged = true;
};

// Probe site is the center of the box. When p = 1 the box is used as is;
// otherwise each replica draws its own disorder.
CoexistenceReport estimate_coexistence(const CoexistenceParams& params);

}  // namespace clockrc
