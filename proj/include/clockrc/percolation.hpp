#pragma once

#include <cstdint>
#include <vector>

#include "clockrc/graph.hpp"
#include "clockrc/rng.hpp"

namespace clockrc {

struct PercolationEstimate {
  double p = 0.0;
  int n = 0;
  int d = 0;
  long samples = 0;
  double estimate = 0.0;
  double std_error = 0.0;
};

// Each edge open independently with probability p.
Disorder sample_disorder(const Graph& g, double p, Rng& rng);

// Coupled monotone route: one uniform per edge, open iff u < p. The open set
// is nondecreasing in p for fixed uniforms.
std::vector<double> sample_edge_uniforms(const Graph& g, Rng& rng);
Disorder disorder_from_uniforms(const std::vector<double>& uniforms, double p);

// Keeps each open edge open with probability rho, independently.
Disorder thin(const Disorder& J, double rho, Rng& rng);

// Monte Carlo estimate of P_p(x <-> boundary of Lambda_n).
PercolationEstimate estimate_connection(double p, int n, int d, Vertex x, long samples,
                                        std::uint64_t seed, int threads = 1);

// One coupled sample of the minimal p at which an open left-right crossing
// of the n x n grid appears (incremental union-find over edges sorted by
// their uniforms).
double crossing_threshold_sample(int n, Rng& rng);

struct PcEstimate {
  double pc = 0.0;                      // extrapolated crossing point
  std::vector<std::pair<int, double>> per_n;  // (n, median crossing threshold)
};

// d = 2 only: crossing point per box size is the sample median of the
// crossing threshold; two or more sizes are extrapolated linearly in 1/n.
PcEstimate estimate_pc(const std::vector<int>& n_list, long samples, std::uint64_t seed,
                       int threads = 1);

// Empirical P(left-right crossing at p) on a grid of p values, n x n box.
std::vector<double> crossing_probability_curve(int n, long samples, const std::vector<double>& p_grid,
                                               std::uint64_t seed, int threads = 1);

}  // namespace clockrc
