#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "clockrc/graph.hpp"
#include "clockrc/rng.hpp"
#include "clockrc/weights.hpp"

namespace clockrc {

// Edge configuration: sorted level index 0..k per edge (value t_level).
struct EdgeConfig {
  std::vector<std::uint8_t> level;

  EdgeConfig() = default;
  explicit EdgeConfig(std::size_t n, std::uint8_t value = 0) : level(n, value) {}
  bool operator==(const EdgeConfig&) const = default;
};

// Enlarged space {0} u I used for domination comparisons: -1 encodes the
// bottom value 0, which sits strictly below t_0.
struct ExtendedEdgeConfig {
  std::vector<std::int8_t> level;
};

ExtendedEdgeConfig extend(const EdgeConfig& w);
ExtendedEdgeConfig embed_disorder(const Disorder& J, int top_level);
bool extended_leq(const ExtendedEdgeConfig& lo, const ExtendedEdgeConfig& hi);

// omega <= sigma: every edge level is dominated by the weight of the spin
// gradient over that edge. Integer test: level <= k - pair_class.
bool is_compatible(const EdgeConfig& w, const SpinConfig& sigma, const Graph& g, const WeightTable& wt);

// Product reference measure: prod_e r_level(e).
double hat_phi_weight(const EdgeConfig& w, const WeightTable& wt);

// |{sigma >= omega, sigma = 0 on U}|, exact in 64-bit integers.
// Guard: q^(free vertices) must stay within enumeration range.
std::uint64_t count_compatible(const EdgeConfig& w, const Graph& g, const WeightTable& wt);

// count_compatible(omega) * hat_phi_weight(omega); the random-cluster weight
// before normalization by Z.
double phi_weight_unnormalized(const EdgeConfig& w, const Graph& g, const WeightTable& wt);

// The omega-conditional of the coupling given sigma: each edge independently
// gets level i <= k - class with probability r_i / t_{k-class}.
EdgeConfig sample_edges_given_spins(const SpinConfig& sigma, const Graph& g, const WeightTable& wt, Rng& rng);

// Normalized single-site Gibbs conditional at free vertex x.
std::vector<double> conditional_spin_weights(const SpinConfig& sigma, Vertex x, const Graph& g,
                                             const WeightTable& wt);

// omega-open means top level (value 1).
bool connected_to_boundary(const Graph& g, const EdgeConfig& w, const WeightTable& wt, Vertex x);

struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace clockrc
