#pragma once

#include <cstdint>
#include <vector>

#include "clockrc/graph.hpp"

namespace clockrc {

// Spin indices 0..q-1; the angle 2*pi*i/q materializes only inside cosine
// evaluation, so equality of weight values reduces to integer class equality.
struct SpinConfig {
  std::vector<std::uint8_t> spin;

  SpinConfig() = default;
  explicit SpinConfig(std::size_t n, std::uint8_t value = 0) : spin(n, value) {}
  bool operator==(const SpinConfig&) const = default;
};

// Angular-distance class of a spin pair, in 0..floor(q/2).
inline int pair_class(int i, int j, int q) {
  int diff = i - j;
  if (diff < 0) diff = -diff;
  diff %= q;
  return diff <= q - diff ? diff : q - diff;
}

// Sorted level table of the weight function W(a) = exp(-beta(1-cos a)) over
// the spin set: levels t_0 < ... < t_k = 1, increments r_i, ordered-pair
// degeneracies K_i. Level i corresponds to angular class k - i.
struct WeightTable {
  int q = 0;
  double beta = 0.0;
  int k = 0;
  std::vector<double> t;
  std::vector<double> r;
  std::vector<std::int64_t> K;
  std::vector<double> class_weight;  // W value per class c (== t[k-c])
  std::vector<double> class_energy;  // 1 - cos(2 pi c / q) per class

  int level_of_class(int c) const { return k - c; }
  int class_of_level(int i) const { return k - i; }
};

// q >= 2, beta > 0, else std::invalid_argument.
WeightTable build_weight_table(int q, double beta);

// Sum over edges of 1 - cos(sigma_x - sigma_y); zero iff sigma is constant on
// every connected component.
double hamiltonian(const Graph& g, const SpinConfig& sigma, const WeightTable& wt);

inline bool spins_match_boundary(const Graph& g, const SpinConfig& sigma, int value = 0) {
  for (Vertex u : g.boundary) {
    if (sigma.spin[static_cast<std::size_t>(u)] != value) return false;
  }
  return true;
}

}  // namespace clockrc
