#include "clockrc/weights.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace clockrc {

WeightTable build_weight_table(int q, double beta) {
  if (q < 2) throw std::invalid_argument("build_weight_table: q must be >= 2");
  if (!(beta > 0.0)) throw std::invalid_argument("build_weight_table: beta must be > 0");

  WeightTable wt;
  wt.q = q;
  wt.beta = beta;
  wt.k = q / 2;  // == (q-1)/2 for odd q

  wt.class_energy.resize(static_cast<std::size_t>(wt.k) + 1);
  wt.class_weight.resize(static_cast<std::size_t>(wt.k) + 1);
  for (int c = 0; c <= wt.k; ++c) {
    double energy = 1.0 - std::cos(2.0 * std::numbers::pi * c / q);
    wt.class_energy[static_cast<std::size_t>(c)] = energy;
    wt.class_weight[static_cast<std::size_t>(c)] = std::exp(-beta * energy);
  }

  wt.t.resize(static_cast<std::size_t>(wt.k) + 1);
  for (int i = 0; i <= wt.k; ++i) wt.t[static_cast<std::size_t>(i)] = wt.class_weight[static_cast<std::size_t>(wt.k - i)];
  wt.t[static_cast<std::size_t>(wt.k)] = 1.0;

  wt.r.resize(static_cast<std::size_t>(wt.k) + 1);
  wt.r[0] = wt.t[0];
  for (int i = 1; i <= wt.k; ++i)
    wt.r[static_cast<std::size_t>(i)] = wt.t[static_cast<std::size_t>(i)] - wt.t[static_cast<std::size_t>(i) - 1];

  // ordered pairs (a,b) with W(a-b) at each level: q on the diagonal class,
  // q on the antipodal class when q is even, 2q otherwise
  wt.K.resize(static_cast<std::size_t>(wt.k) + 1);
  for (int i = 0; i <= wt.k; ++i) {
    int c = wt.k - i;
    std::int64_t count = 2 * static_cast<std::int64_t>(q);
    if (c == 0 || (q % 2 == 0 && c == wt.k)) count = q;
    wt.K[static_cast<std::size_t>(i)] = count;
  }
  return wt;
}

double hamiltonian(const Graph& g, const SpinConfig& sigma, const WeightTable& wt) {
  double h = 0.0;
  for (const auto& e : g.edges) {
    int c = pair_class(sigma.spin[static_cast<std::size_t>(e.a)], sigma.spin[static_cast<std::size_t>(e.b)], wt.q);
    h += wt.class_energy[static_cast<std::size_t>(c)];
  }
  return h;
}

}  // namespace clockrc
