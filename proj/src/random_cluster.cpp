#include "clockrc/random_cluster.hpp"

#include <cmath>
#include <stdexcept>

namespace clockrc {

ExtendedEdgeConfig extend(const EdgeConfig& w) {
  ExtendedEdgeConfig out;
  out.level.assign(w.level.begin(), w.level.end());
  return out;
}

ExtendedEdgeConfig embed_disorder(const Disorder& J, int top_level) {
  ExtendedEdgeConfig out;
  out.level.resize(J.open.size());
  for (std::size_t i = 0; i < J.open.size(); ++i)
    out.level[i] = J.open[i] ? static_cast<std::int8_t>(top_level) : std::int8_t{-1};
  return out;
}

bool extended_leq(const ExtendedEdgeConfig& lo, const ExtendedEdgeConfig& hi) {
  if (lo.level.size() != hi.level.size())
    throw std::invalid_argument("extended_leq: size mismatch");
  for (std::size_t i = 0; i < lo.level.size(); ++i) {
    if (lo.level[i] > hi.level[i]) return false;
  }
  return true;
}

bool is_compatible(const EdgeConfig& w, const SpinConfig& sigma, const Graph& g, const WeightTable& wt) {
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    int c = pair_class(sigma.spin[static_cast<std::size_t>(g.edges[i].a)],
                       sigma.spin[static_cast<std::size_t>(g.edges[i].b)], wt.q);
    if (static_cast<int>(w.level[i]) > wt.k - c) return false;
  }
  return true;
}

double hat_phi_weight(const EdgeConfig& w, const WeightTable& wt) {
  double prod = 1.0;
  for (std::uint8_t lv : w.level) prod *= wt.r[lv];
  return prod;
}

std::uint64_t count_compatible(const EdgeConfig& w, const Graph& g, const WeightTable& wt) {
  auto free = g.free_vertices();
  const std::size_t m = free.size();
  double states = std::pow(static_cast<double>(wt.q), static_cast<double>(m));
  if (states > 1e7)
    throw SizeGuardError("count_compatible: q^|V\\U| exceeds the enumeration guard");

  SpinConfig sigma(static_cast<std::size_t>(g.num_vertices), 0);
  std::uint64_t total = static_cast<std::uint64_t>(states + 0.5);
  std::uint64_t hits = 0;
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    std::uint64_t rest = rank;
    for (std::size_t i = 0; i < m; ++i) {
      sigma.spin[static_cast<std::size_t>(free[i])] = static_cast<std::uint8_t>(rest % wt.q);
      rest /= static_cast<std::uint64_t>(wt.q);
    }
    if (is_compatible(w, sigma, g, wt)) ++hits;
  }
  return hits;
}

double phi_weight_unnormalized(const EdgeConfig& w, const Graph& g, const WeightTable& wt) {
  return static_cast<double>(count_compatible(w, g, wt)) * hat_phi_weight(w, wt);
}

EdgeConfig sample_edges_given_spins(const SpinConfig& sigma, const Graph& g, const WeightTable& wt, Rng& rng) {
  EdgeConfig w(g.edges.size(), 0);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    int c = pair_class(sigma.spin[static_cast<std::size_t>(g.edges[i].a)],
                       sigma.spin[static_cast<std::size_t>(g.edges[i].b)], wt.q);
    int max_level = wt.k - c;
    // inverse CDF over levels 0..max_level with weights r_i / t_max
    double u = rng.next_double() * wt.t[static_cast<std::size_t>(max_level)];
    double acc = 0.0;
    int chosen = max_level;
    for (int lv = 0; lv < max_level; ++lv) {
      acc += wt.r[static_cast<std::size_t>(lv)];
      if (u < acc) {
        chosen = lv;
        break;
      }
    }
    w.level[i] = static_cast<std::uint8_t>(chosen);
  }
  return w;
}

std::vector<double> conditional_spin_weights(const SpinConfig& sigma, Vertex x, const Graph& g,
                                             const WeightTable& wt) {
  if (g.is_boundary(x))
    throw std::invalid_argument("conditional_spin_weights: x must be a free vertex");
  std::vector<double> weight(static_cast<std::size_t>(wt.q), 1.0);
  for (const auto& [nb, edge] : g.adjacency[static_cast<std::size_t>(x)]) {
    (void)edge;
    int s = sigma.spin[static_cast<std::size_t>(nb)];
    for (int a = 0; a < wt.q; ++a)
      weight[static_cast<std::size_t>(a)] *= wt.class_weight[static_cast<std::size_t>(pair_class(a, s, wt.q))];
  }
  double total = 0.0;
  for (double v : weight) total += v;
  for (double& v : weight) v /= total;
  return weight;
}

bool connected_to_boundary(const Graph& g, const EdgeConfig& w, const WeightTable& wt, Vertex x) {
  std::vector<char> open(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    open[i] = (static_cast<int>(w.level[i]) == wt.k) ? 1 : 0;
  return connected_to_boundary(g, open, x);
}

}  // namespace clockrc
