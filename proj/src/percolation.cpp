#include "clockrc/percolation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "clockrc/parallel.hpp"

namespace clockrc {

Disorder sample_disorder(const Graph& g, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_disorder: p must lie in [0,1]");
  Disorder J;
  J.open.resize(g.edges.size());
  for (auto& bit : J.open) bit = rng.bernoulli(p) ? 1 : 0;
  return J;
}

std::vector<double> sample_edge_uniforms(const Graph& g, Rng& rng) {
  std::vector<double> u(g.edges.size());
  for (auto& v : u) v = rng.next_double();
  return u;
}

Disorder disorder_from_uniforms(const std::vector<double>& uniforms, double p) {
  Disorder J;
  J.open.resize(uniforms.size());
  for (std::size_t i = 0; i < uniforms.size(); ++i) J.open[i] = uniforms[i] < p ? 1 : 0;
  return J;
}

Disorder thin(const Disorder& J, double rho, Rng& rng) {
  if (!(rho >= 0.0 && rho <= 1.0)) throw std::invalid_argument("thin: rho must lie in [0,1]");
  Disorder out;
  out.open.resize(J.open.size());
  for (std::size_t i = 0; i < J.open.size(); ++i)
    out.open[i] = (J.open[i] && rng.bernoulli(rho)) ? 1 : 0;
  return out;
}

PercolationEstimate estimate_connection(double p, int n, int d, Vertex x, long samples,
                                        std::uint64_t seed, int threads) {
  if (samples < 1) throw std::invalid_argument("estimate_connection: samples must be >= 1");
  const Graph box = build_box_graph(n, d);
  std::vector<std::uint8_t> hit(static_cast<std::size_t>(samples), 0);
  parallel_for(static_cast<std::size_t>(samples), threads, [&](std::size_t i) {
    Rng rng = Rng::stream(seed, i);
    Disorder J = sample_disorder(box, p, rng);
    hit[i] = connected_to_boundary(box, J, x) ? 1 : 0;
  });
  PercolationEstimate est;
  est.p = p;
  est.n = n;
  est.d = d;
  est.samples = samples;
  double sum = std::accumulate(hit.begin(), hit.end(), 0.0);
  est.estimate = sum / static_cast<double>(samples);
  est.std_error = std::sqrt(est.estimate * (1.0 - est.estimate) / static_cast<double>(samples));
  return est;
}

namespace {

// n x n sites, nearest-neighbour bonds; virtual nodes n*n (left column) and
// n*n+1 (right column)
struct CrossingGrid {
  int n;
  std::vector<std::pair<int, int>> edges;

  explicit CrossingGrid(int n_) : n(n_) {
    auto id = [&](int r, int c) { return r * n + c; };
    for (int r = 0; r < n; ++r) {
      for (int c = 0; c < n; ++c) {
        if (c + 1 < n) edges.push_back({id(r, c), id(r, c + 1)});
        if (r + 1 < n) edges.push_back({id(r, c), id(r + 1, c)});
      }
    }
  }
};

double crossing_threshold_on(const CrossingGrid& grid, Rng& rng) {
  const int n = grid.n;
  std::vector<double> u(grid.edges.size());
  for (auto& v : u) v = rng.next_double();
  std::vector<std::size_t> order(grid.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return u[a] < u[b]; });

  UnionFind uf(n * n + 2);
  const int left = n * n, right = n * n + 1;
  for (int r = 0; r < n; ++r) {
    uf.unite(left, r * n);
    uf.unite(right, r * n + n - 1);
  }
  if (uf.same(left, right)) return 0.0;  // n == 1 degenerate
  for (std::size_t idx : order) {
    uf.unite(grid.edges[idx].first, grid.edges[idx].second);
    if (uf.same(left, right)) return u[idx];
  }
  return 1.0;
}

}  // namespace

double crossing_threshold_sample(int n, Rng& rng) {
  CrossingGrid grid(n);
  return crossing_threshold_on(grid, rng);
}

PcEstimate estimate_pc(const std::vector<int>& n_list, long samples, std::uint64_t seed, int threads) {
  if (n_list.empty()) throw std::invalid_argument("estimate_pc: need at least one box size");
  if (samples < 1) throw std::invalid_argument("estimate_pc: samples must be >= 1");
  PcEstimate out;
  for (std::size_t ni = 0; ni < n_list.size(); ++ni) {
    const int n = n_list[ni];
    CrossingGrid grid(n);
    std::vector<double> thresholds(static_cast<std::size_t>(samples));
    parallel_for(static_cast<std::size_t>(samples), threads, [&](std::size_t i) {
      Rng rng = Rng::stream(seed + ni, i);
      thresholds[i] = crossing_threshold_on(grid, rng);
    });
    std::sort(thresholds.begin(), thresholds.end());
    double median = thresholds[thresholds.size() / 2];
    if (thresholds.size() % 2 == 0)
      median = 0.5 * (median + thresholds[thresholds.size() / 2 - 1]);
    out.per_n.emplace_back(n, median);
  }
  if (out.per_n.size() == 1) {
    out.pc = out.per_n[0].second;
    return out;
  }
  // least squares fit c(n) = pc + A/n, report the 1/n -> 0 intercept
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [n, c] : out.per_n) {
    double x = 1.0 / n;
    sx += x;
    sy += c;
    sxx += x * x;
    sxy += x * c;
  }
  double m = static_cast<double>(out.per_n.size());
  double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  out.pc = (sy - slope * sx) / m;
  return out;
}

std::vector<double> crossing_probability_curve(int n, long samples, const std::vector<double>& p_grid,
                                               std::uint64_t seed, int threads) {
  CrossingGrid grid(n);
  std::vector<double> thresholds(static_cast<std::size_t>(samples));
  parallel_for(static_cast<std::size_t>(samples), threads, [&](std::size_t i) {
    Rng rng = Rng::stream(seed, i);
    thresholds[i] = crossing_threshold_on(grid, rng);
  });
  std::vector<double> curve(p_grid.size(), 0.0);
  for (double t : thresholds) {
    for (std::size_t j = 0; j < p_grid.size(); ++j) {
      if (t <= p_grid[j]) curve[j] += 1.0;
    }
  }
  for (auto& v : curve) v /= static_cast<double>(samples);
  return curve;
}

}  // namespace clockrc
