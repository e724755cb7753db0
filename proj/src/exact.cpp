#include "clockrc/exact.hpp"

#include <cmath>
#include <stdexcept>

namespace clockrc {

namespace {

double pow_u64(double base, std::size_t exp) {
  double out = 1.0;
  for (std::size_t i = 0; i < exp; ++i) out *= base;
  return out;
}

}  // namespace

SpinConfig ExactDistributions::decode_sigma(std::uint64_t rank) const {
  SpinConfig sigma(static_cast<std::size_t>(graph.num_vertices), 0);
  for (Vertex v : free_vertices) {
    sigma.spin[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(rank % wt.q);
    rank /= static_cast<std::uint64_t>(wt.q);
  }
  return sigma;
}

EdgeConfig ExactDistributions::decode_omega(std::uint64_t rank) const {
  EdgeConfig w(graph.edges.size(), 0);
  const std::uint64_t base = static_cast<std::uint64_t>(wt.k) + 1;
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    w.level[e] = static_cast<std::uint8_t>(rank % base);
    rank /= base;
  }
  return w;
}

std::uint64_t ExactDistributions::sigma_rank(const SpinConfig& sigma) const {
  std::uint64_t rank = 0;
  for (auto it = free_vertices.rbegin(); it != free_vertices.rend(); ++it)
    rank = rank * static_cast<std::uint64_t>(wt.q) + sigma.spin[static_cast<std::size_t>(*it)];
  return rank;
}

std::uint64_t ExactDistributions::omega_rank(const EdgeConfig& w) const {
  std::uint64_t rank = 0;
  const std::uint64_t base = static_cast<std::uint64_t>(wt.k) + 1;
  for (std::size_t e = w.level.size(); e-- > 0;) rank = rank * base + w.level[e];
  return rank;
}

double ExactDistributions::q_prob(std::uint64_t omega_r, std::uint64_t sigma_r) const {
  EdgeConfig w = decode_omega(omega_r);
  SpinConfig sigma = decode_sigma(sigma_r);
  if (!is_compatible(w, sigma, graph, wt)) return 0.0;
  double hat_mu = 1.0 / pow_u64(static_cast<double>(wt.q), free_vertices.size());
  return hat_phi_weight(w, wt) * hat_mu / Q_mass;
}

bool ExactDistributions::omega_connects(std::uint64_t omega_r, Vertex x) const {
  return connected_to_boundary(graph, decode_omega(omega_r), wt, x);
}

ExactDistributions enumerate_all(const Graph& g, const WeightTable& wt) {
  ExactDistributions d;
  d.graph = g;
  d.wt = wt;
  d.free_vertices = g.free_vertices();

  const double ns = pow_u64(static_cast<double>(wt.q), d.free_vertices.size());
  const double no = pow_u64(static_cast<double>(wt.k + 1), g.edges.size());
  if (ns * no > 1e7) throw SizeGuardError("enumerate_all: q^m * (k+1)^E exceeds the 1e7 guard");
  d.num_sigma = static_cast<std::uint64_t>(ns + 0.5);
  d.num_omega = static_cast<std::uint64_t>(no + 0.5);

  // spin route: mu and Z
  d.mu.resize(d.num_sigma);
  for (std::uint64_t s = 0; s < d.num_sigma; ++s) {
    SpinConfig sigma = d.decode_sigma(s);
    d.mu[s] = std::exp(-wt.beta * hamiltonian(g, sigma, wt));
    d.Z += d.mu[s];
  }
  for (double& v : d.mu) v /= d.Z;
  d.Zprime = d.Z / ns;

  // edge route: compatible counts, phi, and the mass of hat_phi x hat_mu on
  // the compatibility event
  d.count.assign(d.num_omega, 0);
  d.phi.resize(d.num_omega);
  std::vector<std::uint8_t> max_level(g.edges.size());
  for (std::uint64_t s = 0; s < d.num_sigma; ++s) {
    SpinConfig sigma = d.decode_sigma(s);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      int c = pair_class(sigma.spin[static_cast<std::size_t>(g.edges[e].a)],
                         sigma.spin[static_cast<std::size_t>(g.edges[e].b)], wt.q);
      max_level[e] = static_cast<std::uint8_t>(wt.k - c);
    }
    // every omega pointwise below max_level is compatible with this sigma
    EdgeConfig w(g.edges.size(), 0);
    bool done = g.edges.empty();
    if (g.edges.empty()) {
      ++d.count[0];
    } else {
      while (!done) {
        ++d.count[d.omega_rank(w)];
        std::size_t e = 0;
        while (e < g.edges.size()) {
          if (w.level[e] < max_level[e]) {
            ++w.level[e];
            break;
          }
          w.level[e] = 0;
          ++e;
        }
        done = (e == g.edges.size());
      }
    }
  }
  for (std::uint64_t o = 0; o < d.num_omega; ++o) {
    double hp = hat_phi_weight(d.decode_omega(o), wt);
    d.Z_from_edges += static_cast<double>(d.count[o]) * hp;
    d.phi[o] = static_cast<double>(d.count[o]) * hp / d.Z;
  }
  d.Q_mass = d.Z_from_edges / ns;
  return d;
}

EsMarginalReport verify_es_marginals(const ExactDistributions& d, double tol) {
  EsMarginalReport rep;
  const double hat_mu = 1.0 / pow_u64(static_cast<double>(d.wt.q), d.free_vertices.size());
  std::vector<double> mu_from_q(d.num_sigma, 0.0);
  for (std::uint64_t o = 0; o < d.num_omega; ++o) {
    EdgeConfig w = d.decode_omega(o);
    const double q_weight = hat_phi_weight(w, d.wt) * hat_mu / d.Q_mass;
    double row = 0.0;
    for (std::uint64_t s = 0; s < d.num_sigma; ++s) {
      SpinConfig sigma = d.decode_sigma(s);
      if (!is_compatible(w, sigma, d.graph, d.wt)) continue;
      row += q_weight;
      mu_from_q[s] += q_weight;
    }
    rep.max_dev_phi = std::max(rep.max_dev_phi, std::abs(row - d.phi[o]));
  }
  for (std::uint64_t s = 0; s < d.num_sigma; ++s)
    rep.max_dev_mu = std::max(rep.max_dev_mu, std::abs(mu_from_q[s] - d.mu[s]));
  rep.pass = rep.max_dev_phi <= tol && rep.max_dev_mu <= tol;
  return rep;
}

EsMarginalReport verify_es_marginals(const Graph& g, const WeightTable& wt, double tol) {
  return verify_es_marginals(enumerate_all(g, wt), tol);
}

I14Report verify_i14(const ExactDistributions& d, Vertex x, int a, double tol) {
  I14Report rep;
  for (std::uint64_t s = 0; s < d.num_sigma; ++s) {
    if (d.decode_sigma(s).spin[static_cast<std::size_t>(x)] == a) rep.mu_marginal += d.mu[s];
  }
  const double hat_mu = 1.0 / pow_u64(static_cast<double>(d.wt.q), d.free_vertices.size());
  for (std::uint64_t o = 0; o < d.num_omega; ++o) {
    EdgeConfig w = d.decode_omega(o);
    if (connected_to_boundary(d.graph, w, d.wt, x)) {
      rep.phi_connected += d.phi[o];
      continue;
    }
    const double q_weight = hat_phi_weight(w, d.wt) * hat_mu / d.Q_mass;
    for (std::uint64_t s = 0; s < d.num_sigma; ++s) {
      SpinConfig sigma = d.decode_sigma(s);
      if (sigma.spin[static_cast<std::size_t>(x)] != a) continue;
      if (is_compatible(w, sigma, d.graph, d.wt)) rep.q_disconnected += q_weight;
    }
  }
  double rhs = (a == 0 ? rep.phi_connected : 0.0) + rep.q_disconnected;
  rep.deviation = std::abs(rep.mu_marginal - rhs);
  rep.pass = rep.deviation <= tol;
  return rep;
}

I14Report verify_i14(const Graph& g, const WeightTable& wt, Vertex x, int a, double tol) {
  return verify_i14(enumerate_all(g, wt), x, a, tol);
}

std::vector<std::uint64_t> lemma_counts(const Graph& g, const WeightTable& wt, const EdgeConfig& w,
                                        Vertex x) {
  auto free = g.free_vertices();
  const double ns = pow_u64(static_cast<double>(wt.q), free.size());
  if (ns > 1e7) throw SizeGuardError("lemma_counts: q^|V\\U| exceeds the enumeration guard");
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(wt.q), 0);
  const auto total = static_cast<std::uint64_t>(ns + 0.5);
  SpinConfig sigma(static_cast<std::size_t>(g.num_vertices), 0);
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    std::uint64_t rest = rank;
    for (Vertex v : free) {
      sigma.spin[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(rest % wt.q);
      rest /= static_cast<std::uint64_t>(wt.q);
    }
    if (is_compatible(w, sigma, g, wt)) ++counts[sigma.spin[static_cast<std::size_t>(x)]];
  }
  return counts;
}

bool verify_lemma_counts(const Graph& g, const WeightTable& wt, const EdgeConfig& w, Vertex x, int a) {
  auto counts = lemma_counts(g, wt, w, x);
  return counts[static_cast<std::size_t>(a)] <= counts[0];
}

LemmaSweepReport sweep_lemma_counts(const Graph& g, const WeightTable& wt) {
  ExactDistributions d = enumerate_all(g, wt);
  LemmaSweepReport rep;
  std::vector<std::vector<std::uint64_t>> counts(
      static_cast<std::size_t>(g.num_vertices),
      std::vector<std::uint64_t>(static_cast<std::size_t>(wt.q), 0));
  for (std::uint64_t o = 0; o < d.num_omega; ++o) {
    EdgeConfig w = d.decode_omega(o);
    for (auto& row : counts) row.assign(static_cast<std::size_t>(wt.q), 0);
    for (std::uint64_t s = 0; s < d.num_sigma; ++s) {
      SpinConfig sigma = d.decode_sigma(s);
      if (!is_compatible(w, sigma, g, wt)) continue;
      for (Vertex v = 0; v < g.num_vertices; ++v)
        ++counts[static_cast<std::size_t>(v)][sigma.spin[static_cast<std::size_t>(v)]];
    }
    for (Vertex v = 0; v < g.num_vertices; ++v) {
      for (int a = 0; a < wt.q; ++a) {
        ++rep.checked;
        if (counts[static_cast<std::size_t>(v)][static_cast<std::size_t>(a)] >
            counts[static_cast<std::size_t>(v)][0])
          ++rep.violations;
      }
    }
  }
  return rep;
}

PositiveCorrelationsReport verify_positive_correlations(const ExactDistributions& d, Vertex x,
                                                        double tol) {
  PositiveCorrelationsReport rep;
  std::vector<double> marginal(static_cast<std::size_t>(d.wt.q), 0.0);
  for (std::uint64_t s = 0; s < d.num_sigma; ++s)
    marginal[d.decode_sigma(s).spin[static_cast<std::size_t>(x)]] += d.mu[s];
  double phi_conn = 0.0;
  for (std::uint64_t o = 0; o < d.num_omega; ++o) {
    if (d.omega_connects(o, x)) phi_conn += d.phi[o];
  }
  rep.min_slack = 2.0;
  for (int a = 1; a < d.wt.q; ++a)
    rep.min_slack = std::min(rep.min_slack, marginal[0] - marginal[static_cast<std::size_t>(a)] - phi_conn);
  rep.pass = rep.min_slack >= -tol;
  return rep;
}

PositiveCorrelationsReport verify_positive_correlations(const Graph& g, const WeightTable& wt, Vertex x,
                                                        double tol) {
  return verify_positive_correlations(enumerate_all(g, wt), x, tol);
}

double single_bond_alpha(const Graph& g, const WeightTable& wt, int edge_index, const EdgeConfig& rest) {
  auto free = g.free_vertices();
  const double ns = pow_u64(static_cast<double>(wt.q), free.size());
  if (ns > 1e7) throw SizeGuardError("single_bond_alpha: q^|V\\U| exceeds the enumeration guard");
  const auto total = static_cast<std::uint64_t>(ns + 0.5);
  const auto ei = static_cast<std::size_t>(edge_index);

  // N_i = |{sigma = 0 on U, compatible off e, allowing level >= i on e}|
  // accumulated as a histogram of the max allowed level on e, then summed.
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(wt.k) + 1, 0);
  SpinConfig sigma(static_cast<std::size_t>(g.num_vertices), 0);
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    std::uint64_t rem = rank;
    for (Vertex v : free) {
      sigma.spin[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(rem % wt.q);
      rem /= static_cast<std::uint64_t>(wt.q);
    }
    bool ok = true;
    for (std::size_t e = 0; e < g.edges.size() && ok; ++e) {
      if (e == ei) continue;
      int c = pair_class(sigma.spin[static_cast<std::size_t>(g.edges[e].a)],
                         sigma.spin[static_cast<std::size_t>(g.edges[e].b)], wt.q);
      ok = static_cast<int>(rest.level[e]) <= wt.k - c;
    }
    if (!ok) continue;
    int c = pair_class(sigma.spin[static_cast<std::size_t>(g.edges[ei].a)],
                       sigma.spin[static_cast<std::size_t>(g.edges[ei].b)], wt.q);
    ++hist[static_cast<std::size_t>(wt.k - c)];
  }
  double denom = 0.0;
  std::uint64_t suffix = 0;
  std::vector<double> n_of_level(static_cast<std::size_t>(wt.k) + 1, 0.0);
  for (int i = wt.k; i >= 0; --i) {
    suffix += hist[static_cast<std::size_t>(i)];
    n_of_level[static_cast<std::size_t>(i)] = static_cast<double>(suffix);
  }
  for (int i = 0; i <= wt.k; ++i) denom += wt.r[static_cast<std::size_t>(i)] * n_of_level[static_cast<std::size_t>(i)];
  return wt.r[static_cast<std::size_t>(wt.k)] * n_of_level[static_cast<std::size_t>(wt.k)] / denom;
}

AlphaSweepReport sweep_single_bond_alpha(const Graph& g, const WeightTable& wt) {
  AlphaSweepReport rep;
  const auto base = static_cast<std::uint64_t>(wt.k) + 1;
  if (g.edges.empty()) return rep;
  double rest_count = pow_u64(static_cast<double>(base), g.edges.size() - 1);
  if (rest_count * pow_u64(static_cast<double>(wt.q), g.free_vertices().size()) * static_cast<double>(g.edges.size()) > 5e7)
    throw SizeGuardError("sweep_single_bond_alpha: sweep exceeds the enumeration guard");
  const auto total_rest = static_cast<std::uint64_t>(rest_count + 0.5);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    for (std::uint64_t rank = 0; rank < total_rest; ++rank) {
      EdgeConfig rest(g.edges.size(), 0);
      std::uint64_t rem = rank;
      for (std::size_t f = 0; f < g.edges.size(); ++f) {
        if (f == e) continue;
        rest.level[f] = static_cast<std::uint8_t>(rem % base);
        rem /= base;
      }
      double alpha = single_bond_alpha(g, wt, static_cast<int>(e), rest);
      rep.min_alpha = std::min(rep.min_alpha, alpha);
      ++rep.checked;
    }
  }
  return rep;
}

}  // namespace clockrc
