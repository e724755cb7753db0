#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "clockrc/graph.hpp"
#include "clockrc/random_cluster.hpp"
#include "clockrc/weights.hpp"

namespace clockrc {

// Brute-force enumeration of the clock measure mu, the random-cluster
// measure phi, and the joint coupling Q on a small graph. Spin configurations
// range over the free vertices (mixed-radix rank, base q, boundary pinned to
// 0); edge configurations over levels (mixed-radix rank, base k+1).
struct ExactDistributions {
  Graph graph;
  WeightTable wt;
  std::vector<Vertex> free_vertices;
  std::uint64_t num_sigma = 0;
  std::uint64_t num_omega = 0;

  std::vector<double> mu;              // per sigma rank, normalized by Z
  std::vector<std::uint64_t> count;    // |{sigma >= omega, sigma = 0 on U}| per omega rank
  std::vector<double> phi;             // count * hat_phi / Z per omega rank
  double Z = 0.0;                      // spin-route partition function
  double Z_from_edges = 0.0;           // sum_omega count * hat_phi (edge route)
  double Zprime = 0.0;                 // Z / q^m
  double Q_mass = 0.0;                 // sum of 1[compat] hat_phi * hat_mu; equals Zprime

  SpinConfig decode_sigma(std::uint64_t rank) const;
  EdgeConfig decode_omega(std::uint64_t rank) const;
  std::uint64_t sigma_rank(const SpinConfig& sigma) const;
  std::uint64_t omega_rank(const EdgeConfig& w) const;

  // Q(omega, sigma), normalized by its own mass
  double q_prob(std::uint64_t omega_rank, std::uint64_t sigma_rank) const;

  bool omega_connects(std::uint64_t omega_rank, Vertex x) const;

  // relative disagreement of the two partition-function routes
  double z_gap() const { return Z > 0.0 ? std::abs(Z - Z_from_edges) / Z : 0.0; }
};

// Guard: q^m * (k+1)^E <= 1e7, else SizeGuardError.
ExactDistributions enumerate_all(const Graph& g, const WeightTable& wt);

struct EsMarginalReport {
  double max_dev_phi = 0.0;  // max |sum_sigma Q - phi|
  double max_dev_mu = 0.0;   // max |sum_omega Q - mu|
  bool pass = false;
};
EsMarginalReport verify_es_marginals(const ExactDistributions& d, double tol = 1e-10);
EsMarginalReport verify_es_marginals(const Graph& g, const WeightTable& wt, double tol = 1e-10);

struct I14Report {
  double mu_marginal = 0.0;    // mu(sigma_x = a)
  double phi_connected = 0.0;  // phi(x <-> U)
  double q_disconnected = 0.0; // Q(sigma_x = a, x </-> U)
  double deviation = 0.0;
  bool pass = false;
};
I14Report verify_i14(const ExactDistributions& d, Vertex x, int a, double tol = 1e-10);
I14Report verify_i14(const Graph& g, const WeightTable& wt, Vertex x, int a, double tol = 1e-10);

// counts[a] = |{sigma compatible with omega, sigma = 0 on U, sigma_x = a}|
std::vector<std::uint64_t> lemma_counts(const Graph& g, const WeightTable& wt, const EdgeConfig& w,
                                        Vertex x);
bool verify_lemma_counts(const Graph& g, const WeightTable& wt, const EdgeConfig& w, Vertex x, int a);

struct LemmaSweepReport {
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  bool pass() const { return checked > 0 && violations == 0; }
};
// Sweeps every (omega, x, a).
LemmaSweepReport sweep_lemma_counts(const Graph& g, const WeightTable& wt);

struct PositiveCorrelationsReport {
  double min_slack = 0.0;  // min over a != 0 of mu(sx=0) - mu(sx=a) - phi(x<->U)
  bool pass = false;
};
PositiveCorrelationsReport verify_positive_correlations(const ExactDistributions& d, Vertex x,
                                                        double tol = 1e-10);
PositiveCorrelationsReport verify_positive_correlations(const Graph& g, const WeightTable& wt, Vertex x,
                                                        double tol = 1e-10);

// alpha(e, omega') = phi(omega_e = top | omega = omega' off e), computed from
// exact compatible-count sums. The entry of rest at edge_index is ignored.
double single_bond_alpha(const Graph& g, const WeightTable& wt, int edge_index, const EdgeConfig& rest);

struct AlphaSweepReport {
  double min_alpha = 1.0;
  std::uint64_t checked = 0;
};
// min over edges e and configurations omega' off e
AlphaSweepReport sweep_single_bond_alpha(const Graph& g, const WeightTable& wt);

}  // namespace clockrc
