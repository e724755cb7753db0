#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "clockrc/corpus.hpp"
#include "clockrc/domination.hpp"
#include "clockrc/exact.hpp"
#include "clockrc/graph.hpp"
#include "clockrc/reflection.hpp"
#include "clockrc/weights.hpp"

namespace clockrc {

// All exact finite-volume checks for one (graph, q, beta) cell.
struct OracleCellReport {
  std::string graph;
  int q = 0;
  double beta = 0.0;
  double es_dev_phi = 0.0;
  double es_dev_mu = 0.0;
  double i14_max_dev = 0.0;
  double prop3_min_slack = 0.0;
  std::uint64_t lemma_checked = 0;
  std::uint64_t lemma_violations = 0;
  double varphi_value = 0.0;
  double alpha_min_slack = 0.0;  // min alpha(e, omega') - varphi(beta)
  double z_route_gap = 0.0;      // |Z_spins - Z_edges| / Z
  bool pass = false;
};

OracleCellReport verify_oracle_cell(const Graph& g, const WeightTable& wt, double tol = 1e-10);

// i14 over every (x, a) and Prop. 3 over every probe vertex in one sweep.
struct I14SweepReport {
  double max_deviation = 0.0;
  double prop3_min_slack = 0.0;
};
I14SweepReport sweep_i14(const ExactDistributions& d);

struct InjectionFailure {
  std::uint64_t omega_rank = 0;
  Vertex x = -1;
  int a = 0;
  std::string reason;
};

// Constructive injection over every (omega, x free, a != 0), with instance-by-
// instance agreement against the independent lemma_counts enumeration.
struct InjectionCellReport {
  std::string graph;
  int q = 0;
  double beta = 0.0;
  std::uint64_t traces = 0;
  std::uint64_t nonempty_domains = 0;
  std::uint64_t injective_failures = 0;
  std::uint64_t image_failures = 0;
  std::uint64_t boundary_failures = 0;
  std::uint64_t hemisphere_failures = 0;
  std::uint64_t count_mismatches = 0;  // trace domain/target vs lemma_counts
  std::optional<InjectionFailure> first_failure;
  bool pass = false;
};

InjectionCellReport verify_injection_cell(const Graph& g, const WeightTable& wt);

}  // namespace clockrc
