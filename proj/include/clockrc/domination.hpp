#pragma once

#include <vector>

#include "clockrc/exact.hpp"
#include "clockrc/graph.hpp"
#include "clockrc/weights.hpp"

namespace clockrc {

// Threshold function from the single-bond bound:
// varphi(beta) = ( sum_j (t_j / r_k) (K_j / K_k) )^{-1}, increasing in beta
// with limits 0 and 1.
double varphi(double beta, int q);

// Inverse of varphi by bisection, |beta - beta0| <= 1e-9. The default
// bracket upper end 50 is extended by doubling when varphi(hi) < rho (needed
// for large q at rho near 1).
double beta0(double rho, int q);

// Closed-form upper bound for beta0(p_c/p):
// log((p + q p_c) / (p - p_c)) / (1 - cos(2 pi / q)); requires p > p_c.
// d enters only through the caller's choice of p_c.
double beta0_upper_bound(double p, int q, int d, double pc);

struct ThresholdCurve {
  int q = 0;
  std::vector<std::pair<double, double>> points;  // (beta, varphi(beta))
};
ThresholdCurve phi_curve(int q, double beta_min, double beta_max, int points);

struct AlphaBoundReport {
  double varphi_value = 0.0;
  double min_alpha = 1.0;
  double min_slack = 0.0;  // min over (e, omega') of alpha - varphi
  bool pass = false;
};
// Exhaustive single-bond check alpha(e, omega') >= varphi(beta) on g.
AlphaBoundReport verify_alpha_bound(const Graph& g, const WeightTable& wt, double tol = 1e-10);

}  // namespace clockrc
