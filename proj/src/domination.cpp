#include "clockrc/domination.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace clockrc {

double varphi(double beta, int q) {
  WeightTable wt = build_weight_table(q, beta);
  double sum = 0.0;
  const double rk = wt.r[static_cast<std::size_t>(wt.k)];
  const auto kk = static_cast<double>(wt.K[static_cast<std::size_t>(wt.k)]);
  for (int j = 0; j <= wt.k; ++j)
    sum += wt.t[static_cast<std::size_t>(j)] / rk * static_cast<double>(wt.K[static_cast<std::size_t>(j)]) / kk;
  return 1.0 / sum;
}

double beta0(double rho, int q) {
  if (!(rho > 0.0 && rho < 1.0)) throw std::invalid_argument("beta0: rho must lie in (0,1)");
  double lo = 1e-6;
  double hi = 50.0;
  if (varphi(lo, q) >= rho) return lo;
  while (varphi(hi, q) < rho) {
    hi *= 2.0;
    if (hi > 1e9) throw std::runtime_error("beta0: bracket extension failed");
  }
  while (hi - lo > 1e-9) {
    double mid = 0.5 * (lo + hi);
    (varphi(mid, q) < rho ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double beta0_upper_bound(double p, int q, int d, double pc) {
  if (q < 2) throw std::invalid_argument("beta0_upper_bound: q must be >= 2");
  if (d < 1) throw std::invalid_argument("beta0_upper_bound: d must be >= 1");
  if (!(pc > 0.0 && pc < 1.0)) throw std::invalid_argument("beta0_upper_bound: pc must lie in (0,1)");
  if (!(p > pc)) throw std::invalid_argument("beta0_upper_bound: requires p > pc");
  return std::log((p + q * pc) / (p - pc)) / (1.0 - std::cos(2.0 * std::numbers::pi / q));
}

ThresholdCurve phi_curve(int q, double beta_min, double beta_max, int points) {
  if (points < 2) throw std::invalid_argument("phi_curve: need at least 2 points");
  if (!(beta_min > 0.0 && beta_max > beta_min))
    throw std::invalid_argument("phi_curve: need 0 < beta_min < beta_max");
  ThresholdCurve curve;
  curve.q = q;
  curve.points.reserve(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) {
    double beta = beta_min + (beta_max - beta_min) * i / (points - 1);
    curve.points.emplace_back(beta, varphi(beta, q));
  }
  return curve;
}

AlphaBoundReport verify_alpha_bound(const Graph& g, const WeightTable& wt, double tol) {
  AlphaBoundReport rep;
  rep.varphi_value = varphi(wt.beta, wt.q);
  AlphaSweepReport sweep = sweep_single_bond_alpha(g, wt);
  rep.min_alpha = sweep.min_alpha;
  rep.min_slack = sweep.min_alpha - rep.varphi_value;
  rep.pass = rep.min_slack >= -tol;
  return rep;
}

}  // namespace clockrc
