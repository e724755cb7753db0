#include "clockrc/verify.hpp"

#include <cmath>
#include <set>

namespace clockrc {

I14SweepReport sweep_i14(const ExactDistributions& d) {
  const Graph& g = d.graph;
  const int q = d.wt.q;
  const auto nv = static_cast<std::size_t>(g.num_vertices);

  // spin marginals per (x, a)
  std::vector<std::vector<double>> mu_marginal(nv, std::vector<double>(static_cast<std::size_t>(q), 0.0));
  for (std::uint64_t s = 0; s < d.num_sigma; ++s) {
    SpinConfig sigma = d.decode_sigma(s);
    for (std::size_t v = 0; v < nv; ++v) mu_marginal[v][sigma.spin[v]] += d.mu[s];
  }

  // phi(x <-> U) and Q(sigma_x = a, x </-> U) accumulated in one pass over
  // (omega, sigma) pairs
  std::vector<double> phi_conn(nv, 0.0);
  std::vector<std::vector<double>> q_disc(nv, std::vector<double>(static_cast<std::size_t>(q), 0.0));
  double hat_mu = 1.0;
  for (std::size_t i = 0; i < d.free_vertices.size(); ++i) hat_mu /= q;
  std::vector<char> conn(nv);
  std::vector<char> open(g.edges.size());
  for (std::uint64_t o = 0; o < d.num_omega; ++o) {
    EdgeConfig w = d.decode_omega(o);
    for (std::size_t e = 0; e < g.edges.size(); ++e)
      open[e] = (static_cast<int>(w.level[e]) == d.wt.k) ? 1 : 0;
    UnionFind uf(g.num_vertices + 1);
    for (Vertex u : g.boundary) uf.unite(u, g.num_vertices);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (open[e]) uf.unite(g.edges[e].a, g.edges[e].b);
    }
    for (std::size_t v = 0; v < nv; ++v)
      conn[v] = uf.same(static_cast<int>(v), g.num_vertices) ? 1 : 0;
    for (std::size_t v = 0; v < nv; ++v) {
      if (conn[v]) phi_conn[v] += d.phi[o];
    }
    const double q_weight = hat_phi_weight(w, d.wt) * hat_mu / d.Q_mass;
    for (std::uint64_t s = 0; s < d.num_sigma; ++s) {
      SpinConfig sigma = d.decode_sigma(s);
      if (!is_compatible(w, sigma, g, d.wt)) continue;
      for (std::size_t v = 0; v < nv; ++v) {
        if (!conn[v]) q_disc[v][sigma.spin[v]] += q_weight;
      }
    }
  }

  I14SweepReport rep;
  rep.prop3_min_slack = 2.0;
  for (std::size_t v = 0; v < nv; ++v) {
    for (int a = 0; a < q; ++a) {
      double rhs = (a == 0 ? phi_conn[v] : 0.0) + q_disc[v][static_cast<std::size_t>(a)];
      rep.max_deviation =
          std::max(rep.max_deviation, std::abs(mu_marginal[v][static_cast<std::size_t>(a)] - rhs));
      if (a != 0) {
        double slack = mu_marginal[v][0] - mu_marginal[v][static_cast<std::size_t>(a)] - phi_conn[v];
        rep.prop3_min_slack = std::min(rep.prop3_min_slack, slack);
      }
    }
  }
  return rep;
}

OracleCellReport verify_oracle_cell(const Graph& g, const WeightTable& wt, double tol) {
  OracleCellReport rep;
  rep.graph = graph_label(g);
  rep.q = wt.q;
  rep.beta = wt.beta;

  ExactDistributions d = enumerate_all(g, wt);
  rep.z_route_gap = std::abs(d.Z - d.Z_from_edges) / d.Z;

  EsMarginalReport es = verify_es_marginals(d, tol);
  rep.es_dev_phi = es.max_dev_phi;
  rep.es_dev_mu = es.max_dev_mu;

  I14SweepReport i14 = sweep_i14(d);
  rep.i14_max_dev = i14.max_deviation;
  rep.prop3_min_slack = i14.prop3_min_slack;

  LemmaSweepReport lemma = sweep_lemma_counts(g, wt);
  rep.lemma_checked = lemma.checked;
  rep.lemma_violations = lemma.violations;

  rep.varphi_value = varphi(wt.beta, wt.q);
  AlphaSweepReport alpha = sweep_single_bond_alpha(g, wt);
  rep.alpha_min_slack = alpha.min_alpha - rep.varphi_value;

  rep.pass = rep.es_dev_phi <= tol && rep.es_dev_mu <= tol && rep.i14_max_dev <= tol &&
             rep.prop3_min_slack >= -tol && rep.lemma_violations == 0 &&
             rep.alpha_min_slack >= -tol && rep.z_route_gap <= tol;
  return rep;
}

InjectionCellReport verify_injection_cell(const Graph& g, const WeightTable& wt) {
  InjectionCellReport rep;
  rep.graph = graph_label(g);
  rep.q = wt.q;
  rep.beta = wt.beta;

  ExactDistributions d = enumerate_all(g, wt);
  const Vertex y = g.boundary[0];
  auto fail = [&](std::uint64_t o, Vertex x, int a, const std::string& reason) {
    if (!rep.first_failure) rep.first_failure = InjectionFailure{o, x, a, reason};
  };

  for (std::uint64_t o = 0; o < d.num_omega; ++o) {
    EdgeConfig w = d.decode_omega(o);
    // compatible configurations once per omega
    std::vector<std::uint64_t> compatible;
    for (std::uint64_t s = 0; s < d.num_sigma; ++s) {
      if (is_compatible(w, d.decode_sigma(s), g, wt)) compatible.push_back(s);
    }
    for (Vertex x : d.free_vertices) {
      auto counts = lemma_counts(g, wt, w, x);
      for (int a = 1; a < wt.q; ++a) {
        std::set<std::vector<std::uint8_t>> images;
        std::uint64_t domain = 0, target = 0;
        bool ok_image = true, ok_boundary = true, ok_hemisphere = true, ok_injective = true;
        for (std::uint64_t s : compatible) {
          SpinConfig sigma = d.decode_sigma(s);
          if (sigma.spin[static_cast<std::size_t>(x)] == 0) ++target;
          if (sigma.spin[static_cast<std::size_t>(x)] != a) continue;
          ++domain;
          InjectionTrace trace = build_incompatibility_set(sigma, w, x, a, g, wt);
          if (trace.in_set[static_cast<std::size_t>(y)]) ok_boundary = false;
          if (!trace_hemisphere_invariant(trace, g, wt.q)) ok_hemisphere = false;
          const SpinConfig& out = trace.output;
          if (!(is_compatible(w, out, g, wt) && out.spin[static_cast<std::size_t>(x)] == 0 &&
                out.spin[static_cast<std::size_t>(y)] == 0))
            ok_image = false;
          if (!images.insert(out.spin).second) ok_injective = false;
          ++rep.traces;
        }
        if (domain > 0) ++rep.nonempty_domains;
        if (!ok_injective) {
          ++rep.injective_failures;
          fail(o, x, a, "phi_map not injective");
        }
        if (!ok_image) {
          ++rep.image_failures;
          fail(o, x, a, "image outside L_omega(0)");
        }
        if (!ok_boundary) {
          ++rep.boundary_failures;
          fail(o, x, a, "boundary vertex entered A");
        }
        if (!ok_hemisphere) {
          ++rep.hemisphere_failures;
          fail(o, x, a, "hemisphere invariant violated");
        }
        // agreement with the independent enumeration
        if (domain != counts[static_cast<std::size_t>(a)] || target != counts[0]) {
          ++rep.count_mismatches;
          fail(o, x, a, "trace counts disagree with lemma_counts");
        }
      }
    }
  }
  rep.pass = rep.injective_failures == 0 && rep.image_failures == 0 && rep.boundary_failures == 0 &&
             rep.hemisphere_failures == 0 && rep.count_mismatches == 0;
  return rep;
}

}  // namespace clockrc
