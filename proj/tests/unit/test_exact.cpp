#include <doctest.h>

#include <cmath>

#include "clockrc/exact.hpp"
#include "clockrc/verify.hpp"

using namespace clockrc;

namespace {

Graph single_edge() { return make_graph(2, {0}, {{0, 1}}); }
Graph path3_ends_in_u() { return make_graph(3, {0, 2}, {{0, 1}, {1, 2}}); }
Graph rooted_triangle() { return make_graph(3, {0}, {{0, 1}, {0, 2}, {1, 2}}); }

}  // namespace

TEST_SUITE_BEGIN("exact");

TEST_CASE("single edge q=2 beta=1 closed forms") {
  ExactDistributions d = enumerate_all(single_edge(), build_weight_table(2, 1.0));
  const double e2 = std::exp(-2.0);
  CHECK(d.Z == doctest::Approx(1.0 + e2).epsilon(1e-14));
  CHECK(d.Zprime == doctest::Approx((1.0 + e2) / 2.0).epsilon(1e-14));
  CHECK(d.mu[0] == doctest::Approx(1.0 / (1.0 + e2)).epsilon(1e-13));     // sigma_x = 0
  CHECK(d.mu[1] == doctest::Approx(e2 / (1.0 + e2)).epsilon(1e-13));      // sigma_x = 1
  CHECK(d.phi[1] == doctest::Approx((1.0 - e2) / (1.0 + e2)).epsilon(1e-13));  // top level
  CHECK(d.count[1] == 1);
  CHECK(d.count[0] == 2);
  CHECK(d.Q_mass == doctest::Approx(d.Zprime).epsilon(1e-13));
}

TEST_CASE("edgeless graph has uniform mu") {
  Graph g = make_graph(2, {0}, {});
  ExactDistributions d = enumerate_all(g, build_weight_table(5, 2.0));
  for (std::uint64_t s = 0; s < d.num_sigma; ++s)
    CHECK(d.mu[s] == doctest::Approx(0.2).epsilon(1e-14));
}

TEST_CASE("distribution tables sum to one") {
  for (const Graph& g : {single_edge(), path3_ends_in_u(), rooted_triangle()}) {
    for (int q : {2, 3}) {
      ExactDistributions d = enumerate_all(g, build_weight_table(q, 0.7));
      double mu_sum = 0.0, phi_sum = 0.0;
      for (double v : d.mu) mu_sum += v;
      for (double v : d.phi) phi_sum += v;
      CHECK(mu_sum == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(phi_sum == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(d.z_gap() <= 1e-12);
    }
  }
}

TEST_CASE("size guard refuses oversized enumerations") {
  Graph g = make_graph(13, {0}, {});
  CHECK_THROWS_AS(enumerate_all(g, build_weight_table(5, 1.0)), SizeGuardError);
}

TEST_CASE("rank round trips") {
  ExactDistributions d = enumerate_all(rooted_triangle(), build_weight_table(4, 1.0));
  for (std::uint64_t s = 0; s < d.num_sigma; ++s) CHECK(d.sigma_rank(d.decode_sigma(s)) == s);
  for (std::uint64_t o = 0; o < d.num_omega; ++o) CHECK(d.omega_rank(d.decode_omega(o)) == o);
}

TEST_CASE("edwards-sokal marginals") {
  SUBCASE("single edge, q=2, beta=1") {
    auto rep = verify_es_marginals(single_edge(), build_weight_table(2, 1.0));
    CHECK(rep.max_dev_phi <= 1e-12);
    CHECK(rep.max_dev_mu <= 1e-12);
    CHECK(rep.pass);
  }
  SUBCASE("path of 3 with both ends in U, q=3, beta=0.5") {
    auto rep = verify_es_marginals(path3_ends_in_u(), build_weight_table(3, 0.5));
    CHECK(rep.max_dev_phi <= 1e-10);
    CHECK(rep.max_dev_mu <= 1e-10);
    CHECK(rep.pass);
  }
  SUBCASE("edgeless graph is exact") {
    Graph g = make_graph(3, {0}, {});
    auto rep = verify_es_marginals(g, build_weight_table(4, 1.0));
    CHECK(rep.max_dev_phi <= 1e-14);
    CHECK(rep.max_dev_mu <= 1e-14);
  }
}

TEST_CASE("connection identity i14") {
  SUBCASE("single edge, a=0: 0.8808 = 0.7616 + 0.1192") {
    auto rep = verify_i14(single_edge(), build_weight_table(2, 1.0), 1, 0);
    const double e2 = std::exp(-2.0);
    CHECK(rep.mu_marginal == doctest::Approx(1.0 / (1.0 + e2)).epsilon(1e-12));
    CHECK(rep.phi_connected == doctest::Approx((1.0 - e2) / (1.0 + e2)).epsilon(1e-12));
    CHECK(rep.q_disconnected == doctest::Approx(e2 / (1.0 + e2)).epsilon(1e-12));
    CHECK(rep.deviation <= 1e-12);
    CHECK(rep.pass);
  }
  SUBCASE("single edge, a=1: no connected contribution") {
    auto rep = verify_i14(single_edge(), build_weight_table(2, 1.0), 1, 1);
    CHECK(rep.mu_marginal == doctest::Approx(rep.q_disconnected).epsilon(1e-12));
    CHECK(rep.pass);
  }
  SUBCASE("probe on the boundary") {
    auto rep = verify_i14(single_edge(), build_weight_table(2, 1.0), 0, 0);
    CHECK(rep.mu_marginal == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rep.phi_connected == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rep.pass);
  }
}

TEST_CASE("lemma counts") {
  Graph g = rooted_triangle();
  WeightTable wt = build_weight_table(4, 1.0);

  SUBCASE("all-top omega leaves only the zero configuration") {
    EdgeConfig top(3, static_cast<std::uint8_t>(wt.k));
    auto counts = lemma_counts(g, wt, top, 1);
    CHECK(counts[0] == 1);
    for (int a = 1; a < 4; ++a) CHECK(counts[static_cast<std::size_t>(a)] == 0);
  }

  SUBCASE("all-bottom omega is unconstrained and symmetric") {
    EdgeConfig bottom(3, 0);
    auto counts = lemma_counts(g, wt, bottom, 2);
    for (int a = 0; a < 4; ++a) CHECK(counts[static_cast<std::size_t>(a)] == 4);  // q^(m-1)
  }

  SUBCASE("exhaustive sweep over the rooted triangle") {
    auto rep = sweep_lemma_counts(g, wt);
    CHECK(rep.checked == 27 * 3 * 4);
    CHECK(rep.violations == 0);
    CHECK(rep.pass());
  }
}

TEST_CASE("positive correlations") {
  SUBCASE("q=2 saturates the inequality") {
    auto rep = verify_positive_correlations(single_edge(), build_weight_table(2, 1.0), 1);
    CHECK(std::abs(rep.min_slack) <= 1e-12);
    CHECK(rep.pass);
  }
  SUBCASE("path of 3, q=3, middle vertex") {
    auto rep = verify_positive_correlations(path3_ends_in_u(), build_weight_table(3, 1.0), 1);
    CHECK(rep.min_slack >= -1e-10);
    CHECK(rep.pass);
  }
  SUBCASE("high-temperature limit is near-tight") {
    auto rep = verify_positive_correlations(path3_ends_in_u(), build_weight_table(3, 1e-3), 1);
    CHECK(rep.min_slack >= -1e-10);
    CHECK(rep.min_slack <= 1e-2);
  }
}

TEST_CASE("single-bond alpha") {
  SUBCASE("single edge alpha equals phi(top)") {
    Graph g = single_edge();
    WeightTable wt = build_weight_table(2, 1.0);
    EdgeConfig rest(1, 0);
    const double e2 = std::exp(-2.0);
    CHECK(single_bond_alpha(g, wt, 0, rest) ==
          doctest::Approx((1.0 - e2) / (1.0 + e2)).epsilon(1e-13));
  }

  SUBCASE("alpha matches the conditional of the enumerated phi") {
    Graph g = rooted_triangle();
    WeightTable wt = build_weight_table(4, 1.0);
    ExactDistributions d = enumerate_all(g, wt);
    const auto base = static_cast<std::uint64_t>(wt.k) + 1;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      std::uint64_t rest_count = 1;
      for (std::size_t f = 0; f + 1 < g.edges.size(); ++f) rest_count *= base;
      for (std::uint64_t rank = 0; rank < rest_count; ++rank) {
        EdgeConfig rest(g.edges.size(), 0);
        std::uint64_t rem = rank;
        for (std::size_t f = 0; f < g.edges.size(); ++f) {
          if (f == e) continue;
          rest.level[f] = static_cast<std::uint8_t>(rem % base);
          rem /= base;
        }
        double denom = 0.0, top = 0.0;
        for (std::uint64_t lv = 0; lv < base; ++lv) {
          EdgeConfig w = rest;
          w.level[e] = static_cast<std::uint8_t>(lv);
          double prob = d.phi[d.omega_rank(w)];
          denom += prob;
          if (static_cast<int>(lv) == wt.k) top = prob;
        }
        CHECK(single_bond_alpha(g, wt, static_cast<int>(e), rest) ==
              doctest::Approx(top / denom).epsilon(1e-12));
      }
    }
  }

  SUBCASE("low temperature pushes alpha above 0.999") {
    Graph g = rooted_triangle();
    WeightTable wt = build_weight_table(3, 20.0);
    auto sweep = sweep_single_bond_alpha(g, wt);
    CHECK(sweep.min_alpha > 0.999);
  }
}

TEST_CASE("i14 sweep covers every vertex and spin") {
  ExactDistributions d = enumerate_all(rooted_triangle(), build_weight_table(4, 1.0));
  auto rep = sweep_i14(d);
  CHECK(rep.max_deviation <= 1e-12);
  CHECK(rep.prop3_min_slack >= -1e-12);
}

TEST_CASE("full oracle cell report on a small cell") {
  auto rep = verify_oracle_cell(rooted_triangle(), build_weight_table(4, 1.0));
  CHECK(rep.pass);
  CHECK(rep.es_dev_phi <= 1e-10);
  CHECK(rep.lemma_violations == 0);
  CHECK(rep.alpha_min_slack >= -1e-10);
  CHECK(rep.z_route_gap <= 1e-10);
}

TEST_SUITE_END();
