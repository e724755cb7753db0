#include <doctest.h>

#include <cmath>
#include <numbers>

#include "clockrc/exact.hpp"
#include "clockrc/reflection.hpp"
#include "clockrc/verify.hpp"

using namespace clockrc;

namespace {

// float-side oracle for the hemisphere split: sign of sin(b' - a'/2)
Hemisphere hemisphere_by_sine(int b, int a, int q) {
  double s = std::sin(std::numbers::pi * (2.0 * b - a) / q);
  if (std::abs(s) < 1e-12) return Hemisphere::OnLine;
  return s > 0 ? Hemisphere::HemA : Hemisphere::Hem0;
}

// float-side oracle for the growth predicate W(su - R sv) < t_level
bool growth_by_float(int su, int sv, int a, int level, const WeightTable& wt) {
  double angle = 2.0 * std::numbers::pi * (su - reflect_spin(sv, a, wt.q)) / wt.q;
  double w = std::exp(-wt.beta * (1.0 - std::cos(angle)));
  return w < wt.t[static_cast<std::size_t>(level)] - 1e-12;
}

Graph path_yvx() { return make_graph(3, {0}, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_SUITE_BEGIN("reflection");

TEST_CASE("reflection fixes the anchor pair and is an involution") {
  for (int q = 2; q <= 9; ++q) {
    for (int a = 0; a < q; ++a) {
      CHECK(reflect_spin(a, a, q) == 0);
      CHECK(reflect_spin(0, a, q) == a);
      for (int b = 0; b < q; ++b) CHECK(reflect_spin(reflect_spin(b, a, q), a, q) == b);
    }
  }
  CHECK(reflect_spin(3, 1, 4) == 2);
}

TEST_CASE("pair classes are invariant under reflection") {
  for (int q = 2; q <= 16; ++q) {
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        for (int c = 0; c < q; ++c)
          CHECK(pair_class(b, c, q) == pair_class(reflect_spin(b, a, q), reflect_spin(c, a, q), q));
      }
    }
  }
}

TEST_CASE("hemisphere classification") {
  for (int q = 2; q <= 16; ++q) {
    for (int a = 1; a < q; ++a) {
      CHECK(hemisphere(0, a, q) == Hemisphere::Hem0);
      CHECK(hemisphere(a, a, q) == Hemisphere::HemA);
      for (int b = 0; b < q; ++b) CHECK(hemisphere(b, a, q) == hemisphere_by_sine(b, a, q));
    }
  }
  CHECK(hemisphere(1, 2, 4) == Hemisphere::OnLine);
  CHECK(hemisphere(3, 1, 5) == Hemisphere::OnLine);  // odd q, antipode of the line
  CHECK_THROWS_AS(hemisphere(1, 0, 4), std::invalid_argument);
}

TEST_CASE("growth predicate agrees with the float evaluation of W") {
  for (int q : {3, 4, 5, 8}) {
    for (double beta : {0.5, 1.0}) {
      WeightTable wt = build_weight_table(q, beta);
      for (int a = 1; a < q; ++a) {
        for (int su = 0; su < q; ++su) {
          for (int sv = 0; sv < q; ++sv) {
            for (int level = 0; level <= wt.k; ++level) {
              bool integer_test = wt.k - pair_class(su, reflect_spin(sv, a, q), q) < level;
              CHECK(integer_test == growth_by_float(su, sv, a, level, wt));
            }
          }
        }
      }
    }
  }
}

TEST_CASE("all-bottom omega never grows the set") {
  Graph g = make_graph(3, {0}, {{0, 1}, {0, 2}, {1, 2}});
  WeightTable wt = build_weight_table(4, 1.0);
  EdgeConfig bottom(3, 0);
  SpinConfig sigma(3, 0);
  sigma.spin[1] = 3;
  sigma.spin[2] = 1;  // anchor at x = 2
  InjectionTrace trace = build_incompatibility_set(sigma, bottom, 2, 1, g, wt);
  CHECK(trace.steps.size() == 1);
  CHECK(trace.steps[0] == std::vector<Vertex>{2});
  CHECK(trace.output.spin[2] == 0);
  CHECK(trace.output.spin[1] == 3);
}

TEST_CASE("hand-traced growth step on the path y-v-x") {
  // q=4, beta=1, omega = (level 0 on yv, level 1 on vx), sigma = (0, 2, 1),
  // anchor a=1: W(sigma_v - R sigma_x) = W at class 2 = t0 < t1, so v joins A;
  // y then stays out because W(sigma_y - R sigma_v) = t1 >= t0.
  Graph g = path_yvx();
  WeightTable wt = build_weight_table(4, 1.0);
  EdgeConfig w(2, 0);
  w.level[1] = 1;
  SpinConfig sigma(3, 0);
  sigma.spin[1] = 2;
  sigma.spin[2] = 1;
  InjectionTrace trace = build_incompatibility_set(sigma, w, 2, 1, g, wt);
  REQUIRE(trace.steps.size() == 2);
  CHECK(trace.steps[0] == std::vector<Vertex>{2});
  CHECK(trace.steps[1] == std::vector<Vertex>{1, 2});
  CHECK(!trace.in_set[0]);
  CHECK(trace.output.spin[0] == 0);
  CHECK(trace.output.spin[1] == 3);  // R(2) = (1-2) mod 4
  CHECK(trace.output.spin[2] == 0);
  CHECK(is_compatible(w, trace.output, g, wt));
  CHECK(trace_hemisphere_invariant(trace, g, wt.q));
}

TEST_CASE("no-propagation case keeps sigma away from x") {
  // sigma identically a off the boundary, omega all bottom
  Graph g = path_yvx();
  WeightTable wt = build_weight_table(5, 1.0);
  EdgeConfig bottom(2, 0);
  SpinConfig sigma(3, 2);
  sigma.spin[0] = 0;
  SpinConfig out = phi_map(sigma, bottom, 2, 2, g, wt);
  CHECK(out.spin[0] == 0);
  CHECK(out.spin[1] == 2);
  CHECK(out.spin[2] == 0);
}

TEST_CASE("anchors above q/2 run through the negation reduction") {
  Graph g = path_yvx();
  WeightTable wt = build_weight_table(5, 1.0);
  EdgeConfig w(2, 0);
  w.level[0] = 1;
  w.level[1] = 1;
  SpinConfig sigma(3, 0);
  sigma.spin[1] = 4;
  sigma.spin[2] = 4;
  REQUIRE(is_compatible(w, sigma, g, wt));
  InjectionTrace trace = build_incompatibility_set(sigma, w, 2, 4, g, wt);
  CHECK(trace.negated);
  CHECK(trace.effective_anchor == 1);
  CHECK(trace.output.spin[0] == 0);
  CHECK(trace.output.spin[2] == 0);
  CHECK(is_compatible(w, trace.output, g, wt));
  CHECK(trace_hemisphere_invariant(trace, g, wt.q));
}

TEST_CASE("precondition violations are rejected") {
  Graph g = path_yvx();
  WeightTable wt = build_weight_table(4, 1.0);
  EdgeConfig bottom(2, 0);
  SpinConfig sigma(3, 0);
  sigma.spin[2] = 1;

  CHECK_THROWS_AS(build_incompatibility_set(sigma, bottom, 2, 0, g, wt), std::invalid_argument);
  CHECK_THROWS_AS(build_incompatibility_set(sigma, bottom, 2, 2, g, wt), std::invalid_argument);

  Graph two_boundary = make_graph(3, {0, 2}, {{0, 1}, {1, 2}});
  CHECK_THROWS_AS(build_incompatibility_set(sigma, bottom, 1, 1, two_boundary, wt),
                  std::invalid_argument);

  EdgeConfig top(2, static_cast<std::uint8_t>(wt.k));
  CHECK_THROWS_AS(build_incompatibility_set(sigma, top, 2, 1, g, wt), std::invalid_argument);
}

TEST_CASE("empty domain is vacuously injective") {
  Graph g = make_graph(2, {0}, {{0, 1}});
  WeightTable wt = build_weight_table(3, 1.0);
  EdgeConfig top(1, static_cast<std::uint8_t>(wt.k));
  auto rep = verify_injection(top, 1, 1, g, wt);
  CHECK(rep.domain_size == 0);
  CHECK(rep.pass());
}

TEST_CASE("exhaustive injection on the rooted triangle, q=4") {
  Graph g = make_graph(3, {0}, {{0, 1}, {0, 2}, {1, 2}});
  WeightTable wt = build_weight_table(4, 1.0);
  auto cell = verify_injection_cell(g, wt);
  CHECK(cell.pass);
  CHECK(cell.count_mismatches == 0);
  CHECK(cell.traces > 0);
}

TEST_CASE("exhaustive injection on the path of 4, q=5 (odd-q hemispheres)") {
  Graph g = make_graph(4, {0}, {{0, 1}, {1, 2}, {2, 3}});
  WeightTable wt = build_weight_table(5, 1.0);
  auto cell = verify_injection_cell(g, wt);
  CHECK(cell.pass);
  CHECK(cell.traces > 0);
}

TEST_CASE("injection implies the count inequality instance by instance") {
  Graph g = make_graph(3, {0}, {{0, 1}, {0, 2}, {1, 2}});
  WeightTable wt = build_weight_table(4, 1.0);
  ExactDistributions d = enumerate_all(g, wt);
  for (std::uint64_t o = 0; o < d.num_omega; ++o) {
    EdgeConfig w = d.decode_omega(o);
    for (Vertex x : {1, 2}) {
      auto counts = lemma_counts(g, wt, w, x);
      for (int a = 1; a < wt.q; ++a) {
        auto rep = verify_injection(w, x, a, g, wt);
        CHECK(rep.pass());
        CHECK(rep.domain_size == counts[static_cast<std::size_t>(a)]);
        CHECK(rep.target_size == counts[0]);
        CHECK(rep.domain_size <= rep.target_size);
      }
    }
  }
}

TEST_SUITE_END();
