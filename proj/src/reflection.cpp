#include "clockrc/reflection.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace clockrc {

Hemisphere hemisphere(int b, int a, int q) {
  if (a == 0) throw std::invalid_argument("hemisphere: anchor must be non-zero");
  int m = ((2 * b - a) % (2 * q) + 2 * q) % (2 * q);
  if (m == 0 || m == q) return Hemisphere::OnLine;
  return m < q ? Hemisphere::HemA : Hemisphere::Hem0;
}

namespace {

SpinConfig negate_spins(const SpinConfig& sigma, int q) {
  SpinConfig out = sigma;
  for (auto& s : out.spin) s = static_cast<std::uint8_t>((q - s) % q);
  return out;
}

void check_preconditions(const SpinConfig& sigma, const EdgeConfig& w, Vertex x, int a, const Graph& g,
                         const WeightTable& wt) {
  if (g.boundary.size() != 1)
    throw std::invalid_argument("injection: boundary must be identified to a single vertex");
  if (a <= 0 || a >= wt.q) throw std::invalid_argument("injection: anchor must be a non-zero spin");
  if (g.is_boundary(x)) throw std::invalid_argument("injection: x must be a free vertex");
  if (sigma.spin[static_cast<std::size_t>(g.boundary[0])] != 0)
    throw std::invalid_argument("injection: sigma must be 0 at the boundary vertex");
  if (sigma.spin[static_cast<std::size_t>(x)] != a)
    throw std::invalid_argument("injection: sigma_x must equal the anchor");
  if (!is_compatible(w, sigma, g, wt))
    throw std::invalid_argument("injection: sigma must be compatible with omega");
}

}  // namespace

InjectionTrace build_incompatibility_set(const SpinConfig& sigma, const EdgeConfig& w, Vertex x, int a,
                                         const Graph& g, const WeightTable& wt) {
  check_preconditions(sigma, w, x, a, g, wt);

  InjectionTrace trace;
  trace.anchor = a;
  trace.x = x;
  trace.input = sigma;
  trace.negated = 2 * a > wt.q;
  trace.effective_anchor = trace.negated ? wt.q - a : a;
  trace.effective_input = trace.negated ? negate_spins(sigma, wt.q) : sigma;

  const SpinConfig& sig = trace.effective_input;
  const int anchor = trace.effective_anchor;

  trace.in_set.assign(static_cast<std::size_t>(g.num_vertices), 0);
  trace.in_set[static_cast<std::size_t>(x)] = 1;
  std::vector<Vertex> frontier{x};
  std::vector<Vertex> cumulative{x};
  trace.steps.push_back(cumulative);

  // A_{n+1} adds u adjacent to A_n with W(sigma_u - R sigma_v) < omega_uv,
  // i.e. k - class(sigma_u, R sigma_v) < level(uv).
  while (!frontier.empty()) {
    std::set<Vertex> added;
    for (Vertex v : frontier) {
      int reflected = reflect_spin(sig.spin[static_cast<std::size_t>(v)], anchor, wt.q);
      for (const auto& [u, edge] : g.adjacency[static_cast<std::size_t>(v)]) {
        if (trace.in_set[static_cast<std::size_t>(u)]) continue;
        int c = pair_class(sig.spin[static_cast<std::size_t>(u)], reflected, wt.q);
        if (wt.k - c < static_cast<int>(w.level[static_cast<std::size_t>(edge)])) added.insert(u);
      }
    }
    frontier.assign(added.begin(), added.end());
    if (frontier.empty()) break;
    for (Vertex u : frontier) {
      trace.in_set[static_cast<std::size_t>(u)] = 1;
      cumulative.push_back(u);
    }
    std::sort(cumulative.begin(), cumulative.end());
    trace.steps.push_back(cumulative);
  }

  // apply the reflection on A in the reduced frame, then map back
  SpinConfig out = sig;
  for (Vertex v = 0; v < g.num_vertices; ++v) {
    if (trace.in_set[static_cast<std::size_t>(v)])
      out.spin[static_cast<std::size_t>(v)] =
          static_cast<std::uint8_t>(reflect_spin(out.spin[static_cast<std::size_t>(v)], anchor, wt.q));
  }
  trace.output = trace.negated ? negate_spins(out, wt.q) : out;
  return trace;
}

SpinConfig phi_map(const SpinConfig& sigma, const EdgeConfig& w, Vertex x, int a, const Graph& g,
                   const WeightTable& wt) {
  return build_incompatibility_set(sigma, w, x, a, g, wt).output;
}

bool trace_hemisphere_invariant(const InjectionTrace& trace, const Graph& g, int q) {
  for (Vertex v = 0; v < g.num_vertices; ++v) {
    if (!trace.in_set[static_cast<std::size_t>(v)] || v == trace.x) continue;
    if (hemisphere(trace.effective_input.spin[static_cast<std::size_t>(v)], trace.effective_anchor, q) !=
        Hemisphere::HemA)
      return false;
  }
  return true;
}

InjectionReport verify_injection(const EdgeConfig& w, Vertex x, int a, const Graph& g,
                                 const WeightTable& wt) {
  if (g.boundary.size() != 1)
    throw std::invalid_argument("verify_injection: boundary must be identified to a single vertex");
  InjectionReport rep;
  rep.injective = rep.image_in_target = rep.boundary_clear = rep.hemisphere_ok = true;
  if (g.is_boundary(x) || a == 0) return rep;  // L_omega(a) empty: vacuous

  auto free = g.free_vertices();
  const Vertex y = g.boundary[0];
  double ns = 1.0;
  for (std::size_t i = 0; i < free.size(); ++i) ns *= wt.q;
  if (ns > 1e7) throw SizeGuardError("verify_injection: q^|V\\U| exceeds the enumeration guard");
  const auto total = static_cast<std::uint64_t>(ns + 0.5);

  std::set<std::vector<std::uint8_t>> images;
  SpinConfig sigma(static_cast<std::size_t>(g.num_vertices), 0);
  for (std::uint64_t rank = 0; rank < total; ++rank) {
    std::uint64_t rem = rank;
    for (Vertex v : free) {
      sigma.spin[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(rem % wt.q);
      rem /= static_cast<std::uint64_t>(wt.q);
    }
    if (!is_compatible(w, sigma, g, wt)) continue;
    if (sigma.spin[static_cast<std::size_t>(x)] == 0) ++rep.target_size;
    if (sigma.spin[static_cast<std::size_t>(x)] != a) continue;
    ++rep.domain_size;

    InjectionTrace trace = build_incompatibility_set(sigma, w, x, a, g, wt);
    if (trace.in_set[static_cast<std::size_t>(y)]) rep.boundary_clear = false;
    if (!trace_hemisphere_invariant(trace, g, wt.q)) rep.hemisphere_ok = false;
    const SpinConfig& out = trace.output;
    bool in_target = is_compatible(w, out, g, wt) && out.spin[static_cast<std::size_t>(x)] == 0 &&
                     out.spin[static_cast<std::size_t>(y)] == 0;
    if (!in_target) rep.image_in_target = false;
    if (!images.insert(out.spin).second) rep.injective = false;
  }
  rep.image_size = images.size();
  return rep;
}

}  // namespace clockrc
