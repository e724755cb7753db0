#pragma once

#include <cstdint>
#include <vector>

#include "clockrc/graph.hpp"
#include "clockrc/random_cluster.hpp"
#include "clockrc/weights.hpp"

namespace clockrc {

// Reflection across the line at angle a/2: b -> (a - b) mod q. Fixes the
// line, swaps the anchor a with 0, and is an involution.
inline int reflect_spin(int b, int a, int q) { return ((a - b) % q + q) % q; }

enum class Hemisphere { Hem0, HemA, OnLine };

// Open half-circles cut by the line at angle a/2 (a != 0). Integer test on
// m = (2b - a) mod 2q: HemA for 0 < m < q, Hem0 for q < m < 2q, OnLine at
// m in {0, q}.
Hemisphere hemisphere(int b, int a, int q);

// Growth of the incompatibility sets A_0 = {x} c A_1 c ... and the map Phi.
// Anchors with index above q/2 are reduced to q - a by a global spin
// negation; the trace records the transformation and the per-step sets in
// the reduced frame.
struct InjectionTrace {
  int anchor = 0;            // requested spin a at x
  int effective_anchor = 0;  // anchor after the symmetry reduction
  bool negated = false;      // true when the global negation was applied
  Vertex x = -1;
  std::vector<std::vector<Vertex>> steps;  // cumulative sets A_0, A_1, ..., stabilized
  std::vector<char> in_set;                // final A membership per vertex
  SpinConfig input;                        // original sigma
  SpinConfig effective_input;              // sigma in the reduced frame
  SpinConfig output;                       // Phi sigma, original frame
};

// Preconditions: |U| = 1, a != 0, sigma in L_omega(a) (compatible with omega,
// 0 at the boundary vertex, a at x); std::invalid_argument otherwise.
InjectionTrace build_incompatibility_set(const SpinConfig& sigma, const EdgeConfig& w, Vertex x, int a,
                                         const Graph& g, const WeightTable& wt);

SpinConfig phi_map(const SpinConfig& sigma, const EdgeConfig& w, Vertex x, int a, const Graph& g,
                   const WeightTable& wt);

// Per-trace invariants from the proof: every u in A \ {x} sits strictly in
// Hem(a) (reduced frame), hence the boundary vertex never joins A.
bool trace_hemisphere_invariant(const InjectionTrace& trace, const Graph& g, int q);

struct InjectionReport {
  std::uint64_t domain_size = 0;  // |L_omega(a)|
  std::uint64_t image_size = 0;   // distinct outputs
  std::uint64_t target_size = 0;  // |L_omega(0)|
  bool injective = false;
  bool image_in_target = false;
  bool boundary_clear = false;    // y not in A on every trace
  bool hemisphere_ok = false;
  bool pass() const { return injective && image_in_target && boundary_clear && hemisphere_ok; }
};

// Runs Phi over all of L_omega(a) by enumeration. Vacuously passes when the
// domain is empty.
InjectionReport verify_injection(const EdgeConfig& w, Vertex x, int a, const Graph& g,
                                 const WeightTable& wt);

}  // namespace clockrc
