#pragma once

#include "typent/linalg.hpp"
#include "typent/statespace.hpp"

namespace typent {

// Block-weighted form on bipartite boxworld Bloch vectors:
// c (a ‖corr‖² + b ‖marg‖²), corr = Â⊗B̂ block, marg = μ^A⊗B̂ ⊕ Â⊗μ^B.
struct BoxworldGram {
  double a = 1.0;
  double b = 1.0;
  double c = 1.0 / 3.0;

  [[nodiscard]] bool is_inner_product() const noexcept { return a > 0.0 && b > 0.0; }
};

// 3×3 matrix view ω_ij of a flat bipartite vector (index 3i + j) and back.
Matrix boxworld_matrix(const Vector& flat);
Vector boxworld_flat(const Matrix& m);

Vector pr_box();
// ω_rs ⊗ ω_tu with signs r, s, t, u ∈ {−1, +1}.
Vector boxworld_product(int r, int s, int t, int u);

// Evaluates the form on ω − μ^AB without validating ω.
double boxworld_form(const Vector& omega, const BoxworldGram& gram = {});
// Validated purity; cone-error for anything outside the no-signalling polytope.
double boxworld_purity(const StateSpace& space, const Vector& omega, const BoxworldGram& gram = {});

struct ObstructionRecord {
  // P(product) = product_a·a + product_b·b, P(PR) = pr_a·a + pr_b·b.
  double product_a = 0.0;
  double product_b = 0.0;
  double pr_a = 0.0;
  double pr_b = 0.0;
  double a = 0.0;  // solution of P(product) = P(PR) = 1
  double b = 0.0;
  bool positivity_violated = false;       // b > 0 fails
  double degenerate_purity = 0.0;         // P(μ^A ⊗ ω₊₊) at the solution
  double degenerate_state_distance = 0.0; // ‖μ^A ⊗ ω₊₊ − μ^AB‖
};

ObstructionRecord boxworld_normalization_obstruction();

// Vertex test for the H-polytope: active facets plus the order unit span R^K.
bool is_extreme(const StateSpace& polytope, const Vector& state, double tol = 1e-9);

}  // namespace typent
