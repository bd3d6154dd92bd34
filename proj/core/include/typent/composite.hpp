#pragma once

#include <optional>
#include <vector>

#include "typent/grouprep.hpp"
#include "typent/linalg.hpp"
#include "typent/purity.hpp"
#include "typent/statespace.hpp"

namespace typent {

enum class CompositeKind {
  tomographic,      // K_AB = K_A K_B, coordinates indexed i*K_B + j
  real_quantum,     // real-amplitude quantum, K_AB > K_A K_B
};

class Composite {
 public:
  Composite(StateSpace a, StateSpace b, StateSpace joint, CompositeKind kind);

  [[nodiscard]] const StateSpace& a() const noexcept { return a_; }
  [[nodiscard]] const StateSpace& b() const noexcept { return b_; }
  [[nodiscard]] const StateSpace& joint() const noexcept { return joint_; }
  [[nodiscard]] CompositeKind kind() const noexcept { return kind_; }
  [[nodiscard]] const GroupSampler& global_group() const noexcept { return joint_.group(); }

  [[nodiscard]] int flat_index(int i, int j) const;
  // x ⊗ y embedded in the joint coordinates.
  [[nodiscard]] Vector product(const Vector& x, const Vector& y) const;
  // Contraction with u^B over the B slot (resp. u^A over A).
  [[nodiscard]] Vector marginal_a(const Vector& joint_state) const;
  [[nodiscard]] Vector marginal_b(const Vector& joint_state) const;
  [[nodiscard]] const Matrix& marginal_a_map() const noexcept { return marg_a_; }
  [[nodiscard]] const Matrix& marginal_b_map() const noexcept { return marg_b_; }
  // T_A ⊗ T_B as a joint transformation.
  [[nodiscard]] Transformation local(const Transformation& ta, const Transformation& tb) const;

 private:
  StateSpace a_;
  StateSpace b_;
  StateSpace joint_;
  CompositeKind kind_;
  Matrix marg_a_;
  Matrix marg_b_;
};

// quantum⊗quantum and classical⊗classical give tomographic composites;
// real-quantum⊗real-quantum gives the non-tomographic real composite.
Composite compose(const StateSpace& a, const StateSpace& b);

// Reduced density matrix on the first factor of C^{dA} ⊗ C^{dB}.
CMatrix partial_trace_b(const CMatrix& rho, int da, int db);
CMatrix partial_trace_a(const CMatrix& rho, int da, int db);

struct ClassicalSubsystemWitness {
  std::vector<Vector> states;
  std::vector<Vector> effects;
  bool centered = false;
};

ClassicalSubsystemWitness capacity_witness(const StateSpace& space);

struct CenteredReport {
  bool centered = false;
  double center_deviation = 0.0;
  double witness_deviation = 0.0;    // max |E_i(ω_j) − δ_ij| and |Σ E_i − u|
  double expected_off_diagonal = 0.0;
  double max_gram_deviation = 0.0;   // off-diagonal vs −1/(N−1), diagonal vs 1
  std::vector<double> off_diagonal;
  bool pass = false;
};

CenteredReport verify_centered_dynamical(const StateSpace& space, const Gram& gram,
                                         const ClassicalSubsystemWitness& witness, double tol = 1e-10);

struct PhiMuPurity {
  double numeric = 0.0;
  double closed_form = 0.0;
};

// P(φ^A ⊗ μ^B) through the joint Gram, checked against (N_A−1)/(N_A N_B−1).
PhiMuPurity purity_pure_times_maxmixed(const Composite& comp, const Gram& gram_ab, double tol = 1e-9);

// μ^AB − μ^A ⊗ μ^B; zero for tomographic composites.
Vector mu_c(const Composite& comp);

// Representing vector of the functional X^A ⊗ u^B, i.e. ω ↦ X^A(ω^A).
Vector lift_pauli(const Composite& comp, const Gram& gram_ab, const PauliMap& local_map);

}  // namespace typent
