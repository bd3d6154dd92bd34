#pragma once

#include <memory>
#include <vector>

#include "typent/composite.hpp"
#include "typent/montecarlo.hpp"
#include "typent/randomize.hpp"

namespace typent {

enum class FaceKind { quantum_subspace, classical_support };

// A face of a bipartite state space that every local transformation on A,
// paired with a suitable one on B, maps onto itself.
class Face {
 public:
  // Quantum face: states supported on the range of the isometry (columns).
  Face(Composite parent, CMatrix isometry);
  // Classical face: distributions supported on the given joint indices.
  Face(Composite parent, std::vector<int> support);

  [[nodiscard]] FaceKind kind() const noexcept { return kind_; }
  [[nodiscard]] const Composite& parent() const noexcept { return parent_; }
  // N_S (quantum subspace dimension) or N_F (support size).
  [[nodiscard]] int levels() const noexcept { return levels_; }
  // K_F: N_S² or N_F.
  [[nodiscard]] int dim() const noexcept { return kind_ == FaceKind::quantum_subspace ? levels_ * levels_ : levels_; }
  [[nodiscard]] const CMatrix& projector() const { return projector_; }
  [[nodiscard]] const CMatrix& isometry() const { return isometry_; }
  [[nodiscard]] const std::vector<int>& support() const noexcept { return support_; }
  [[nodiscard]] const Vector& max_mixed() const noexcept { return mu_f_; }
  [[nodiscard]] const GroupSampler& stabilizer() const noexcept { return stabilizer_; }

  // In-face state with Tr ρ² (quantum) or Σ p² (classical) equal to target,
  // interpolating a fixed in-face pure state with μ_F.
  [[nodiscard]] Vector initial_state(double target) const;
  [[nodiscard]] bool contains(const Vector& joint_state, double tol = 1e-9) const;

 private:
  Composite parent_;
  FaceKind kind_;
  int levels_ = 0;
  CMatrix projector_;
  CMatrix isometry_;
  std::vector<int> support_;
  Vector mu_f_;
  GroupSampler stabilizer_;
};

// C^n ∨ C^n and C^n ∧ C^n inside C^n ⊗ C^n.
Face sym_face(int n);
Face antisym_face(int n);
// The whole of C^{n_A} ⊗ C^{n_B} viewed as a face (π = 1).
Face full_face(int na, int nb);
// {0} × S₀ ∪ {1} × S₁ for a coin and a record with disjoint halves of size s0.
Face coin_record_face(int s0);

// π M π − π Tr(π M π)/Tr π.
CMatrix face_bloch_projector(const Face& face, const CMatrix& m);

// (|1><1| − |2><2|)/√2 on A.
CMatrix default_probe(int na);
// Tr[(π (E_A ⊗ 1) π)²].
double probe_coefficient(const Face& face, const CMatrix& probe);

// Expected Tr ρ_A² for random states in a quantum face with global Tr ρ² = tr_purity.
Prediction predict_qface(const Face& face, const CMatrix& probe, double tr_purity);
// (1 + Tr ω²)(n ± 1)/(n² ± n + 2); sign = +1 symmetric, −1 antisymmetric.
Prediction predict_symm(int n, int sign, double tr_purity);
// Purity of a classical face state computed inside the face.
Prediction predict_classical_face(const Face& face, const Vector& joint_state);

// Mean local Tr ρ_A² (quantum faces) or local purity P(ω^A) (classical
// faces) over stabilizer samples; realized global value is Tr ρ² resp. Σ p².
McReport estimate_face_local_purity(const Face& face, double target, const EstimateOptions& options);
McReport estimate_face_from_initial(const Face& face, const Vector& initial, const EstimateOptions& options);

struct CoinRecordResult {
  McReport report;
  Prediction prediction;       // 1/(2 s0 − 1)
  Prediction face_purity;      // purity of the initial state inside the face
};

CoinRecordResult coin_with_record(int s0, const EstimateOptions& options);

}  // namespace typent
