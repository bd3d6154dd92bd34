#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "typent/hermitian_basis.hpp"
#include "typent/linalg.hpp"
#include "typent/statespace.hpp"
#include "typent/transformation.hpp"

namespace typent {

// Haar-distributed unitary via QR of a complex Gaussian matrix with the
// phases of R's diagonal moved into Q.
CMatrix haar_unitary(int n, Rng& rng);
// Haar-distributed orthogonal matrix, same recipe with sign correction.
Matrix haar_orthogonal(int m, Rng& rng);

Transformation sample_haar_unitary(std::shared_ptr<const HermitianBasis> basis, Rng& rng);
Transformation sample_haar_unitary(int n, Rng& rng);
Transformation sample_orthogonal(std::shared_ptr<const HermitianBasis> real_basis, Rng& rng);
Transformation sample_permutation(int n, Rng& rng);
Transformation sample_dihedral(int n, Rng& rng);

Matrix permutation_matrix(const std::vector<int>& image);
std::vector<Transformation> enumerate_permutations(int n);
// D_n on (normalization, x, y) coordinates: n rotations, then n reflections.
std::vector<Transformation> enumerate_dihedral(int n);

// Single-qubit Clifford unitaries modulo phase, breadth-first from H and S.
std::vector<CMatrix> enumerate_clifford_1q();
// Two-qubit Clifford unitaries modulo phase (11520), from H, S on each qubit and CNOT.
std::vector<CMatrix> enumerate_clifford_2q();
std::vector<Transformation> clifford_conjugations(const std::vector<CMatrix>& unitaries,
                                                  std::shared_ptr<const HermitianBasis> basis);

// Invariant inner product on Bloch vectors: <x, y> = xᵀ G y with Gμ = 0 and
// G = Qᵀ G Q for the Bloch projection Q = 1 − μ uᵀ, so it may equally be
// applied to states.
class Gram {
 public:
  Gram(Matrix g, Vector order_unit, Vector max_mixed);

  [[nodiscard]] const Matrix& matrix() const noexcept { return g_; }
  [[nodiscard]] const Vector& order_unit() const noexcept { return u_; }
  [[nodiscard]] const Vector& max_mixed() const noexcept { return mu_; }
  [[nodiscard]] int dim() const noexcept { return static_cast<int>(g_.rows()); }

  [[nodiscard]] double inner(const Vector& x, const Vector& y) const { return x.dot(g_ * y); }
  [[nodiscard]] double norm_sq(const Vector& x) const { return inner(x, x); }
  // Bloch projection x − u(x) μ.
  [[nodiscard]] Vector project(const Vector& x) const { return x - u_.dot(x) * mu_; }
  // Bloch vector r with <r, y> = f(y) for every Bloch vector y.
  [[nodiscard]] Vector riesz(const Vector& covector) const;

 private:
  Matrix g_;
  Vector u_;
  Vector mu_;
};

// Closed-form invariant Gram for every built-in transitive space.
Gram analytic_gram(const StateSpace& space);

struct GramOptions {
  int n_avg = 20000;
  std::uint64_t seed = 0;
  // Metric averaged over the group; Euclidean on the Bloch subspace if empty.
  std::optional<Matrix> reference;
  // Samples spent on the irreducibility diagnostic for infinite groups.
  int diagnostic_samples = 4000;
};

// Group average of Tᵀ E T (exact sum for enumerable groups), rescaled so that
// pure states have norm 1. Throws reducible-space when the diagnostic fails.
Gram invariant_gram(const StateSpace& space, const GroupSampler& sampler, const GramOptions& options = {});
Gram invariant_gram(const StateSpace& space, const GramOptions& options = {});

struct IrreducibilityReport {
  double max_deviation = 0.0;
  double threshold = 0.0;
  int samples = 0;
  bool exact = false;
  [[nodiscard]] bool irreducible() const noexcept { return max_deviation <= threshold; }
};

// Average of |Tx><Tx| over the group for random Bloch vectors x, compared to
// a multiple of the identity on the Bloch subspace (Euclidean coordinates).
IrreducibilityReport check_irreducible(const GroupSampler& sampler, const Vector& order_unit,
                                       int trials, int samples, std::uint64_t seed);
IrreducibilityReport check_irreducible(const StateSpace& space, int trials, int samples, std::uint64_t seed);

// (1/|C|) Σ (U⊗U) M (U⊗U)† over the k-qubit Clifford group.
CMatrix clifford_twirl(int k, const CMatrix& m);
// 2 Tr(π_s M)/(d(d+1)) π_s + 2 Tr(π_a M)/(d(d−1)) π_a with d = 2^k.
CMatrix two_design_rhs(int k, const CMatrix& m);
CMatrix swap_operator(int d);
// Maximum entry deviation between the twirl and the projector formula over
// the matrix-unit basis. k = 1, or k = 2.
double two_design_check(int k = 1);

}  // namespace typent
