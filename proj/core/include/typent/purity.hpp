#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "typent/grouprep.hpp"
#include "typent/linalg.hpp"
#include "typent/statespace.hpp"

namespace typent {

// Squared Gram length of the Bloch vector; normalization-error unless u(ω) = 1.
double purity(const Gram& gram, const Vector& state);
double purity(const StateSpace& space, const Gram& gram, const Vector& state);

// P = n/(n−1) Tr ρ² − 1/(n−1) and its inverse.
double purity_from_tr(double tr_purity, int n);
double tr_from_purity(double purity, int n);
double tr_purity(const CMatrix& rho);

// t φ + (1 − t) μ with t = √P₀, which has purity exactly P₀.
Vector fixed_purity_state(const StateSpace& space, double p0, const Vector& pure);
Vector fixed_purity_state(const StateSpace& space, const Gram& gram, double p0, Rng& rng);

class PauliMap {
 public:
  PauliMap(Vector representing, const Gram& gram);

  // X(ω) = <X̂, ω̂>.
  [[nodiscard]] double operator()(const Vector& x) const { return covector_.dot(x); }
  [[nodiscard]] const Vector& representing() const noexcept { return rep_; }
  [[nodiscard]] const Vector& covector() const noexcept { return covector_; }

 private:
  Vector rep_;
  Vector covector_;
};

PauliMap pauli_from_direction(const Gram& gram, const Vector& direction);

enum class PauliProvenance { clifford_orbit, classical, polygon };
std::string_view to_string(PauliProvenance p) noexcept;

struct PauliSet {
  std::vector<PauliMap> maps;
  std::vector<std::string> labels;
  PauliProvenance provenance = PauliProvenance::clifford_orbit;

  [[nodiscard]] std::size_t size() const noexcept { return maps.size(); }
};

// Flip sign so the first coordinate above tolerance is positive.
Vector canonical_sign(const Vector& v, double tol = 1e-9);

// Orbit {T X̂} of one Pauli map under a finite group, modulo sign.
PauliSet pauli_orbit(const std::vector<Transformation>& group, const Gram& gram, const PauliMap& seed_map,
                     PauliProvenance provenance);

// Quantum on k qubits: Pauli strings in lexicographic order over {I,X,Y,Z}^k
// minus the identity. Classical: the n coordinate maps. Polygons and the
// local gbit: the sign-reduced dihedral orbit of the x coordinate.
PauliSet complete_pauli_set(const StateSpace& space, const Gram& gram);

// (K − 1) · mean of X(ω)², which reproduces the purity for complete sets.
double purity_via_pauli_set(const PauliSet& set, const Gram& gram, const Vector& state);

struct Estimate {
  double value = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
  bool exact = false;
};

// Group average of X(Tω)²: exact over enumerable groups, Monte Carlo otherwise.
Estimate pauli_haar_average(const GroupSampler& sampler, const PauliMap& map, const Vector& state, int n_samples,
                            std::uint64_t seed);

struct CollisionProbability {
  double value = 0.5;
  std::optional<PauliMap> optimizer;
};

// (1 + P)/2, attained by the Pauli map along ω̂.
CollisionProbability max_collision_probability(const Gram& gram, const Vector& state);

// Probability that two copies of ω give the same outcome when measuring X.
double collision_probability(const PauliMap& map, const Vector& state);

}  // namespace typent
