#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "typent/hermitian_basis.hpp"
#include "typent/linalg.hpp"
#include "typent/transformation.hpp"

namespace typent {

enum class SpaceKind { quantum, classical, polygon, real_quantum, boxworld_local, boxworld_bipartite };

std::string_view to_string(SpaceKind kind) noexcept;

inline constexpr double kConeTolerance = 1e-9;
inline constexpr double kNormTolerance = 1e-9;

// Immutable description of a finite-dimensional state space: coordinates,
// order unit, maximally mixed state, cone test, pure-state and group samplers.
class StateSpace {
 public:
  struct Parts {
    SpaceKind kind;
    int levels = 0;  // n for quantum/classical/real-quantum, vertex count for polygons
    int capacity = 0;
    Vector order_unit;
    Vector max_mixed;
    std::vector<std::string> labels;
    std::shared_ptr<const HermitianBasis> basis;  // quantum and real-quantum only
    std::vector<Vector> vertices;                  // polytopes: the pure states
    std::vector<Vector> facet_effects;             // polytopes: cone is {x : e(x) >= 0}
    std::function<Vector(Rng&)> sample_pure;
    GroupSampler group;
  };

  explicit StateSpace(Parts parts);

  [[nodiscard]] SpaceKind kind() const noexcept { return p_->kind; }
  [[nodiscard]] int dim() const noexcept { return static_cast<int>(p_->order_unit.size()); }
  [[nodiscard]] int capacity() const noexcept { return p_->capacity; }
  [[nodiscard]] int levels() const noexcept { return p_->levels; }
  [[nodiscard]] const Vector& order_unit() const noexcept { return p_->order_unit; }
  [[nodiscard]] const Vector& max_mixed() const noexcept { return p_->max_mixed; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return p_->labels; }
  [[nodiscard]] const HermitianBasis* hermitian_basis() const noexcept { return p_->basis.get(); }
  [[nodiscard]] std::shared_ptr<const HermitianBasis> shared_basis() const noexcept { return p_->basis; }
  [[nodiscard]] const std::vector<Vector>& vertices() const noexcept { return p_->vertices; }
  [[nodiscard]] const std::vector<Vector>& facet_effects() const noexcept { return p_->facet_effects; }
  [[nodiscard]] const GroupSampler& group() const noexcept { return p_->group; }

  [[nodiscard]] double normalization(const Vector& x) const { return p_->order_unit.dot(x); }
  [[nodiscard]] bool in_cone(const Vector& x, double tol = kConeTolerance) const;
  [[nodiscard]] bool is_state(const Vector& x, double tol = kConeTolerance) const;
  [[nodiscard]] Vector sample_pure(Rng& rng) const { return p_->sample_pure(rng); }

  // Quantum and real-quantum coordinate conversions.
  [[nodiscard]] Vector from_matrix(const CMatrix& rho) const;
  [[nodiscard]] CMatrix to_matrix(const Vector& x) const;

 private:
  std::shared_ptr<const Parts> p_;
};

StateSpace build_quantum(int n);
StateSpace build_quantum(std::shared_ptr<const HermitianBasis> basis);
StateSpace build_classical(int n);
StateSpace build_polygon(int n);
StateSpace build_real_quantum(int m);
StateSpace build_real_quantum(std::shared_ptr<const HermitianBasis> basis);
StateSpace build_boxworld_local();
StateSpace build_boxworld_bipartite();

// ω − μ; throws normalization-error unless u(ω) = 1.
Vector bloch(const StateSpace& space, const Vector& state);

void require_normalized(const StateSpace& space, const Vector& state);

}  // namespace typent
