#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "typent/hermitian_basis.hpp"
#include "typent/linalg.hpp"

namespace typent {

// A reversible transformation acting on ambient coordinates. Either an
// explicit K×K real matrix, or conjugation ρ ↦ UρU† in a Hermitian basis,
// which is applied without materializing the K×K superoperator.
class Transformation {
 public:
  explicit Transformation(Matrix m);
  Transformation(CMatrix unitary, std::shared_ptr<const HermitianBasis> basis);

  [[nodiscard]] int dim() const;
  [[nodiscard]] Vector apply(const Vector& x) const;
  [[nodiscard]] Matrix matrix() const;

  // Non-null for conjugations.
  [[nodiscard]] const CMatrix* unitary() const noexcept;
  [[nodiscard]] const HermitianBasis* basis() const noexcept;

 private:
  struct Conjugation {
    CMatrix u;
    std::shared_ptr<const HermitianBasis> basis;
  };
  std::variant<Matrix, Conjugation> rep_;
};

// Uniform sampler over a group of reversible transformations. Finite groups
// small enough to list also carry their full element list.
struct GroupSampler {
  std::function<Transformation(Rng&)> draw;
  bool is_finite = false;
  std::optional<std::vector<Transformation>> elements;

  [[nodiscard]] bool enumerable() const noexcept { return elements.has_value(); }
};

// Sampler drawing uniformly from an explicit list.
GroupSampler finite_sampler(std::vector<Transformation> elements);

}  // namespace typent
