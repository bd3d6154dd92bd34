#pragma once

#include <memory>
#include <string>
#include <vector>

#include "typent/linalg.hpp"

namespace typent {

// Orthonormal basis (Hilbert-Schmidt) of Hermitian n×n matrices, or of real
// symmetric ones. The first element is always identity/√n, so a density
// matrix has coordinate 1/√n there.
class HermitianBasis {
 public:
  enum class Field { complex, real };

  // Generalized Gell-Mann basis: identity, then symmetric and antisymmetric
  // off-diagonal pairs (j<k), then the diagonal traceless elements.
  static std::shared_ptr<const HermitianBasis> gell_mann(int n, Field field = Field::complex);

  // Basis {A_i ⊗ B_j} with flat index i*dim(B) + j.
  static std::shared_ptr<const HermitianBasis> product(const HermitianBasis& a, const HermitianBasis& b);

  [[nodiscard]] int levels() const noexcept { return n_; }
  [[nodiscard]] int dim() const noexcept { return static_cast<int>(elements_.size()); }
  [[nodiscard]] Field field() const noexcept { return field_; }
  [[nodiscard]] const CMatrix& element(int k) const { return elements_.at(static_cast<std::size_t>(k)); }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }

  [[nodiscard]] CMatrix to_matrix(const Vector& coords) const;
  [[nodiscard]] Vector to_coords(const CMatrix& m) const;

 private:
  HermitianBasis(int n, Field field, std::vector<CMatrix> elements, std::vector<std::string> labels);

  int n_;
  Field field_;
  std::vector<CMatrix> elements_;
  std::vector<std::string> labels_;
  CMatrix synthesis_;  // column k = vec(element k), column-major
};

}  // namespace typent
