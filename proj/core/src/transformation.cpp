#include "typent/transformation.hpp"

#include "typent/error.hpp"

namespace typent {

Transformation::Transformation(Matrix m) : rep_(std::move(m)) {}

Transformation::Transformation(CMatrix unitary, std::shared_ptr<const HermitianBasis> basis)
    : rep_(Conjugation{std::move(unitary), std::move(basis)}) {}

int Transformation::dim() const {
  if (const auto* m = std::get_if<Matrix>(&rep_)) {
    return static_cast<int>(m->rows());
  }
  return std::get<Conjugation>(rep_).basis->dim();
}

Vector Transformation::apply(const Vector& x) const {
  if (const auto* m = std::get_if<Matrix>(&rep_)) {
    return *m * x;
  }
  const auto& c = std::get<Conjugation>(rep_);
  const CMatrix rho = c.basis->to_matrix(x);
  return c.basis->to_coords(c.u * rho * c.u.adjoint());
}

Matrix Transformation::matrix() const {
  if (const auto* m = std::get_if<Matrix>(&rep_)) {
    return *m;
  }
  const auto& c = std::get<Conjugation>(rep_);
  const int k = c.basis->dim();
  Matrix out(k, k);
  for (int j = 0; j < k; ++j) {
    out.col(j) = c.basis->to_coords(c.u * c.basis->element(j) * c.u.adjoint());
  }
  return out;
}

const CMatrix* Transformation::unitary() const noexcept {
  const auto* c = std::get_if<Conjugation>(&rep_);
  return c ? &c->u : nullptr;
}

const HermitianBasis* Transformation::basis() const noexcept {
  const auto* c = std::get_if<Conjugation>(&rep_);
  return c ? c->basis.get() : nullptr;
}

GroupSampler finite_sampler(std::vector<Transformation> elements) {
  if (elements.empty()) {
    throw Error(Errc::internal_error, "finite group with no elements");
  }
  GroupSampler s;
  s.is_finite = true;
  auto shared = std::make_shared<const std::vector<Transformation>>(elements);
  s.draw = [shared](Rng& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, shared->size() - 1);
    return (*shared)[pick(rng)];
  };
  s.elements = std::move(elements);
  return s;
}

}  // namespace typent
