#include "typent/hermitian_basis.hpp"

#include <cmath>

#include "typent/error.hpp"

namespace typent {

HermitianBasis::HermitianBasis(int n, Field field, std::vector<CMatrix> elements, std::vector<std::string> labels)
    : n_(n), field_(field), elements_(std::move(elements)), labels_(std::move(labels)) {
  const Eigen::Index nn = static_cast<Eigen::Index>(n_) * n_;
  synthesis_.resize(nn, dim());
  for (int k = 0; k < dim(); ++k) {
    synthesis_.col(k) = Eigen::Map<const CVector>(elements_[static_cast<std::size_t>(k)].data(), nn);
  }
}

std::shared_ptr<const HermitianBasis> HermitianBasis::gell_mann(int n, Field field) {
  if (n < 1) {
    throw Error(Errc::invalid_dimension, "basis needs at least one level");
  }
  std::vector<CMatrix> els;
  std::vector<std::string> labels;
  const double s = 1.0 / std::sqrt(2.0);

  els.push_back(CMatrix::Identity(n, n) / std::sqrt(static_cast<double>(n)));
  labels.emplace_back("I");
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      CMatrix sym = CMatrix::Zero(n, n);
      sym(j, k) = s;
      sym(k, j) = s;
      els.push_back(sym);
      labels.push_back("S" + std::to_string(j) + std::to_string(k));
      if (field == Field::complex) {
        CMatrix anti = CMatrix::Zero(n, n);
        anti(j, k) = Complex(0.0, -s);
        anti(k, j) = Complex(0.0, s);
        els.push_back(anti);
        labels.push_back("A" + std::to_string(j) + std::to_string(k));
      }
    }
  }
  for (int l = 1; l < n; ++l) {
    CMatrix d = CMatrix::Zero(n, n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int j = 0; j < l; ++j) {
      d(j, j) = norm;
    }
    d(l, l) = -static_cast<double>(l) * norm;
    els.push_back(d);
    labels.push_back("D" + std::to_string(l));
  }
  return std::shared_ptr<const HermitianBasis>(new HermitianBasis(n, field, std::move(els), std::move(labels)));
}

std::shared_ptr<const HermitianBasis> HermitianBasis::product(const HermitianBasis& a, const HermitianBasis& b) {
  std::vector<CMatrix> els;
  std::vector<std::string> labels;
  els.reserve(static_cast<std::size_t>(a.dim() * b.dim()));
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < b.dim(); ++j) {
      els.push_back(kron(a.element(i), b.element(j)));
      labels.push_back(a.labels()[static_cast<std::size_t>(i)] + "*" + b.labels()[static_cast<std::size_t>(j)]);
    }
  }
  const Field field = (a.field() == Field::real && b.field() == Field::real) ? Field::real : Field::complex;
  return std::shared_ptr<const HermitianBasis>(
      new HermitianBasis(a.levels() * b.levels(), field, std::move(els), std::move(labels)));
}

CMatrix HermitianBasis::to_matrix(const Vector& coords) const {
  const CVector v = synthesis_ * coords.cast<Complex>();
  return Eigen::Map<const CMatrix>(v.data(), n_, n_);
}

Vector HermitianBasis::to_coords(const CMatrix& m) const {
  const Eigen::Index nn = static_cast<Eigen::Index>(n_) * n_;
  // Tr(B m) = vec(B)^H vec(m) for Hermitian B.
  return (synthesis_.adjoint() * Eigen::Map<const CVector>(m.data(), nn)).real();
}

}  // namespace typent
