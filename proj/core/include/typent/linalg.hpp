#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace typent {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using Complex = std::complex<double>;

using Rng = std::mt19937_64;

// Independent stream for sample `index` of a run seeded with `seed`.
// Streams depend only on (seed, index), never on scheduling.
Rng make_stream(std::uint64_t seed, std::uint64_t index);

// Kronecker product of dense matrices, (a ⊗ b)(i*rb + k, j*cb + l) = a(i,j) b(k,l).
template <class Derived1, class Derived2>
auto kron(const Eigen::MatrixBase<Derived1>& a, const Eigen::MatrixBase<Derived2>& b) {
  using Scalar = typename Derived1::Scalar;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b.template cast<Scalar>();
    }
  }
  return out;
}

// Orthonormal basis (columns) of the kernel of the covector `u`.
Matrix kernel_basis(const Vector& u);

}  // namespace typent
