#include "typent/linalg.hpp"

#include <array>

namespace typent {

Rng make_stream(std::uint64_t seed, std::uint64_t index) {
  const std::array<std::uint32_t, 4> words{
      static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

Matrix kernel_basis(const Vector& u) {
  const Eigen::Index k = u.size();
  Eigen::HouseholderQR<Matrix> qr(u);
  Matrix q = qr.householderQ() * Matrix::Identity(k, k);
  return q.rightCols(k - 1);
}

}  // namespace typent
