#include "typent/grouprep.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numbers>
#include <numeric>
#include <set>

#include "typent/error.hpp"

namespace typent {

CMatrix haar_unitary(int n, Rng& rng) {
  std::normal_distribution<double> g;
  CMatrix z(n, n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      z(i, j) = Complex(g(rng), g(rng)) / std::numbers::sqrt2;
    }
  }
  Eigen::HouseholderQR<CMatrix> qr(z);
  CMatrix q = qr.householderQ() * CMatrix::Identity(n, n);
  for (int j = 0; j < n; ++j) {
    const Complex d = qr.matrixQR()(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

Matrix haar_orthogonal(int m, Rng& rng) {
  std::normal_distribution<double> g;
  Matrix z(m, m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      z(i, j) = g(rng);
    }
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ() * Matrix::Identity(m, m);
  for (int j = 0; j < m; ++j) {
    if (qr.matrixQR()(j, j) < 0.0) {
      q.col(j) = -q.col(j);
    }
  }
  return q;
}

Transformation sample_haar_unitary(std::shared_ptr<const HermitianBasis> basis, Rng& rng) {
  const int n = basis->levels();
  return Transformation(haar_unitary(n, rng), std::move(basis));
}

Transformation sample_haar_unitary(int n, Rng& rng) {
  return sample_haar_unitary(HermitianBasis::gell_mann(n), rng);
}

Transformation sample_orthogonal(std::shared_ptr<const HermitianBasis> real_basis, Rng& rng) {
  const int m = real_basis->levels();
  return Transformation(CMatrix(haar_orthogonal(m, rng).cast<Complex>()), std::move(real_basis));
}

Matrix permutation_matrix(const std::vector<int>& image) {
  const auto n = static_cast<Eigen::Index>(image.size());
  Matrix p = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    p(image[static_cast<std::size_t>(i)], i) = 1.0;
  }
  return p;
}

Transformation sample_permutation(int n, Rng& rng) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return Transformation(permutation_matrix(image));
}

std::vector<Transformation> enumerate_permutations(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 0);
  std::vector<Transformation> out;
  do {
    out.emplace_back(permutation_matrix(image));
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

namespace {

double snap(double v) {
  for (double target : {-1.0, 0.0, 1.0}) {
    if (std::abs(v - target) < 1e-15) {
      return target;
    }
  }
  return v;
}

}  // namespace

std::vector<Transformation> enumerate_dihedral(int n) {
  std::vector<Transformation> out;
  Matrix flip = Matrix::Identity(3, 3);
  flip(2, 2) = -1.0;
  std::vector<Matrix> rotations;
  for (int k = 0; k < n; ++k) {
    const double a = 2.0 * std::numbers::pi * k / n;
    Matrix r = Matrix::Identity(3, 3);
    r(1, 1) = snap(std::cos(a));
    r(1, 2) = snap(-std::sin(a));
    r(2, 1) = snap(std::sin(a));
    r(2, 2) = snap(std::cos(a));
    rotations.push_back(r);
  }
  for (const auto& r : rotations) {
    out.emplace_back(r);
  }
  for (const auto& r : rotations) {
    out.emplace_back(Matrix(r * flip));
  }
  return out;
}

Transformation sample_dihedral(int n, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, 2 * n - 1);
  const int k = pick(rng);
  const double a = 2.0 * std::numbers::pi * (k % n) / n;
  Matrix r = Matrix::Identity(3, 3);
  r(1, 1) = snap(std::cos(a));
  r(1, 2) = snap(-std::sin(a));
  r(2, 1) = snap(std::sin(a));
  r(2, 2) = snap(std::cos(a));
  if (k >= n) {
    r.col(2) = -r.col(2);
  }
  return Transformation(r);
}

namespace {

CMatrix strip_phase(const CMatrix& u) {
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    const Complex z = u.data()[i];
    if (std::abs(z) > 1e-9) {
      return u * (std::conj(z) / std::abs(z));
    }
  }
  return u;
}

std::vector<long long> phase_key(const CMatrix& u) {
  std::vector<long long> key;
  key.reserve(static_cast<std::size_t>(2 * u.size()));
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    key.push_back(std::llround(u.data()[i].real() * 1e6));
    key.push_back(std::llround(u.data()[i].imag() * 1e6));
  }
  return key;
}

std::vector<CMatrix> closure(const std::vector<CMatrix>& generators, std::size_t expected) {
  const Eigen::Index d = generators.front().rows();
  std::vector<CMatrix> found;
  std::set<std::vector<long long>> seen;
  std::deque<CMatrix> frontier;
  const CMatrix id = CMatrix::Identity(d, d);
  seen.insert(phase_key(id));
  found.push_back(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    const CMatrix g = frontier.front();
    frontier.pop_front();
    for (const auto& h : generators) {
      CMatrix next = strip_phase(h * g);
      if (seen.insert(phase_key(next)).second) {
        found.push_back(next);
        frontier.push_back(std::move(next));
        if (found.size() > expected) {
          throw Error(Errc::internal_error, "Clifford closure exceeded its expected size");
        }
      }
    }
  }
  if (found.size() != expected) {
    throw Error(Errc::internal_error, "Clifford closure stopped at " + std::to_string(found.size()) + " elements");
  }
  return found;
}

CMatrix hadamard() {
  CMatrix h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::numbers::sqrt2;
}

CMatrix phase_gate() {
  CMatrix s = CMatrix::Identity(2, 2);
  s(1, 1) = Complex(0, 1);
  return s;
}

}  // namespace

std::vector<CMatrix> enumerate_clifford_1q() {
  return closure({hadamard(), phase_gate()}, 24);
}

std::vector<CMatrix> enumerate_clifford_2q() {
  const CMatrix id = CMatrix::Identity(2, 2);
  CMatrix cnot = CMatrix::Zero(4, 4);
  cnot(0, 0) = 1;
  cnot(1, 1) = 1;
  cnot(2, 3) = 1;
  cnot(3, 2) = 1;
  return closure({kron(hadamard(), id), kron(id, hadamard()), kron(phase_gate(), id), kron(id, phase_gate()), cnot},
                 11520);
}

std::vector<Transformation> clifford_conjugations(const std::vector<CMatrix>& unitaries,
                                                  std::shared_ptr<const HermitianBasis> basis) {
  std::vector<Transformation> out;
  out.reserve(unitaries.size());
  for (const auto& u : unitaries) {
    out.emplace_back(u, basis);
  }
  return out;
}

Gram::Gram(Matrix g, Vector order_unit, Vector max_mixed)
    : g_(std::move(g)), u_(std::move(order_unit)), mu_(std::move(max_mixed)) {}

Vector Gram::riesz(const Vector& covector) const {
  const Matrix v = kernel_basis(u_);
  const Matrix gv = v.transpose() * g_ * v;
  const Vector rv = gv.ldlt().solve(v.transpose() * covector);
  return v * rv;
}

namespace {

Matrix bloch_projector(const Vector& u, const Vector& mu) {
  return Matrix::Identity(u.size(), u.size()) - mu * u.transpose();
}

}  // namespace

Gram analytic_gram(const StateSpace& space) {
  const Matrix q = bloch_projector(space.order_unit(), space.max_mixed());
  double scale = 1.0;
  switch (space.kind()) {
    case SpaceKind::quantum:
    case SpaceKind::real_quantum:
    case SpaceKind::classical: {
      const double n = space.levels();
      scale = n / (n - 1.0);
      break;
    }
    case SpaceKind::polygon:
    case SpaceKind::boxworld_local:
      scale = 1.0;
      break;
    case SpaceKind::boxworld_bipartite:
      throw Error(Errc::unsupported_space, "bipartite boxworld is not transitive; see the boxworld module");
  }
  return Gram(scale * q.transpose() * q, space.order_unit(), space.max_mixed());
}

IrreducibilityReport check_irreducible(const GroupSampler& sampler, const Vector& order_unit,
                                       int trials, int samples, std::uint64_t seed) {
  const Matrix v = kernel_basis(order_unit);
  const auto bloch_dim = v.cols();
  IrreducibilityReport report;
  report.exact = sampler.enumerable();
  double worst_stat = 0.0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = make_stream(seed, static_cast<std::uint64_t>(t));
    std::normal_distribution<double> g;
    Vector coeff(bloch_dim);
    for (auto& c : coeff) {
      c = g(rng);
    }
    const Vector x = v * coeff;
    Matrix sum = Matrix::Zero(bloch_dim, bloch_dim);
    Matrix sum_sq = Matrix::Zero(bloch_dim, bloch_dim);
    std::size_t count = 0;
    auto accumulate = [&](const Transformation& tr) {
      const Vector y = v.transpose() * tr.apply(x);
      const Matrix outer = y * y.transpose();
      sum += outer;
      sum_sq += outer.cwiseProduct(outer);
      ++count;
    };
    if (sampler.enumerable()) {
      for (const auto& tr : *sampler.elements) {
        accumulate(tr);
      }
    } else {
      for (int s = 0; s < samples; ++s) {
        Rng draw_rng = make_stream(seed ^ 0x9e3779b97f4a7c15ULL, static_cast<std::uint64_t>(t) * samples + s);
        accumulate(sampler.draw(draw_rng));
      }
    }
    const double nsamp = static_cast<double>(count);
    const Matrix mean = sum / nsamp;
    const double c = mean.trace() / static_cast<double>(bloch_dim);
    const Matrix dev = mean - c * Matrix::Identity(bloch_dim, bloch_dim);
    report.max_deviation = std::max(report.max_deviation, dev.cwiseAbs().maxCoeff() / c);
    if (!sampler.enumerable()) {
      const Matrix var = (sum_sq / nsamp - mean.cwiseProduct(mean)) * (nsamp / (nsamp - 1.0));
      const double se = std::sqrt(var.maxCoeff() / nsamp);
      worst_stat = std::max(worst_stat, se / c);
    }
    report.samples = static_cast<int>(count);
  }
  report.threshold = report.exact ? 1e-8 : 10.0 * worst_stat;
  return report;
}

IrreducibilityReport check_irreducible(const StateSpace& space, int trials, int samples, std::uint64_t seed) {
  return check_irreducible(space.group(), space.order_unit(), trials, samples, seed);
}

Gram invariant_gram(const StateSpace& space, const GroupSampler& sampler, const GramOptions& options) {
  const auto diag = check_irreducible(sampler, space.order_unit(), 5, options.diagnostic_samples,
                                      options.seed + 1);
  if (!diag.irreducible()) {
    throw Error(Errc::reducible_space, "group average is not proportional to the identity (deviation " +
                                           std::to_string(diag.max_deviation) + ")");
  }
  const int k = space.dim();
  const Matrix q = bloch_projector(space.order_unit(), space.max_mixed());
  const Matrix e = options.reference ? *options.reference : Matrix::Identity(k, k);
  const Matrix eq = q.transpose() * e * q;
  Matrix g = Matrix::Zero(k, k);
  if (sampler.enumerable()) {
    for (const auto& tr : *sampler.elements) {
      const Matrix t = tr.matrix();
      g += t.transpose() * eq * t;
    }
    g /= static_cast<double>(sampler.elements->size());
  } else {
    for (int s = 0; s < options.n_avg; ++s) {
      Rng rng = make_stream(options.seed, static_cast<std::uint64_t>(s));
      const Matrix t = sampler.draw(rng).matrix();
      g += t.transpose() * eq * t;
    }
    g /= static_cast<double>(options.n_avg);
  }
  g = 0.5 * (g + g.transpose());
  Rng rng = make_stream(options.seed, ~std::uint64_t{0});
  const Vector phi = q * space.sample_pure(rng);
  const double norm = phi.dot(g * phi);
  if (!(norm > 0.0)) {
    throw Error(Errc::reducible_space, "pure state has zero norm under the averaged metric");
  }
  return Gram(g / norm, space.order_unit(), space.max_mixed());
}

Gram invariant_gram(const StateSpace& space, const GramOptions& options) {
  return invariant_gram(space, space.group(), options);
}

CMatrix swap_operator(int d) {
  CMatrix s = CMatrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      s(j * d + i, i * d + j) = 1.0;
    }
  }
  return s;
}

namespace {

const std::vector<CMatrix>& clifford_group(int k) {
  if (k == 1) {
    static const std::vector<CMatrix> c1 = enumerate_clifford_1q();
    return c1;
  }
  if (k == 2) {
    static const std::vector<CMatrix> c2 = enumerate_clifford_2q();
    return c2;
  }
  throw Error(Errc::range_error, "Clifford enumeration is provided for k = 1 and k = 2 only");
}

}  // namespace

CMatrix clifford_twirl(int k, const CMatrix& m) {
  const auto& group = clifford_group(k);
  CMatrix acc = CMatrix::Zero(m.rows(), m.cols());
  for (const auto& u : group) {
    const CMatrix v = kron(u, u);
    acc += v * m * v.adjoint();
  }
  return acc / static_cast<double>(group.size());
}

CMatrix two_design_rhs(int k, const CMatrix& m) {
  const int d = 1 << k;
  const CMatrix id = CMatrix::Identity(d * d, d * d);
  const CMatrix swap = swap_operator(d);
  const CMatrix ps = 0.5 * (id + swap);
  const CMatrix pa = 0.5 * (id - swap);
  const double dd = d;
  return (2.0 * (ps * m).trace() / (dd * (dd + 1.0))) * ps + (2.0 * (pa * m).trace() / (dd * (dd - 1.0))) * pa;
}

double two_design_check(int k) {
  const auto& group = clifford_group(k);
  const int d = 1 << k;
  const int big = d * d;
  const Eigen::Index dim = static_cast<Eigen::Index>(big) * big;
  // Superoperator of the twirl on column-major vec(M).
  CMatrix twirl = CMatrix::Zero(dim, dim);
  for (const auto& u : group) {
    const CMatrix v = kron(u, u);
    twirl += kron(CMatrix(v.conjugate()), v);
  }
  twirl /= static_cast<double>(group.size());
  double worst = 0.0;
  for (int b = 0; b < big; ++b) {
    for (int a = 0; a < big; ++a) {
      CMatrix unit = CMatrix::Zero(big, big);
      unit(a, b) = 1.0;
      const CMatrix rhs = two_design_rhs(k, unit);
      const CVector lhs = twirl.col(a + static_cast<Eigen::Index>(big) * b);
      const CVector rvec = Eigen::Map<const CVector>(rhs.data(), dim);
      worst = std::max(worst, (lhs - rvec).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

}  // namespace typent
