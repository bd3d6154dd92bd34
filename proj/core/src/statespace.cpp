#include "typent/statespace.hpp"

#include <cmath>
#include <numbers>

#include "typent/error.hpp"
#include "typent/grouprep.hpp"

namespace typent {

std::string_view to_string(SpaceKind kind) noexcept {
  switch (kind) {
    case SpaceKind::quantum: return "quantum";
    case SpaceKind::classical: return "classical";
    case SpaceKind::polygon: return "polygon";
    case SpaceKind::real_quantum: return "real-quantum";
    case SpaceKind::boxworld_local: return "boxworld-local";
    case SpaceKind::boxworld_bipartite: return "boxworld-bipartite";
  }
  return "unknown";
}

StateSpace::StateSpace(Parts parts) : p_(std::make_shared<const Parts>(std::move(parts))) {}

bool StateSpace::in_cone(const Vector& x, double tol) const {
  switch (p_->kind) {
    case SpaceKind::quantum:
    case SpaceKind::real_quantum: {
      const CMatrix m = to_matrix(x);
      Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
      return es.eigenvalues().minCoeff() >= -tol;
    }
    case SpaceKind::classical:
      return x.minCoeff() >= -tol;
    case SpaceKind::polygon:
    case SpaceKind::boxworld_local:
    case SpaceKind::boxworld_bipartite:
      for (const auto& e : p_->facet_effects) {
        if (e.dot(x) < -tol) {
          return false;
        }
      }
      return true;
  }
  return false;
}

bool StateSpace::is_state(const Vector& x, double tol) const {
  return x.size() == dim() && std::abs(normalization(x) - 1.0) <= kNormTolerance && in_cone(x, tol);
}

Vector StateSpace::from_matrix(const CMatrix& rho) const {
  if (!p_->basis) {
    throw Error(Errc::unsupported_space, "matrix coordinates exist only for quantum spaces");
  }
  return p_->basis->to_coords(rho);
}

CMatrix StateSpace::to_matrix(const Vector& x) const {
  if (!p_->basis) {
    throw Error(Errc::unsupported_space, "matrix coordinates exist only for quantum spaces");
  }
  return p_->basis->to_matrix(x);
}

namespace {

StateSpace hermitian_space(std::shared_ptr<const HermitianBasis> basis) {
  const int n = basis->levels();
  const bool real = basis->field() == HermitianBasis::Field::real;
  StateSpace::Parts p;
  p.kind = real ? SpaceKind::real_quantum : SpaceKind::quantum;
  p.levels = n;
  p.capacity = n;
  p.order_unit = basis->to_coords(CMatrix::Identity(n, n));
  p.max_mixed = basis->to_coords(CMatrix::Identity(n, n) / static_cast<double>(n));
  p.labels = basis->labels();
  p.basis = basis;
  p.sample_pure = [basis, n, real](Rng& rng) {
    std::normal_distribution<double> g;
    CVector psi(n);
    for (int i = 0; i < n; ++i) {
      psi(i) = real ? Complex(g(rng), 0.0) : Complex(g(rng), g(rng));
    }
    psi.normalize();
    return basis->to_coords(psi * psi.adjoint());
  };
  p.group.is_finite = false;
  if (real) {
    p.group.draw = [basis](Rng& rng) { return sample_orthogonal(basis, rng); };
  } else {
    p.group.draw = [basis](Rng& rng) { return sample_haar_unitary(basis, rng); };
  }
  return StateSpace(std::move(p));
}

std::function<Vector(Rng&)> vertex_sampler(std::vector<Vector> vertices) {
  return [vs = std::move(vertices)](Rng& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
    return vs[pick(rng)];
  };
}

Vector vec3(double a, double b, double c) {
  Vector v(3);
  v << a, b, c;
  return v;
}

// The square in the representation with vertices (1, ±1/√2, ±1/√2).
std::vector<Vector> gbit_vertices() {
  const double s = 1.0 / std::numbers::sqrt2;
  return {vec3(1, s, s), vec3(1, s, -s), vec3(1, -s, s), vec3(1, -s, -s)};
}

std::vector<Vector> gbit_effects() {
  const double s = 1.0 / std::numbers::sqrt2;
  return {vec3(0.5, s, 0), vec3(0.5, -s, 0), vec3(0.5, 0, s), vec3(0.5, 0, -s)};
}

Matrix swap_matrix(int d) {
  Matrix s = Matrix::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      s(j * d + i, i * d + j) = 1.0;
    }
  }
  return s;
}

}  // namespace

StateSpace build_quantum(int n) {
  if (n < 2) {
    throw Error(Errc::invalid_dimension, "quantum space needs n >= 2");
  }
  return hermitian_space(HermitianBasis::gell_mann(n));
}

StateSpace build_quantum(std::shared_ptr<const HermitianBasis> basis) {
  if (!basis || basis->levels() < 2 || basis->field() != HermitianBasis::Field::complex) {
    throw Error(Errc::invalid_dimension, "quantum space needs a complex basis with n >= 2");
  }
  return hermitian_space(std::move(basis));
}

StateSpace build_real_quantum(int m) {
  if (m < 2) {
    throw Error(Errc::invalid_dimension, "real quantum space needs m >= 2");
  }
  return hermitian_space(HermitianBasis::gell_mann(m, HermitianBasis::Field::real));
}

StateSpace build_real_quantum(std::shared_ptr<const HermitianBasis> basis) {
  if (!basis || basis->levels() < 2 || basis->field() != HermitianBasis::Field::real) {
    throw Error(Errc::invalid_dimension, "real quantum space needs a real basis with m >= 2");
  }
  return hermitian_space(std::move(basis));
}

StateSpace build_classical(int n) {
  if (n < 2) {
    throw Error(Errc::invalid_dimension, "classical space needs n >= 2");
  }
  StateSpace::Parts p;
  p.kind = SpaceKind::classical;
  p.levels = n;
  p.capacity = n;
  p.order_unit = Vector::Ones(n);
  p.max_mixed = Vector::Constant(n, 1.0 / n);
  for (int i = 0; i < n; ++i) {
    p.labels.push_back("p" + std::to_string(i));
    p.vertices.push_back(Vector::Unit(n, i));
  }
  p.sample_pure = vertex_sampler(p.vertices);
  if (n <= 7) {
    p.group = finite_sampler(enumerate_permutations(n));
    p.group.draw = [n](Rng& rng) { return sample_permutation(n, rng); };
  } else {
    p.group.is_finite = true;
    p.group.draw = [n](Rng& rng) { return sample_permutation(n, rng); };
  }
  return StateSpace(std::move(p));
}

StateSpace build_polygon(int n) {
  if (n < 3) {
    throw Error(Errc::invalid_dimension, "polygon needs n >= 3");
  }
  StateSpace::Parts p;
  p.kind = SpaceKind::polygon;
  p.levels = n;
  p.capacity = 2;
  p.order_unit = vec3(1, 0, 0);
  p.max_mixed = vec3(1, 0, 0);
  p.labels = {"u", "x", "y"};
  const double c = std::cos(std::numbers::pi / n);
  for (int k = 0; k < n; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / n;
    p.vertices.push_back(vec3(1, std::cos(angle), std::sin(angle)));
    const double normal = 2.0 * std::numbers::pi * (k + 0.5) / n;
    p.facet_effects.push_back(vec3(c, -std::cos(normal), -std::sin(normal)) / (c + 1.0));
  }
  p.sample_pure = vertex_sampler(p.vertices);
  p.group = finite_sampler(enumerate_dihedral(n));
  return StateSpace(std::move(p));
}

StateSpace build_boxworld_local() {
  StateSpace::Parts p;
  p.kind = SpaceKind::boxworld_local;
  p.levels = 4;
  p.capacity = 2;
  p.order_unit = vec3(1, 0, 0);
  p.max_mixed = vec3(1, 0, 0);
  p.labels = {"1", "y", "z"};
  p.vertices = gbit_vertices();
  p.facet_effects = gbit_effects();
  p.sample_pure = vertex_sampler(p.vertices);
  p.group = finite_sampler(enumerate_dihedral(4));
  return StateSpace(std::move(p));
}

StateSpace build_boxworld_bipartite() {
  StateSpace::Parts p;
  p.kind = SpaceKind::boxworld_bipartite;
  p.levels = 24;
  p.capacity = 4;
  const Vector u = vec3(1, 0, 0);
  p.order_unit = kron(u, u);
  p.max_mixed = kron(u, u);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      p.labels.push_back("e" + std::to_string(i) + std::to_string(j));
    }
  }
  const auto effects = gbit_effects();
  for (const auto& e : effects) {
    for (const auto& f : effects) {
      p.facet_effects.push_back(kron(e, f));
    }
  }

  const auto local = enumerate_dihedral(4);
  const Matrix swap = swap_matrix(3);
  std::vector<Transformation> group;
  group.reserve(2 * local.size() * local.size());
  for (const auto& ga : local) {
    for (const auto& gb : local) {
      const Matrix t = kron(ga.matrix(), gb.matrix());
      group.emplace_back(t);
      group.emplace_back(Matrix(swap * t));
    }
  }

  const auto locals = gbit_vertices();
  for (const auto& a : locals) {
    for (const auto& b : locals) {
      p.vertices.push_back(kron(a, b));
    }
  }
  Matrix pr(3, 3);
  pr << 1, 0, 0, 0, 0.5, 0.5, 0, 0.5, -0.5;
  Vector pr_flat(9);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      pr_flat(i * 3 + j) = pr(i, j);
    }
  }
  const std::size_t products = p.vertices.size();
  for (const auto& g : group) {
    const Vector v = g.apply(pr_flat);
    bool seen = false;
    for (std::size_t k = products; k < p.vertices.size(); ++k) {
      if ((p.vertices[k] - v).lpNorm<Eigen::Infinity>() < 1e-12) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      p.vertices.push_back(v);
    }
  }
  p.sample_pure = vertex_sampler(p.vertices);
  p.group = finite_sampler(std::move(group));
  return StateSpace(std::move(p));
}

void require_normalized(const StateSpace& space, const Vector& state) {
  if (state.size() != space.dim()) {
    throw Error(Errc::invalid_dimension, "state has wrong length");
  }
  if (std::abs(space.normalization(state) - 1.0) > kNormTolerance) {
    throw Error(Errc::normalization_error, "order unit does not evaluate to 1");
  }
}

Vector bloch(const StateSpace& space, const Vector& state) {
  require_normalized(space, state);
  return state - space.max_mixed();
}

}  // namespace typent
