#include "typent/composite.hpp"

#include <cmath>

#include "typent/error.hpp"

namespace typent {

namespace {

Matrix contraction_a(int ka, const Vector& ub) {
  const auto kb = ub.size();
  Matrix m = Matrix::Zero(ka, ka * kb);
  for (int i = 0; i < ka; ++i) {
    m.block(i, i * kb, 1, kb) = ub.transpose();
  }
  return m;
}

Matrix contraction_b(const Vector& ua, int kb) {
  const auto ka = ua.size();
  Matrix m = Matrix::Zero(kb, ka * kb);
  for (Eigen::Index i = 0; i < ka; ++i) {
    m.block(0, i * kb, kb, kb) = ua(i) * Matrix::Identity(kb, kb);
  }
  return m;
}

}  // namespace

Composite::Composite(StateSpace a, StateSpace b, StateSpace joint, CompositeKind kind)
    : a_(std::move(a)), b_(std::move(b)), joint_(std::move(joint)), kind_(kind) {
  if (kind_ == CompositeKind::tomographic) {
    marg_a_ = contraction_a(a_.dim(), b_.order_unit());
    marg_b_ = contraction_b(a_.order_unit(), b_.dim());
    return;
  }
  const int da = a_.levels();
  const int db = b_.levels();
  const int k = joint_.dim();
  marg_a_.resize(a_.dim(), k);
  marg_b_.resize(b_.dim(), k);
  const auto* basis = joint_.hermitian_basis();
  for (int c = 0; c < k; ++c) {
    const CMatrix& e = basis->element(c);
    marg_a_.col(c) = a_.from_matrix(partial_trace_b(e, da, db));
    marg_b_.col(c) = b_.from_matrix(partial_trace_a(e, da, db));
  }
}

int Composite::flat_index(int i, int j) const {
  if (kind_ != CompositeKind::tomographic) {
    throw Error(Errc::unsupported_composite, "no tensor index map for a non-tomographic composite");
  }
  return i * b_.dim() + j;
}

Vector Composite::product(const Vector& x, const Vector& y) const {
  if (kind_ == CompositeKind::tomographic) {
    return kron(x, y);
  }
  return joint_.from_matrix(kron(a_.to_matrix(x), b_.to_matrix(y)));
}

Vector Composite::marginal_a(const Vector& joint_state) const { return marg_a_ * joint_state; }

Vector Composite::marginal_b(const Vector& joint_state) const { return marg_b_ * joint_state; }

Transformation Composite::local(const Transformation& ta, const Transformation& tb) const {
  if (kind_ == CompositeKind::tomographic) {
    return Transformation(Matrix(kron(ta.matrix(), tb.matrix())));
  }
  if (!ta.unitary() || !tb.unitary()) {
    throw Error(Errc::unsupported_composite, "local maps on the real composite must be conjugations");
  }
  return Transformation(CMatrix(kron(*ta.unitary(), *tb.unitary())), joint_.shared_basis());
}

Composite compose(const StateSpace& a, const StateSpace& b) {
  if (a.kind() == SpaceKind::quantum && b.kind() == SpaceKind::quantum) {
    auto basis = HermitianBasis::product(*a.hermitian_basis(), *b.hermitian_basis());
    return Composite(a, b, build_quantum(std::move(basis)), CompositeKind::tomographic);
  }
  if (a.kind() == SpaceKind::classical && b.kind() == SpaceKind::classical) {
    return Composite(a, b, build_classical(a.levels() * b.levels()), CompositeKind::tomographic);
  }
  if (a.kind() == SpaceKind::real_quantum && b.kind() == SpaceKind::real_quantum) {
    return Composite(a, b, build_real_quantum(a.levels() * b.levels()), CompositeKind::real_quantum);
  }
  throw Error(Errc::unsupported_composite, std::string("cannot compose ") + std::string(to_string(a.kind())) +
                                               " with " + std::string(to_string(b.kind())));
}

CMatrix partial_trace_b(const CMatrix& rho, int da, int db) {
  CMatrix out = CMatrix::Zero(da, da);
  for (int i = 0; i < da; ++i) {
    for (int k = 0; k < da; ++k) {
      Complex acc = 0.0;
      for (int j = 0; j < db; ++j) {
        acc += rho(i * db + j, k * db + j);
      }
      out(i, k) = acc;
    }
  }
  return out;
}

CMatrix partial_trace_a(const CMatrix& rho, int da, int db) {
  CMatrix out = CMatrix::Zero(db, db);
  for (int j = 0; j < db; ++j) {
    for (int l = 0; l < db; ++l) {
      Complex acc = 0.0;
      for (int i = 0; i < da; ++i) {
        acc += rho(i * db + j, i * db + l);
      }
      out(j, l) = acc;
    }
  }
  return out;
}

namespace {

Vector vec3(double a, double b, double c) {
  Vector v(3);
  v << a, b, c;
  return v;
}

}  // namespace

ClassicalSubsystemWitness capacity_witness(const StateSpace& space) {
  ClassicalSubsystemWitness w;
  switch (space.kind()) {
    case SpaceKind::quantum:
    case SpaceKind::real_quantum: {
      const int n = space.levels();
      for (int k = 0; k < n; ++k) {
        CMatrix p = CMatrix::Zero(n, n);
        p(k, k) = 1.0;
        const Vector c = space.from_matrix(p);
        w.states.push_back(c);
        w.effects.push_back(c);
      }
      break;
    }
    case SpaceKind::classical:
      for (int k = 0; k < space.levels(); ++k) {
        w.states.push_back(Vector::Unit(space.dim(), k));
        w.effects.push_back(Vector::Unit(space.dim(), k));
      }
      break;
    case SpaceKind::polygon: {
      const int n = space.levels();
      const auto& v = space.vertices();
      if (n % 2 == 0) {
        w.states = {v[0], v[static_cast<std::size_t>(n / 2)]};
        w.effects = {vec3(0.5, 0.5, 0.0), vec3(0.5, -0.5, 0.0)};
      } else {
        // Vertex 0 against the far vertex (n−1)/2, separated by a facet-parallel effect.
        const int m = (n - 1) / 2;
        const double c = v[static_cast<std::size_t>(m)](1);
        const Vector e = vec3(-c, 1.0, 0.0) / (1.0 - c);
        w.states = {v[0], v[static_cast<std::size_t>(m)]};
        w.effects = {e, space.order_unit() - e};
      }
      break;
    }
    case SpaceKind::boxworld_local: {
      const double s = 1.0 / std::sqrt(2.0);
      const Vector y = vec3(0.5, s, 0.0);
      w.states = {vec3(1, s, s), vec3(1, -s, -s)};
      w.effects = {y, space.order_unit() - y};
      break;
    }
    case SpaceKind::boxworld_bipartite: {
      const auto local = capacity_witness(build_boxworld_local());
      for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
          w.states.push_back(kron(local.states[i], local.states[j]));
          w.effects.push_back(kron(local.effects[i], local.effects[j]));
        }
      }
      break;
    }
  }
  Vector mean = Vector::Zero(space.dim());
  for (const auto& s : w.states) {
    mean += s;
  }
  mean /= static_cast<double>(w.states.size());
  w.centered = (mean - space.max_mixed()).lpNorm<Eigen::Infinity>() < 1e-9;
  return w;
}

CenteredReport verify_centered_dynamical(const StateSpace& space, const Gram& gram,
                                         const ClassicalSubsystemWitness& witness, double tol) {
  CenteredReport r;
  const std::size_t n = witness.states.size();
  Vector mean = Vector::Zero(space.dim());
  Vector effect_sum = Vector::Zero(space.dim());
  for (std::size_t i = 0; i < n; ++i) {
    mean += witness.states[i];
    effect_sum += witness.effects[i];
    for (std::size_t j = 0; j < n; ++j) {
      const double target = i == j ? 1.0 : 0.0;
      r.witness_deviation =
          std::max(r.witness_deviation, std::abs(witness.effects[i].dot(witness.states[j]) - target));
    }
  }
  mean /= static_cast<double>(n);
  r.witness_deviation = std::max(r.witness_deviation, (effect_sum - space.order_unit()).lpNorm<Eigen::Infinity>());
  r.center_deviation = (mean - space.max_mixed()).lpNorm<Eigen::Infinity>();
  r.centered = r.center_deviation <= tol;
  r.expected_off_diagonal = -1.0 / (static_cast<double>(n) - 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const Vector hi = bloch(space, witness.states[i]);
    for (std::size_t j = 0; j < n; ++j) {
      const double g = gram.inner(hi, bloch(space, witness.states[j]));
      if (i == j) {
        r.max_gram_deviation = std::max(r.max_gram_deviation, std::abs(g - 1.0));
      } else {
        r.off_diagonal.push_back(g);
        r.max_gram_deviation = std::max(r.max_gram_deviation, std::abs(g - r.expected_off_diagonal));
      }
    }
  }
  r.pass = r.centered && r.witness_deviation <= tol && r.max_gram_deviation <= tol;
  return r;
}

PhiMuPurity purity_pure_times_maxmixed(const Composite& comp, const Gram& gram_ab, double tol) {
  const auto witness = capacity_witness(comp.a());
  const Vector state = comp.product(witness.states.front(), comp.b().max_mixed());
  PhiMuPurity out;
  out.numeric = purity(gram_ab, state);
  const double na = comp.a().capacity();
  const double nb = comp.b().capacity();
  out.closed_form = (na - 1.0) / (na * nb - 1.0);
  if (std::abs(out.numeric - out.closed_form) > tol) {
    throw Error(Errc::inconsistency_error, "P(phi x mu) = " + std::to_string(out.numeric) + ", expected " +
                                               std::to_string(out.closed_form));
  }
  return out;
}

Vector mu_c(const Composite& comp) {
  return comp.joint().max_mixed() - comp.product(comp.a().max_mixed(), comp.b().max_mixed());
}

Vector lift_pauli(const Composite& comp, const Gram& gram_ab, const PauliMap& local_map) {
  const Vector covector = comp.marginal_a_map().transpose() * local_map.covector();
  return gram_ab.riesz(covector);
}

}  // namespace typent
