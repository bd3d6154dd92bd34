#include "typent/boxworld.hpp"

#include <cmath>
#include <numbers>

#include "typent/error.hpp"

namespace typent {

Matrix boxworld_matrix(const Vector& flat) {
  if (flat.size() != 9) {
    throw Error(Errc::invalid_dimension, "bipartite boxworld vectors have 9 entries");
  }
  Matrix m(3, 3);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m(i, j) = flat(3 * i + j);
    }
  }
  return m;
}

Vector boxworld_flat(const Matrix& m) {
  Vector v(9);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      v(3 * i + j) = m(i, j);
    }
  }
  return v;
}

Vector pr_box() {
  Matrix m(3, 3);
  m << 1, 0, 0, 0, 0.5, 0.5, 0, 0.5, -0.5;
  return boxworld_flat(m);
}

Vector boxworld_product(int r, int s, int t, int u) {
  const double h = 1.0 / std::numbers::sqrt2;
  Vector a(3);
  Vector b(3);
  a << 1, r * h, s * h;
  b << 1, t * h, u * h;
  return kron(a, b);
}

double boxworld_form(const Vector& omega, const BoxworldGram& gram) {
  Matrix hat = boxworld_matrix(omega);
  hat(0, 0) -= 1.0;
  const double corr = hat.bottomRightCorner(2, 2).squaredNorm();
  const double marg = hat.block(0, 1, 1, 2).squaredNorm() + hat.block(1, 0, 2, 1).squaredNorm();
  return gram.c * (gram.a * corr + gram.b * marg);
}

double boxworld_purity(const StateSpace& space, const Vector& omega, const BoxworldGram& gram) {
  if (space.kind() != SpaceKind::boxworld_bipartite) {
    throw Error(Errc::unsupported_space, "expects the bipartite boxworld space");
  }
  if (!space.is_state(omega)) {
    throw Error(Errc::cone_error, "not a normalized no-signalling state");
  }
  return boxworld_form(omega, gram);
}

ObstructionRecord boxworld_normalization_obstruction() {
  ObstructionRecord rec;
  const Vector product = boxworld_product(1, 1, 1, 1);
  const Vector pr = pr_box();
  rec.product_a = boxworld_form(product, {1.0, 0.0, 1.0 / 3.0});
  rec.product_b = boxworld_form(product, {0.0, 1.0, 1.0 / 3.0});
  rec.pr_a = boxworld_form(pr, {1.0, 0.0, 1.0 / 3.0});
  rec.pr_b = boxworld_form(pr, {0.0, 1.0, 1.0 / 3.0});
  Eigen::Matrix2d sys;
  sys << rec.product_a, rec.product_b, rec.pr_a, rec.pr_b;
  const Eigen::Vector2d sol = sys.fullPivLu().solve(Eigen::Vector2d(1.0, 1.0));
  rec.a = sol(0);
  rec.b = sol(1);
  if (std::abs(rec.b) <= kNormTolerance) {
    rec.b = 0.0;
  }
  rec.positivity_violated = !(rec.b > kNormTolerance);
  Vector mu_a(3);
  mu_a << 1, 0, 0;
  Vector plus(3);
  plus << 1, 1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2;
  const Vector degenerate = kron(mu_a, plus);
  rec.degenerate_purity = boxworld_form(degenerate, {rec.a, rec.b, 1.0 / 3.0});
  rec.degenerate_state_distance = (degenerate - kron(mu_a, mu_a)).norm();
  return rec;
}

bool is_extreme(const StateSpace& polytope, const Vector& state, double tol) {
  const auto& facets = polytope.facet_effects();
  if (facets.empty()) {
    throw Error(Errc::unsupported_space, "vertex test needs a polytope");
  }
  if (!polytope.is_state(state, tol)) {
    return false;
  }
  std::vector<Vector> active{polytope.order_unit()};
  for (const auto& e : facets) {
    if (std::abs(e.dot(state)) <= tol) {
      active.push_back(e);
    }
  }
  Matrix rows(static_cast<Eigen::Index>(active.size()), polytope.dim());
  for (std::size_t i = 0; i < active.size(); ++i) {
    rows.row(static_cast<Eigen::Index>(i)) = active[i].transpose();
  }
  Eigen::FullPivLU<Matrix> lu(rows);
  lu.setThreshold(1e-9);
  return lu.rank() == polytope.dim();
}

}  // namespace typent
