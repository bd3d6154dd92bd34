#include <cmath>

#include <gtest/gtest.h>

#include <typent/typent.hpp>

#include "checks.hpp"
#include "oracles.hpp"

namespace {

using namespace typent;

oracle::CMat random_mixed(int n, int rank, std::mt19937_64& rng) {
  oracle::CMat rho = oracle::CMat::Zero(n, n);
  std::uniform_real_distribution<double> w(0.0, 1.0);
  double total = 0.0;
  for (int k = 0; k < rank; ++k) {
    const double t = w(rng);
    const oracle::CVec psi = oracle::gaussian_pure(n, rng);
    rho += t * psi * psi.adjoint();
    total += t;
  }
  return rho / total;
}

TEST(Purity, QuantumMatchesTraceFormula) {
  std::mt19937_64 rng(21);
  for (int n : {2, 3, 4}) {
    const StateSpace q = build_quantum(n);
    const Gram g = analytic_gram(q);
    for (int i = 0; i < 20; ++i) {
      const oracle::CMat rho = random_mixed(n, 1 + i % n, rng);
      EXPECT_NEAR(purity(q, g, q.from_matrix(rho)), oracle::quantum_purity(rho), 1e-12);
      EXPECT_NEAR(tr_purity(rho), oracle::tr_sq(rho), 1e-12);
    }
  }
}

TEST(Purity, ClassicalIsNormalizedCollision) {
  const StateSpace c = build_classical(4);
  const Gram g = analytic_gram(c);
  Vector p(4);
  p << 0.1, 0.2, 0.3, 0.4;
  EXPECT_NEAR(purity(c, g, p), oracle::collision_purity(p), 1e-14);
}

TEST(Purity, PolygonIsSquaredRadius) {
  const StateSpace poly = build_polygon(6);
  const Gram g = analytic_gram(poly);
  const Vector w = 0.3 * poly.vertices()[0] + 0.7 * poly.vertices()[2];
  EXPECT_NEAR(purity(poly, g, w), w(1) * w(1) + w(2) * w(2), 1e-14);
}

TEST(Purity, RejectsUnnormalizedStates) {
  const StateSpace c = build_classical(3);
  const Gram g = analytic_gram(c);
  Vector bad(3);
  bad << 0.5, 0.2, 0.2;
  try {
    (void)purity(c, g, bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::normalization_error);
  }
}

TEST(Purity, QubitDiagonalExample) {
  const StateSpace q = build_quantum(2);
  CMatrix rho = CMatrix::Zero(2, 2);
  rho(0, 0) = 0.75;
  rho(1, 1) = 0.25;
  EXPECT_NEAR(purity(q, analytic_gram(q), q.from_matrix(rho)), 0.25, 1e-15);
}

TEST(Purity, TraceConversionsInvert) {
  for (int n : {2, 3, 8}) {
    for (double tr : {1.0 / n, 0.5, 1.0}) {
      EXPECT_NEAR(tr_from_purity(purity_from_tr(tr, n), n), tr, 1e-15);
    }
    EXPECT_NEAR(purity_from_tr(1.0, n), 1.0, 1e-15);
    EXPECT_NEAR(purity_from_tr(1.0 / n, n), 0.0, 1e-15);
  }
}

TEST(FixedPurity, HitsTarget) {
  Rng rng = make_stream(4, 0);
  for (const StateSpace& s : {build_quantum(3), build_classical(4), build_polygon(5), build_boxworld_local()}) {
    const Gram g = analytic_gram(s);
    for (double p0 : {0.0, 0.25, 0.8, 1.0}) {
      const Vector w = fixed_purity_state(s, g, p0, rng);
      EXPECT_TRUE(s.is_state(w));
      EXPECT_NEAR(purity(g, w), p0, 1e-12);
    }
  }
  try {
    (void)fixed_purity_state(build_quantum(2), analytic_gram(build_quantum(2)), 1.5, rng);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::range_error);
  }
}

TEST(PauliSet, SizesAndUnitNorm) {
  EXPECT_EQ(complete_pauli_set(build_quantum(2), analytic_gram(build_quantum(2))).size(), 3u);
  EXPECT_EQ(complete_pauli_set(build_quantum(4), analytic_gram(build_quantum(4))).size(), 15u);
  EXPECT_EQ(complete_pauli_set(build_quantum(8), analytic_gram(build_quantum(8))).size(), 63u);
  EXPECT_EQ(complete_pauli_set(build_classical(5), analytic_gram(build_classical(5))).size(), 5u);
  EXPECT_EQ(complete_pauli_set(build_boxworld_local(), analytic_gram(build_boxworld_local())).size(), 2u);
  EXPECT_EQ(complete_pauli_set(build_polygon(5), analytic_gram(build_polygon(5))).size(), 5u);
  for (const StateSpace& s : {build_polygon(4), build_polygon(5), build_quantum(4)}) {
    const Gram g = analytic_gram(s);
    for (const auto& m : complete_pauli_set(s, g).maps) {
      EXPECT_NEAR(g.norm_sq(m.representing()), 1.0, 1e-12);
      EXPECT_NEAR(m(s.max_mixed()), 0.0, 1e-12);
    }
  }
}

TEST(PauliSet, QubitMapsAreExpectationValues) {
  std::mt19937_64 rng(8);
  const StateSpace q = build_quantum(2);
  const Gram g = analytic_gram(q);
  const PauliSet set = complete_pauli_set(q, g);
  ASSERT_EQ(set.labels.size(), 3u);
  const oracle::CMat rho = random_mixed(2, 2, rng);
  const auto p = oracle::paulis();
  for (int k = 0; k < 3; ++k) {
    EXPECT_NEAR(set.maps[k](q.from_matrix(rho)), (rho * p[k + 1]).trace().real(), 1e-12) << set.labels[k];
  }
}

TEST(PauliSet, CompleteSetReproducesPurity) {
  std::mt19937_64 rng(9);
  const StateSpace q = build_quantum(4);
  const Gram g = analytic_gram(q);
  const PauliSet set = complete_pauli_set(q, g);
  for (int i = 0; i < 10; ++i) {
    const oracle::CMat rho = random_mixed(4, 2, rng);
    EXPECT_NEAR(purity_via_pauli_set(set, g, q.from_matrix(rho)), oracle::quantum_purity(rho), 1e-12);
  }
}

TEST(PauliSet, ProvenanceNames) {
  EXPECT_EQ(to_string(PauliProvenance::clifford_orbit), "clifford-orbit");
  EXPECT_EQ(to_string(complete_pauli_set(build_polygon(5), analytic_gram(build_polygon(5))).provenance), "polygon");
  EXPECT_EQ(to_string(complete_pauli_set(build_classical(3), analytic_gram(build_classical(3))).provenance),
            "classical");
}

TEST(Collision, QubitMeasurementStatistics) {
  std::mt19937_64 rng(10);
  const StateSpace q = build_quantum(2);
  const Gram g = analytic_gram(q);
  const PauliSet set = complete_pauli_set(q, g);
  const oracle::CMat rho = random_mixed(2, 2, rng);
  const Vector w = q.from_matrix(rho);
  const double x = (rho * oracle::paulis()[1]).trace().real();
  const double plus = (1 + x) / 2, minus = (1 - x) / 2;
  EXPECT_NEAR(collision_probability(set.maps[0], w), plus * plus + minus * minus, 1e-12);
  const CollisionProbability best = max_collision_probability(g, w);
  EXPECT_NEAR(best.value, (1.0 + oracle::quantum_purity(rho)) / 2.0, 1e-12);
  ASSERT_TRUE(best.optimizer.has_value());
  EXPECT_NEAR(collision_probability(*best.optimizer, w), best.value, 1e-12);
}

TEST(Collision, MaximallyMixedHasNoOptimizer) {
  const StateSpace q = build_quantum(3);
  const CollisionProbability best = max_collision_probability(analytic_gram(q), q.max_mixed());
  EXPECT_DOUBLE_EQ(best.value, 0.5);
  EXPECT_FALSE(best.optimizer.has_value());
}

TEST(GroupAverage, ExactOverFiniteGroups) {
  Rng rng = make_stream(5, 0);
  for (const StateSpace& s : {build_classical(4), build_polygon(5), build_boxworld_local()}) {
    const Gram g = analytic_gram(s);
    const PauliSet set = complete_pauli_set(s, g);
    const Vector w = fixed_purity_state(s, g, 0.6, rng);
    const Estimate e = pauli_haar_average(s.group(), set.maps.front(), w, 100, 1);
    EXPECT_TRUE(e.exact);
    EXPECT_NEAR(e.value, 0.6 / (s.dim() - 1), 1e-12);
  }
}

TEST(GroupAverage, HaarWithinThreeSigma) {
  Rng rng = make_stream(6, 0);
  const StateSpace q = build_quantum(3);
  const Gram g = analytic_gram(q);
  const PauliMap map = pauli_from_direction(g, q.sample_pure(rng) - q.max_mixed());
  EXPECT_NEAR(g.norm_sq(map.representing()), 1.0, 1e-12);
  const Vector w = q.sample_pure(rng);
  const Estimate e = pauli_haar_average(q.group(), map, w, 10000, 12);
  EXPECT_FALSE(e.exact);
  EXPECT_TRUE(testing_support::within_sigma(e.value, e.std_error, 1.0 / 8.0));
}

}  // namespace
