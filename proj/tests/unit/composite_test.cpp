#include <cmath>

#include <gtest/gtest.h>

#include <typent/typent.hpp>

#include "oracles.hpp"

namespace {

using namespace typent;

TEST(Composite, QuantumMarginalIsPartialTrace) {
  std::mt19937_64 rng(31);
  const Composite comp = compose(build_quantum(2), build_quantum(3));
  ASSERT_EQ(comp.kind(), CompositeKind::tomographic);
  ASSERT_EQ(comp.joint().dim(), 36);
  for (int i = 0; i < 5; ++i) {
    const oracle::CVec psi = oracle::gaussian_pure(6, rng);
    const oracle::CMat rho = psi * psi.adjoint();
    const Vector w = comp.joint().from_matrix(rho);
    EXPECT_LT((comp.a().to_matrix(comp.marginal_a(w)) - oracle::ptrace_b(rho, 2, 3)).norm(), 1e-12);
    EXPECT_LT((partial_trace_b(rho, 2, 3) - oracle::ptrace_b(rho, 2, 3)).norm(), 1e-13);
  }
}

TEST(Composite, MarginalsOfProductsAreFactors) {
  Rng rng = make_stream(1, 0);
  for (const Composite& comp : {compose(build_quantum(2), build_quantum(2)),
                                compose(build_classical(2), build_classical(5))}) {
    const Vector x = comp.a().sample_pure(rng);
    const Vector y = comp.b().sample_pure(rng);
    const Vector xy = comp.product(x, y);
    EXPECT_TRUE(comp.joint().is_state(xy));
    EXPECT_LT((comp.marginal_a(xy) - x).norm(), 1e-12);
    EXPECT_LT((comp.marginal_b(xy) - y).norm(), 1e-12);
  }
}

TEST(Composite, LocalActionFactorizes) {
  Rng rng = make_stream(2, 0);
  const Composite comp = compose(build_quantum(2), build_quantum(3));
  const Transformation ta = comp.a().group().draw(rng);
  const Transformation tb = comp.b().group().draw(rng);
  const Vector x = comp.a().sample_pure(rng);
  const Vector y = comp.b().sample_pure(rng);
  const Vector lhs = comp.local(ta, tb).apply(comp.product(x, y));
  EXPECT_LT((lhs - comp.product(ta.apply(x), tb.apply(y))).norm(), 1e-12);
}

TEST(Composite, FlatIndexOrdering) {
  const Composite comp = compose(build_classical(2), build_classical(3));
  EXPECT_EQ(comp.flat_index(0, 0), 0);
  EXPECT_EQ(comp.flat_index(1, 2), 5);
}

TEST(Composite, RealQuantumIsNotLocallyTomographic) {
  const Composite comp = compose(build_real_quantum(2), build_real_quantum(2));
  EXPECT_EQ(comp.kind(), CompositeKind::real_quantum);
  EXPECT_EQ(comp.a().dim(), 3);
  EXPECT_EQ(comp.joint().dim(), 10);
  EXPECT_GT(comp.joint().dim(), comp.a().dim() * comp.b().dim());
  Rng rng = make_stream(3, 0);
  const Vector w = comp.joint().sample_pure(rng);
  const CMatrix rho = comp.joint().to_matrix(w);
  EXPECT_LT((comp.a().to_matrix(comp.marginal_a(w)) - oracle::ptrace_b(rho, 2, 2)).norm(), 1e-12);
}

TEST(Composite, MixedTheoriesAreUnsupported) {
  try {
    (void)compose(build_quantum(2), build_classical(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unsupported_composite);
  }
}

TEST(PureTimesMaxMixed, AnalyticGram) {
  for (const Composite& comp :
       {compose(build_quantum(2), build_quantum(3)), compose(build_quantum(3), build_quantum(2)),
        compose(build_classical(2), build_classical(4)), compose(build_classical(3), build_classical(3))}) {
    const PhiMuPurity r = purity_pure_times_maxmixed(comp, analytic_gram(comp.joint()), 1e-12);
    const double na = comp.a().capacity(), nb = comp.b().capacity();
    EXPECT_NEAR(r.numeric, (na - 1) / (na * nb - 1), 1e-12);
  }
}

TEST(PureTimesMaxMixed, AveragedGram) {
  for (const Composite& comp : {compose(build_quantum(2), build_quantum(2)), compose(build_classical(2), build_classical(3))}) {
    const Gram g = invariant_gram(comp.joint(), GramOptions{4000, 2, std::nullopt, 2000});
    EXPECT_NO_THROW((void)purity_pure_times_maxmixed(comp, g, 1e-6));
  }
}

TEST(CenteredSubsystem, OffDiagonalIsMinusOneOverNMinusOne) {
  for (const StateSpace& s : {build_classical(2), build_classical(4), build_classical(8), build_quantum(2),
                              build_quantum(3), build_polygon(4), build_boxworld_local()}) {
    const auto w = capacity_witness(s);
    EXPECT_TRUE(w.centered);
    ASSERT_EQ(static_cast<int>(w.states.size()), s.capacity());
    const CenteredReport r = verify_centered_dynamical(s, analytic_gram(s), w);
    EXPECT_TRUE(r.pass) << to_string(s.kind()) << " " << r.max_gram_deviation;
    const double expected = -1.0 / (s.capacity() - 1.0);
    for (double v : r.off_diagonal) {
      EXPECT_NEAR(v, expected, 1e-10);
    }
  }
}

TEST(CenteredSubsystem, PentagonWitnessIsNotCentered) {
  const StateSpace p = build_polygon(5);
  const auto w = capacity_witness(p);
  EXPECT_FALSE(w.centered);
  EXPECT_FALSE(verify_centered_dynamical(p, analytic_gram(p), w).centered);
}

TEST(LiftPauli, EvaluatesTheMarginal) {
  Rng rng = make_stream(4, 0);
  const Composite comp = compose(build_quantum(2), build_quantum(2));
  const Gram ga = analytic_gram(comp.a());
  const Gram gab = analytic_gram(comp.joint());
  const PauliMap x = complete_pauli_set(comp.a(), ga).maps[0];
  const Vector lifted = lift_pauli(comp, gab, x);
  const Vector w = comp.joint().sample_pure(rng);
  EXPECT_NEAR(gab.inner(lifted, gab.project(w)), x(comp.marginal_a(w)), 1e-12);
}

TEST(MuC, VanishesForTomographicComposites) {
  EXPECT_LT(mu_c(compose(build_quantum(2), build_quantum(3))).norm(), 1e-14);
  EXPECT_LT(mu_c(compose(build_classical(2), build_classical(3))).norm(), 1e-14);
}

}  // namespace
