#include <cmath>

#include <gtest/gtest.h>

#include <typent/typent.hpp>

#include "checks.hpp"
#include "oracles.hpp"

namespace {

using namespace typent;
using testing_support::within_sigma;

TEST(PredictMain, KnownValues) {
  EXPECT_NEAR(predict_main(4, 4, 2, 2, 1.0).value, 3.0 / 5.0, 1e-15);
  EXPECT_NEAR(predict_main(4, 64, 2, 8, 1.0).value, 3.0 / 17.0, 1e-15);
  EXPECT_NEAR(predict_main(2, 8, 2, 8, 0.3).value, 0.3, 1e-15);
  EXPECT_EQ(predict_main(4, 4, 2, 2, 1.0).formula_id, "main");
}

// Haar pure states: the closed form agrees with the fourth-moment integral.
TEST(PredictMain, MatchesSphereMoment) {
  for (auto [na, nb] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 4}}) {
    const double p = predict_main(na * na, nb * nb, na, nb, 1.0).value;
    EXPECT_NEAR(tr_from_purity(p, na), oracle::complex_sphere_local_purity(na, nb), 1e-14);
  }
}

TEST(PredictMain, Validation) {
  auto code = [](auto f) {
    try {
      f();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::internal_error;
  };
  EXPECT_EQ(code([] { (void)predict_main(4, 4, 1, 2, 1.0); }), Errc::range_error);
  EXPECT_EQ(code([] { (void)predict_main(1, 4, 2, 2, 1.0); }), Errc::range_error);
  EXPECT_EQ(code([] { (void)predict_main(4, 4, 2, 2, 1.5); }), Errc::range_error);
  EXPECT_EQ(code([] { (void)predict_main(4, 4, 2, 2, -0.1); }), Errc::range_error);
}

TEST(PredictGeneral, AgreesWithMainForTomographicComposites) {
  const Composite q = compose(build_quantum(2), build_quantum(3));
  EXPECT_NEAR(predict_general(q, analytic_gram(q.joint()), 0.7).value, predict_main(4, 9, 2, 3, 0.7).value, 1e-12);
  const Composite c = compose(build_classical(2), build_classical(3));
  EXPECT_NEAR(predict_general(c, analytic_gram(c.joint()), 0.7).value, 0.7, 1e-12);
}

TEST(PredictPowerLaw, IsMainWithKEqualNToTheR) {
  EXPECT_NEAR(predict_power_law(2, 2, 8, 1.0).value, predict_main(4, 64, 2, 8, 1.0).value, 1e-15);
  EXPECT_NEAR(predict_power_law(1, 3, 5, 0.4).value, 0.4, 1e-15);
  EXPECT_NEAR(predict_power_law(3, 2, 2, 1.0).value, predict_main(8, 8, 2, 2, 1.0).value, 1e-15);
}

TEST(PredictNonlocaltomo, RealQuantumMatchesRealSphereMoment) {
  const Composite comp = compose(build_real_quantum(2), build_real_quantum(2));
  const auto in = nonlocaltomo_inputs(comp, analytic_gram(comp.joint()));
  EXPECT_EQ(in.ka, 3);
  EXPECT_EQ(in.kab, 10);
  const Prediction p = predict_nonlocaltomo(in.ka, in.kab, 1.0, in.p_phi_mu, in.mu_c_norm_sq);
  EXPECT_NEAR(tr_from_purity(p.value, 2), oracle::real_sphere_local_purity(2, 2), 1e-12);
  EXPECT_NEAR(oracle::real_sphere_local_purity(2, 2), 5.0 / 6.0, 1e-15);
}

TEST(PredictNonlocaltomo, DegenerateDenominator) {
  try {
    (void)predict_nonlocaltomo(3, 10, 1.0, 0.2, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::degenerate_composite);
  }
}

TEST(Estimate, QuantumTwoByTwo) {
  const Composite comp = compose(build_quantum(2), build_quantum(2));
  const McReport r = estimate_expected_local_purity(comp, analytic_gram(comp.a()), analytic_gram(comp.joint()), 1.0,
                                                    EstimateOptions{4000, 17, 0, true});
  EXPECT_EQ(r.n_samples, 4000u);
  EXPECT_NEAR(r.realized_global_purity, 1.0, 1e-12);
  EXPECT_LT(r.global_purity_spread, 1e-10);
  EXPECT_TRUE(within_sigma(r, 0.6));
  ASSERT_TRUE(r.histogram.has_value());
  EXPECT_EQ(r.histogram->total(), 4000u);
}

TEST(Estimate, ClassicalPureStaysPure) {
  const Composite comp = compose(build_classical(2), build_classical(6));
  const McReport r = estimate_expected_local_purity(comp, analytic_gram(comp.a()), analytic_gram(comp.joint()), 1.0,
                                                    EstimateOptions{500, 3, 0, true});
  EXPECT_NEAR(r.mean, 1.0, 1e-12);
  EXPECT_LT(r.std_error, 1e-12);
}

TEST(Estimate, ClassicalCoinKeepsItsPurity) {
  const Composite comp = compose(build_classical(2), build_classical(8));
  for (double p0 : {0.3, 0.7}) {
    const McReport r = estimate_expected_local_purity(comp, analytic_gram(comp.a()), analytic_gram(comp.joint()),
                                                      p0, EstimateOptions{2000, 5, 0, false});
    EXPECT_TRUE(within_sigma(r, p0));
    EXPECT_FALSE(r.histogram.has_value());
  }
}

TEST(Estimate, ThreadCountDoesNotChangeTheReport) {
  const Composite comp = compose(build_quantum(2), build_quantum(3));
  const Gram ga = analytic_gram(comp.a()), gab = analytic_gram(comp.joint());
  const McReport one = estimate_expected_local_purity(comp, ga, gab, 0.8, EstimateOptions{600, 9, 1, true});
  const McReport four = estimate_expected_local_purity(comp, ga, gab, 0.8, EstimateOptions{600, 9, 4, true});
  EXPECT_EQ(one, four);
}

TEST(QubitOracle, PauliCoefficientsAgree) {
  const OracleResult r = qubit_pauli_oracle(1, 1, 1.0, EstimateOptions{3000, 2, 0, false});
  EXPECT_TRUE(within_sigma(r.lhs, r.lhs_std_error, r.rhs));
  EXPECT_TRUE(within_sigma(r.local_tr_purity, 0.8));
}

TEST(QubitOracle, UndefinedAtMaximallyMixed) {
  try {
    (void)qubit_pauli_oracle(1, 1, 0.25, EstimateOptions{10, 1, 0, false});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::undefined_ratio);
  }
}

// Expected local Tr ρ_A² from explicit Pauli expansions of the marginals.
TEST(QubitOracle, PauliExpansionOfPurity) {
  std::mt19937_64 rng(4);
  const oracle::CVec psi = oracle::gaussian_pure(8, rng);
  const oracle::CMat rho = psi * psi.adjoint();
  EXPECT_NEAR(oracle::pauli_sum_tr_sq(rho, 3), 1.0, 1e-12);
  const oracle::CMat ra = oracle::ptrace_b(rho, 2, 4);
  EXPECT_NEAR(oracle::pauli_sum_tr_sq(ra, 1), oracle::tr_sq(ra), 1e-12);
}

TEST(Markov, BoundHolds) {
  const Composite comp = compose(build_quantum(2), build_quantum(4));
  const McReport r = estimate_expected_local_purity(comp, analytic_gram(comp.a()), analytic_gram(comp.joint()), 1.0,
                                                    EstimateOptions{2000, 8, 0, true});
  for (double x : {2.0, 5.0, 10.0}) {
    const MarkovTail t = markov_tail_check(r, x);
    EXPECT_TRUE(t.pass);
    EXPECT_NEAR(t.threshold, 1.0 / x, 1e-15);
    EXPECT_NEAR(t.bound, x * r.mean, 1e-12);
    EXPECT_LE(t.empirical, t.bound);
  }
}

}  // namespace
