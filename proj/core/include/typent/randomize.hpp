#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "typent/composite.hpp"
#include "typent/grouprep.hpp"
#include "typent/montecarlo.hpp"

namespace typent {

struct Prediction {
  double value = 0.0;
  std::string formula_id;
  std::vector<std::pair<std::string, double>> inputs;
};

// (K_A−1)/(K_A K_B−1) · (N_A N_B−1)/(N_A−1) · P₀.
Prediction predict_main(int ka, int kb, int na, int nb, double p0);
// (K_A−1)/(K_A K_B−1) · P₀ / P(φ^A⊗μ^B) with the denominator from the joint Gram.
Prediction predict_general(const Composite& comp, const Gram& gram_ab, double p0);
// predict_main with K = N^r on both sides.
Prediction predict_power_law(int r, int na, int nb, double p0);
// (K_A−1)/(K_AB−1) · P₀ / (P(φ⊗μ) − ‖μ^C‖²).
Prediction predict_nonlocaltomo(int ka, int kab, double p0, double p_phi_mu, double mu_c_norm_sq);

struct NonTomographicInputs {
  int ka = 0;
  int kab = 0;
  double p_phi_mu = 0.0;
  double mu_c_norm_sq = 0.0;
};

NonTomographicInputs nonlocaltomo_inputs(const Composite& comp, const Gram& gram_ab);

struct EstimateOptions {
  int n_samples = kDefaultSamples;
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool histogram = true;
};

// Per sample: a fixed-purity state (μ-interpolation of a sampled pure state),
// a global group sample, the marginal on A and its purity.
McReport estimate_expected_local_purity(const Composite& comp, const Gram& gram_a, const Gram& gram_ab, double p0,
                                        const EstimateOptions& options);
// Same, starting every sample from one given joint state.
McReport estimate_from_initial(const Composite& comp, const Gram& gram_a, const Gram& gram_ab, const Vector& initial,
                               const EstimateOptions& options);

struct OracleResult {
  double lhs = 0.0;
  double lhs_std_error = 0.0;
  double rhs = 0.0;
  McReport local_tr_purity;  // E Tr ρ_A²

  [[nodiscard]] double deviation_in_sigma() const;
};

// (E Tr ρ_A² − 2^{−n_A}) / (Tr φ² − 2^{−n}) from Pauli expectation values,
// against 2^{n_B} (K_A−1)/(K_AB−1).
OracleResult qubit_pauli_oracle(int na, int nb, double global_tr_purity, const EstimateOptions& options);

struct MarkovTail {
  double x = 0.0;
  double threshold = 0.0;
  double empirical = 0.0;
  double bound = 0.0;
  double slack = 0.0;
  bool pass = false;
};

// Prob{P ≥ 1/x} ≤ x · E P, using the report's histogram (the bin holding
// 1/x counts as tail, so the empirical value errs high).
MarkovTail markov_tail_check(const McReport& report, double x);

}  // namespace typent
