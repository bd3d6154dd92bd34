#include "typent/randomize.hpp"

#include <cmath>

#include "typent/error.hpp"
#include "typent/purity.hpp"

namespace typent {

namespace {

void require_unit_interval(double p0) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) {
    throw Error(Errc::range_error, "P0 must lie in [0, 1]");
  }
}

void require_purity_value(const Prediction& p) {
  if (!(p.value >= -1e-12 && p.value <= 1.0 + 1e-12)) {
    throw Error(Errc::range_error, "predicted purity " + std::to_string(p.value) + " outside [0, 1]");
  }
}

}  // namespace

Prediction predict_main(int ka, int kb, int na, int nb, double p0) {
  if (na < 2 || nb < 2 || ka < na || kb < nb) {
    throw Error(Errc::range_error, "need K >= N >= 2 on both parts");
  }
  require_unit_interval(p0);
  const double kad = ka;
  const double kbd = kb;
  const double nad = na;
  const double nbd = nb;
  Prediction p;
  p.formula_id = "main";
  p.value = (kad - 1.0) / (kad * kbd - 1.0) * (nad * nbd - 1.0) / (nad - 1.0) * p0;
  p.inputs = {{"ka", kad}, {"kb", kbd}, {"na", nad}, {"nb", nbd}, {"p0", p0}};
  require_purity_value(p);
  return p;
}

Prediction predict_general(const Composite& comp, const Gram& gram_ab, double p0) {
  if (comp.kind() != CompositeKind::tomographic) {
    throw Error(Errc::unsupported_composite, "use predict_nonlocaltomo for non-tomographic composites");
  }
  require_unit_interval(p0);
  const auto phi_mu = purity_pure_times_maxmixed(comp, gram_ab);
  const double ka = comp.a().dim();
  const double kb = comp.b().dim();
  Prediction p;
  p.formula_id = "general";
  p.value = (ka - 1.0) / (ka * kb - 1.0) * p0 / phi_mu.numeric;
  p.inputs = {{"ka", ka}, {"kb", kb}, {"p0", p0}, {"p_phi_mu", phi_mu.numeric}};
  require_purity_value(p);
  return p;
}

Prediction predict_power_law(int r, int na, int nb, double p0) {
  if (r < 1) {
    throw Error(Errc::range_error, "exponent must be a positive integer");
  }
  const auto power = [r](int n) {
    long long k = 1;
    for (int i = 0; i < r; ++i) {
      k *= n;
    }
    return static_cast<int>(k);
  };
  Prediction p = predict_main(power(na), power(nb), na, nb, p0);
  p.formula_id = "power-law";
  p.inputs = {{"r", static_cast<double>(r)}, {"na", static_cast<double>(na)}, {"nb", static_cast<double>(nb)},
              {"p0", p0}};
  return p;
}

Prediction predict_nonlocaltomo(int ka, int kab, double p0, double p_phi_mu, double mu_c_norm_sq) {
  require_unit_interval(p0);
  const double denom = p_phi_mu - mu_c_norm_sq;
  if (!(denom > 0.0)) {
    throw Error(Errc::degenerate_composite, "P(phi x mu) - |mu_C|^2 must be positive");
  }
  Prediction p;
  p.formula_id = "nonlocaltomo";
  p.value = (ka - 1.0) / (kab - 1.0) * p0 / denom;
  p.inputs = {{"ka", static_cast<double>(ka)},
              {"kab", static_cast<double>(kab)},
              {"p0", p0},
              {"p_phi_mu", p_phi_mu},
              {"mu_c_norm_sq", mu_c_norm_sq}};
  require_purity_value(p);
  return p;
}

NonTomographicInputs nonlocaltomo_inputs(const Composite& comp, const Gram& gram_ab) {
  NonTomographicInputs in;
  in.ka = comp.a().dim();
  in.kab = comp.joint().dim();
  in.p_phi_mu = purity_pure_times_maxmixed(comp, gram_ab).numeric;
  in.mu_c_norm_sq = gram_ab.norm_sq(mu_c(comp));
  return in;
}

McReport estimate_expected_local_purity(const Composite& comp, const Gram& gram_a, const Gram& gram_ab, double p0,
                                        const EstimateOptions& options) {
  require_unit_interval(p0);
  const auto& joint = comp.joint();
  const auto samples = run_samples(
      static_cast<std::size_t>(options.n_samples), options.seed, options.threads, [&](Rng& rng, std::size_t) {
        const Vector alpha = fixed_purity_state(joint, p0, joint.sample_pure(rng));
        const Vector omega = comp.global_group().draw(rng).apply(alpha);
        return SampleValue{purity(gram_a, comp.marginal_a(omega)), purity(gram_ab, omega)};
      });
  return summarize(samples, options.seed, options.histogram);
}

McReport estimate_from_initial(const Composite& comp, const Gram& gram_a, const Gram& gram_ab, const Vector& initial,
                               const EstimateOptions& options) {
  require_normalized(comp.joint(), initial);
  const auto samples = run_samples(
      static_cast<std::size_t>(options.n_samples), options.seed, options.threads, [&](Rng& rng, std::size_t) {
        const Vector omega = comp.global_group().draw(rng).apply(initial);
        return SampleValue{purity(gram_a, comp.marginal_a(omega)), purity(gram_ab, omega)};
      });
  return summarize(samples, options.seed, options.histogram);
}

double OracleResult::deviation_in_sigma() const {
  const double diff = std::abs(lhs - rhs);
  return lhs_std_error == 0.0 ? (diff == 0.0 ? 0.0 : INFINITY) : diff / lhs_std_error;
}

namespace {

CMatrix pauli(int which) {
  CMatrix p(2, 2);
  switch (which) {
    case 0: p << 1, 0, 0, 1; break;
    case 1: p << 0, 1, 1, 0; break;
    case 2: p << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: p << 1, 0, 0, -1; break;
  }
  return p;
}

}  // namespace

OracleResult qubit_pauli_oracle(int na, int nb, double global_tr_purity, const EstimateOptions& options) {
  if (na < 1 || nb < 1) {
    throw Error(Errc::range_error, "need at least one qubit on each side");
  }
  const int n = na + nb;
  const int dim_a = 1 << na;
  const int dim_b = 1 << nb;
  const int dim = 1 << n;
  const double floor_global = 1.0 / dim;
  const double floor_local = 1.0 / dim_a;
  if (std::abs(global_tr_purity - floor_global) < 1e-12) {
    throw Error(Errc::undefined_ratio, "global state is maximally mixed");
  }
  if (!(global_tr_purity > floor_global && global_tr_purity <= 1.0)) {
    throw Error(Errc::range_error, "Tr phi^2 must lie in (2^-n, 1]");
  }
  // Local Pauli strings g_A ⊗ I_B.
  std::vector<CMatrix> strings;
  for (int code = 0; code < (1 << (2 * na)); ++code) {
    CMatrix s = CMatrix::Identity(1, 1);
    for (int q = na - 1; q >= 0; --q) {
      s = kron(s, pauli((code >> (2 * q)) & 3));
    }
    strings.push_back(kron(s, CMatrix::Identity(dim_b, dim_b)));
  }
  const double p0 = purity_from_tr(global_tr_purity, dim);
  const double t = std::sqrt(p0);
  const double ratio_denominator = global_tr_purity - floor_global;

  const auto samples = run_samples(
      static_cast<std::size_t>(options.n_samples), options.seed, options.threads, [&](Rng& rng, std::size_t) {
        std::normal_distribution<double> g;
        CVector psi(dim);
        for (int i = 0; i < dim; ++i) {
          psi(i) = Complex(g(rng), g(rng));
        }
        psi.normalize();
        const CMatrix rho0 = t * psi * psi.adjoint() + (1.0 - t) * CMatrix::Identity(dim, dim) / double(dim);
        const CMatrix u = haar_unitary(dim, rng);
        const CMatrix rho = u * rho0 * u.adjoint();
        double sum_sq = 0.0;
        for (const auto& s : strings) {
          const double xi = (s * rho).trace().real();
          sum_sq += xi * xi;
        }
        return SampleValue{sum_sq / dim_a, tr_purity(rho)};
      });
  OracleResult out;
  out.local_tr_purity = summarize(samples, options.seed, options.histogram);
  out.lhs = (out.local_tr_purity.mean - floor_local) / ratio_denominator;
  out.lhs_std_error = out.local_tr_purity.std_error / ratio_denominator;
  const double ka = std::pow(4.0, na);
  const double kab = std::pow(4.0, n);
  out.rhs = std::pow(2.0, nb) * (ka - 1.0) / (kab - 1.0);
  out.local_tr_purity.prediction = floor_local + out.rhs * ratio_denominator;
  out.local_tr_purity.formula_id = "qubit-oracle";
  return out;
}

MarkovTail markov_tail_check(const McReport& report, double x) {
  if (!(x > 1.0)) {
    throw Error(Errc::range_error, "Markov tail needs x > 1");
  }
  if (!report.histogram) {
    throw Error(Errc::range_error, "Markov tail needs a histogram");
  }
  const auto& h = *report.histogram;
  MarkovTail m;
  m.x = x;
  m.threshold = 1.0 / x;
  std::uint64_t tail = 0;
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    if (h.bin_hi(i) > m.threshold + 1e-12) {
      tail += h.counts[i];
    }
  }
  const double total = static_cast<double>(h.total());
  m.empirical = static_cast<double>(tail) / total;
  m.bound = x * report.mean;
  m.slack = 3.0 * std::sqrt(m.empirical * (1.0 - m.empirical) / total);
  m.pass = m.empirical <= m.bound + m.slack;
  return m;
}

}  // namespace typent
