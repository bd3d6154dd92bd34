#include "typent/faces.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "typent/error.hpp"
#include "typent/purity.hpp"

namespace typent {

Face::Face(Composite parent, CMatrix isometry)
    : parent_(std::move(parent)), kind_(FaceKind::quantum_subspace), isometry_(std::move(isometry)) {
  if (parent_.joint().kind() != SpaceKind::quantum) {
    throw Error(Errc::unsupported_composite, "subspace faces need a quantum composite");
  }
  levels_ = static_cast<int>(isometry_.cols());
  if (levels_ < 1) {
    throw Error(Errc::empty_face, "subspace is zero-dimensional");
  }
  projector_ = isometry_ * isometry_.adjoint();
  mu_f_ = parent_.joint().from_matrix(projector_ / static_cast<double>(levels_));
  const auto basis = parent_.joint().shared_basis();
  const CMatrix v = isometry_;
  const CMatrix complement = CMatrix::Identity(v.rows(), v.rows()) - projector_;
  const int ns = levels_;
  stabilizer_.is_finite = false;
  stabilizer_.draw = [basis, v, complement, ns](Rng& rng) {
    const CMatrix w = haar_unitary(ns, rng);
    return Transformation(CMatrix(v * w * v.adjoint() + complement), basis);
  };
}

Face::Face(Composite parent, std::vector<int> support)
    : parent_(std::move(parent)), kind_(FaceKind::classical_support), support_(std::move(support)) {
  if (parent_.joint().kind() != SpaceKind::classical) {
    throw Error(Errc::unsupported_composite, "support faces need a classical composite");
  }
  if (support_.empty()) {
    throw Error(Errc::empty_face, "empty support");
  }
  std::sort(support_.begin(), support_.end());
  const int k = parent_.joint().dim();
  if (support_.front() < 0 || support_.back() >= k ||
      std::adjacent_find(support_.begin(), support_.end()) != support_.end()) {
    throw Error(Errc::range_error, "support indices must be distinct joint outcomes");
  }
  levels_ = static_cast<int>(support_.size());
  mu_f_ = Vector::Zero(k);
  for (int i : support_) {
    mu_f_(i) = 1.0 / levels_;
  }
  const auto sup = support_;
  stabilizer_.is_finite = true;
  stabilizer_.draw = [sup, k](Rng& rng) {
    std::vector<int> shuffled = sup;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<int> image(static_cast<std::size_t>(k));
    std::iota(image.begin(), image.end(), 0);
    for (std::size_t i = 0; i < sup.size(); ++i) {
      image[static_cast<std::size_t>(sup[i])] = shuffled[i];
    }
    return Transformation(permutation_matrix(image));
  };
}

Vector Face::initial_state(double target) const {
  const double floor = 1.0 / levels_;
  if (!(target >= floor - 1e-12 && target <= 1.0 + 1e-12)) {
    throw Error(Errc::range_error, "target purity must lie in [1/N_F, 1]");
  }
  if (levels_ == 1) {
    return mu_f_;
  }
  const double s = std::sqrt(std::max(0.0, (target - floor) / (1.0 - floor)));
  Vector pure;
  if (kind_ == FaceKind::quantum_subspace) {
    const CVector psi = isometry_.col(0);
    pure = parent_.joint().from_matrix(psi * psi.adjoint());
  } else {
    pure = Vector::Unit(parent_.joint().dim(), support_.front());
  }
  return s * pure + (1.0 - s) * mu_f_;
}

bool Face::contains(const Vector& joint_state, double tol) const {
  if (!parent_.joint().is_state(joint_state, tol)) {
    return false;
  }
  if (kind_ == FaceKind::quantum_subspace) {
    const CMatrix rho = parent_.joint().to_matrix(joint_state);
    return (rho - projector_ * rho * projector_).cwiseAbs().maxCoeff() <= tol;
  }
  double inside = 0.0;
  for (int i : support_) {
    inside += joint_state(i);
  }
  return std::abs(inside - 1.0) <= tol;
}

namespace {

Composite qudit_pair(int na, int nb) {
  return compose(build_quantum(na), build_quantum(nb));
}

Face exchange_face(int n, int sign) {
  if (sign < 0 && n == 1) {
    throw Error(Errc::empty_face, "antisymmetric subspace of C^1 x C^1 is empty");
  }
  if (n < 2) {
    throw Error(Errc::invalid_dimension, "faces need n >= 2");
  }
  std::vector<CVector> cols;
  const double s = 1.0 / std::numbers::sqrt2;
  for (int i = 0; i < n; ++i) {
    if (sign > 0) {
      CVector v = CVector::Zero(n * n);
      v(i * n + i) = 1.0;
      cols.push_back(v);
    }
    for (int j = i + 1; j < n; ++j) {
      CVector v = CVector::Zero(n * n);
      v(i * n + j) = s;
      v(j * n + i) = sign > 0 ? s : -s;
      cols.push_back(v);
    }
  }
  CMatrix iso(n * n, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) {
    iso.col(static_cast<Eigen::Index>(c)) = cols[c];
  }
  return Face(qudit_pair(n, n), iso);
}

}  // namespace

Face sym_face(int n) { return exchange_face(n, +1); }

Face antisym_face(int n) { return exchange_face(n, -1); }

Face full_face(int na, int nb) {
  return Face(qudit_pair(na, nb), CMatrix(CMatrix::Identity(na * nb, na * nb)));
}

Face coin_record_face(int s0) {
  if (s0 < 1) {
    throw Error(Errc::empty_face, "record halves must be non-empty");
  }
  const int env = 2 * s0;
  std::vector<int> support;
  for (int j = 0; j < s0; ++j) {
    support.push_back(0 * env + j);
  }
  for (int j = s0; j < env; ++j) {
    support.push_back(1 * env + j);
  }
  return Face(compose(build_classical(2), build_classical(env)), std::move(support));
}

CMatrix face_bloch_projector(const Face& face, const CMatrix& m) {
  if (face.kind() != FaceKind::quantum_subspace) {
    throw Error(Errc::unsupported_space, "face Bloch projector is defined for quantum faces");
  }
  const CMatrix& pi = face.projector();
  const CMatrix inner = pi * m * pi;
  return inner - pi * (inner.trace() / pi.trace().real());
}

CMatrix default_probe(int na) {
  if (na < 2) {
    throw Error(Errc::invalid_dimension, "probe needs at least two levels");
  }
  CMatrix e = CMatrix::Zero(na, na);
  e(0, 0) = 1.0 / std::numbers::sqrt2;
  e(1, 1) = -1.0 / std::numbers::sqrt2;
  return e;
}

double probe_coefficient(const Face& face, const CMatrix& probe) {
  const int nb = face.parent().b().levels();
  const CMatrix& pi = face.projector();
  const CMatrix x = pi * kron(probe, CMatrix::Identity(nb, nb)) * pi;
  return (x * x).trace().real();
}

Prediction predict_qface(const Face& face, const CMatrix& probe, double tr_purity) {
  if (face.kind() != FaceKind::quantum_subspace) {
    throw Error(Errc::unsupported_space, "predict_qface needs a quantum face");
  }
  const int na = face.parent().a().levels();
  if (probe.rows() != na || probe.cols() != na) {
    throw Error(Errc::invalid_probe, "probe must act on A");
  }
  if ((probe - probe.adjoint()).cwiseAbs().maxCoeff() > 1e-9 || std::abs(probe.trace()) > 1e-9 ||
      std::abs((probe * probe).trace().real() - 1.0) > 1e-9) {
    throw Error(Errc::invalid_probe, "probe must be Hermitian, traceless, with Tr E^2 = 1");
  }
  const double ns = face.levels();
  const double nad = na;
  Prediction p;
  p.formula_id = "qface";
  const double coeff = probe_coefficient(face, probe);
  if (face.levels() == 1) {
    // A single state: no Bloch directions inside the face.
    p.value = 1.0 / nad;
  } else {
    p.value = 1.0 / nad + (nad * nad - 1.0) / (ns * ns - 1.0) * coeff * (tr_purity - 1.0 / ns);
  }
  p.inputs = {{"na", nad}, {"ns", ns}, {"probe_coefficient", coeff}, {"tr_purity", tr_purity}};
  return p;
}

Prediction predict_symm(int n, int sign, double tr_purity) {
  if (n < 2 || (sign != 1 && sign != -1)) {
    throw Error(Errc::range_error, "need n >= 2 and sign = +1 or -1");
  }
  const double nd = n;
  const double s = sign;
  Prediction p;
  p.formula_id = "symm";
  p.value = (1.0 + tr_purity) * (nd + s) / (nd * nd + s * nd + 2.0);
  p.inputs = {{"n", nd}, {"sign", s}, {"tr_purity", tr_purity}};
  return p;
}

Prediction predict_classical_face(const Face& face, const Vector& joint_state) {
  if (face.kind() != FaceKind::classical_support) {
    throw Error(Errc::unsupported_space, "needs a classical face");
  }
  const double nf = face.levels();
  double sum_sq = 0.0;
  for (int i : face.support()) {
    sum_sq += joint_state(i) * joint_state(i);
  }
  Prediction p;
  p.formula_id = "classical-face";
  p.value = nf == 1.0 ? 1.0 : nf / (nf - 1.0) * sum_sq - 1.0 / (nf - 1.0);
  p.inputs = {{"nf", nf}, {"collision", sum_sq}};
  return p;
}

McReport estimate_face_from_initial(const Face& face, const Vector& initial, const EstimateOptions& options) {
  if (!face.contains(initial)) {
    throw Error(Errc::range_error, "initial state is not in the face");
  }
  const auto& comp = face.parent();
  const bool quantum = face.kind() == FaceKind::quantum_subspace;
  const Gram gram_a = analytic_gram(comp.a());
  const auto samples = run_samples(
      static_cast<std::size_t>(options.n_samples), options.seed, options.threads, [&](Rng& rng, std::size_t) {
        const Vector omega = face.stabilizer().draw(rng).apply(initial);
        const Vector marginal = comp.marginal_a(omega);
        // Orthonormal Hermitian coordinates: Tr ρ² is the squared coordinate norm.
        const double local = quantum ? marginal.squaredNorm() : purity(gram_a, marginal);
        return SampleValue{local, omega.squaredNorm()};
      });
  return summarize(samples, options.seed, options.histogram);
}

McReport estimate_face_local_purity(const Face& face, double target, const EstimateOptions& options) {
  return estimate_face_from_initial(face, face.initial_state(target), options);
}

CoinRecordResult coin_with_record(int s0, const EstimateOptions& options) {
  const Face face = coin_record_face(s0);
  Vector initial = Vector::Zero(face.parent().joint().dim());
  for (int j = 0; j < s0; ++j) {
    initial(j) = 1.0 / s0;
  }
  CoinRecordResult out;
  out.report = estimate_face_from_initial(face, initial, options);
  out.prediction.formula_id = "coin-record";
  out.prediction.value = 1.0 / (2.0 * s0 - 1.0);
  out.prediction.inputs = {{"s0", static_cast<double>(s0)}};
  out.face_purity = predict_classical_face(face, initial);
  out.report.formula_id = out.prediction.formula_id;
  out.report.prediction = out.prediction.value;
  return out;
}

}  // namespace typent
