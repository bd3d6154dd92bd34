#include "typent/purity.hpp"

#include <array>
#include <cmath>

#include "typent/error.hpp"

namespace typent {

double purity(const Gram& gram, const Vector& state) {
  if (state.size() != gram.dim()) {
    throw Error(Errc::invalid_dimension, "state has wrong length");
  }
  if (std::abs(gram.order_unit().dot(state) - 1.0) > kNormTolerance) {
    throw Error(Errc::normalization_error, "order unit does not evaluate to 1");
  }
  const Vector hat = state - gram.max_mixed();
  return gram.norm_sq(hat);
}

double purity(const StateSpace& space, const Gram& gram, const Vector& state) {
  require_normalized(space, state);
  return purity(gram, state);
}

double purity_from_tr(double tr_purity, int n) {
  const double nn = n;
  return nn / (nn - 1.0) * tr_purity - 1.0 / (nn - 1.0);
}

double tr_from_purity(double purity, int n) {
  const double nn = n;
  return ((nn - 1.0) * purity + 1.0) / nn;
}

double tr_purity(const CMatrix& rho) {
  return (rho * rho).trace().real();
}

Vector fixed_purity_state(const StateSpace& space, double p0, const Vector& pure) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) {
    throw Error(Errc::range_error, "purity must lie in [0, 1]");
  }
  const double t = std::sqrt(p0);
  return t * pure + (1.0 - t) * space.max_mixed();
}

Vector fixed_purity_state(const StateSpace& space, const Gram& /*gram*/, double p0, Rng& rng) {
  if (!(p0 >= 0.0 && p0 <= 1.0)) {
    throw Error(Errc::range_error, "purity must lie in [0, 1]");
  }
  return fixed_purity_state(space, p0, space.sample_pure(rng));
}

PauliMap::PauliMap(Vector representing, const Gram& gram)
    : rep_(std::move(representing)), covector_(gram.matrix() * rep_) {}

PauliMap pauli_from_direction(const Gram& gram, const Vector& direction) {
  const Vector hat = gram.project(direction);
  const double norm_sq = gram.norm_sq(hat);
  if (!(norm_sq > 1e-24)) {
    throw Error(Errc::degenerate_direction, "direction has zero length");
  }
  return PauliMap(hat / std::sqrt(norm_sq), gram);
}

std::string_view to_string(PauliProvenance p) noexcept {
  switch (p) {
    case PauliProvenance::clifford_orbit: return "clifford-orbit";
    case PauliProvenance::classical: return "classical";
    case PauliProvenance::polygon: return "polygon";
  }
  return "unknown";
}

Vector canonical_sign(const Vector& v, double tol) {
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > tol) {
      return v(i) < 0.0 ? Vector(-v) : v;
    }
  }
  return v;
}

PauliSet pauli_orbit(const std::vector<Transformation>& group, const Gram& gram, const PauliMap& seed_map,
                     PauliProvenance provenance) {
  PauliSet set;
  set.provenance = provenance;
  std::vector<Vector> reps;
  for (const auto& t : group) {
    const Vector v = canonical_sign(t.apply(seed_map.representing()));
    bool seen = false;
    for (const auto& r : reps) {
      if ((r - v).lpNorm<Eigen::Infinity>() < 1e-9) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      reps.push_back(v);
      set.maps.emplace_back(v, gram);
      set.labels.push_back("X" + std::to_string(reps.size()));
    }
  }
  return set;
}

namespace {

CMatrix pauli_matrix(int which) {
  CMatrix p(2, 2);
  switch (which) {
    case 0: p << 1, 0, 0, 1; break;
    case 1: p << 0, 1, 1, 0; break;
    case 2: p << 0, Complex(0, -1), Complex(0, 1), 0; break;
    default: p << 1, 0, 0, -1; break;
  }
  return p;
}

int qubit_count(int n) {
  int k = 0;
  while ((1 << k) < n) {
    ++k;
  }
  return (1 << k) == n ? k : -1;
}

}  // namespace

PauliSet complete_pauli_set(const StateSpace& space, const Gram& gram) {
  switch (space.kind()) {
    case SpaceKind::quantum: {
      const int k = qubit_count(space.levels());
      if (k < 1) {
        throw Error(Errc::unsupported_space, "Pauli strings need a power-of-two dimension");
      }
      static constexpr std::array<char, 4> names{'I', 'X', 'Y', 'Z'};
      PauliSet set;
      set.provenance = PauliProvenance::clifford_orbit;
      const int total = 1 << (2 * k);
      for (int code = 1; code < total; ++code) {
        CMatrix sigma = CMatrix::Identity(1, 1);
        std::string label;
        for (int q = k - 1; q >= 0; --q) {
          const int which = (code >> (2 * q)) & 3;
          sigma = kron(sigma, pauli_matrix(which));
          label.push_back(names[static_cast<std::size_t>(which)]);
        }
        set.maps.push_back(pauli_from_direction(gram, space.from_matrix(sigma)));
        set.labels.push_back(label);
      }
      return set;
    }
    case SpaceKind::classical: {
      const int n = space.levels();
      PauliSet set;
      set.provenance = PauliProvenance::classical;
      for (int i = 0; i < n; ++i) {
        set.maps.push_back(pauli_from_direction(gram, Vector::Unit(n, i)));
        set.labels.push_back("X" + std::to_string(i + 1));
      }
      return set;
    }
    case SpaceKind::polygon:
    case SpaceKind::boxworld_local: {
      const auto& group = space.group();
      const PauliMap first = pauli_from_direction(gram, Vector::Unit(3, 1));
      return pauli_orbit(*group.elements, gram, first, PauliProvenance::polygon);
    }
    default:
      throw Error(Errc::unsupported_space, "no complete Pauli set for this space");
  }
}

double purity_via_pauli_set(const PauliSet& set, const Gram& gram, const Vector& state) {
  if (set.maps.empty()) {
    throw Error(Errc::unsupported_space, "empty Pauli set");
  }
  double acc = 0.0;
  for (const auto& x : set.maps) {
    const double v = x(state);
    acc += v * v;
  }
  return (gram.dim() - 1.0) * acc / static_cast<double>(set.maps.size());
}

Estimate pauli_haar_average(const GroupSampler& sampler, const PauliMap& map, const Vector& state, int n_samples,
                            std::uint64_t seed) {
  Estimate est;
  if (sampler.enumerable()) {
    double acc = 0.0;
    for (const auto& t : *sampler.elements) {
      const double v = map(t.apply(state));
      acc += v * v;
    }
    est.samples = sampler.elements->size();
    est.value = acc / static_cast<double>(est.samples);
    est.exact = true;
    return est;
  }
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int s = 0; s < n_samples; ++s) {
    Rng rng = make_stream(seed, static_cast<std::uint64_t>(s));
    const double v = map(sampler.draw(rng).apply(state));
    sum += v * v;
    sum_sq += v * v * v * v;
  }
  const double n = n_samples;
  est.samples = static_cast<std::size_t>(n_samples);
  est.value = sum / n;
  const double var = (sum_sq - n * est.value * est.value) / (n - 1.0);
  est.std_error = std::sqrt(std::max(var, 0.0) / n);
  return est;
}

CollisionProbability max_collision_probability(const Gram& gram, const Vector& state) {
  CollisionProbability out;
  const double p = purity(gram, state);
  out.value = 0.5 * (1.0 + p);
  const Vector hat = state - gram.max_mixed();
  if (gram.norm_sq(hat) > 1e-24) {
    out.optimizer = pauli_from_direction(gram, hat);
  }
  return out;
}

double collision_probability(const PauliMap& map, const Vector& state) {
  const double x = map(state);
  return 0.5 * (1.0 + x * x);
}

}  // namespace typent
