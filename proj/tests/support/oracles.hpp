#pragma once

// Reference computations that avoid the library's samplers, bases and
// closed forms. Everything here works on plain matrices and probability
// tables.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

// Uniform pure state from a normalized complex Gaussian vector.
inline CVec gaussian_pure(int d, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  CVec psi(d);
  for (int i = 0; i < d; ++i) {
    psi(i) = {normal(rng), normal(rng)};
  }
  return psi / psi.norm();
}

inline CMat ptrace_b(const CMat& rho, int da, int db) {
  CMat out = CMat::Zero(da, da);
  for (int a = 0; a < da; ++a) {
    for (int ap = 0; ap < da; ++ap) {
      for (int b = 0; b < db; ++b) {
        out(a, ap) += rho(a * db + b, ap * db + b);
      }
    }
  }
  return out;
}

inline double tr_sq(const CMat& rho) { return (rho * rho).trace().real(); }

// Normalized purity of an n-level density matrix.
inline double quantum_purity(const CMat& rho) {
  const double n = static_cast<double>(rho.rows());
  return (n * tr_sq(rho) - 1.0) / (n - 1.0);
}

inline double collision_purity(const RVec& p) {
  const double n = static_cast<double>(p.size());
  return (n * p.squaredNorm() - 1.0) / (n - 1.0);
}

// E Tr ρ_A² for Haar pure states on C^da ⊗ C^db, by integrating the
// fourth moment of the uniform complex sphere (Wick pairings of
// ψ_{ab} ψ*_{a'b} ψ_{a'b'} ψ*_{ab'}): E|.|⁴ pairings over d(d+1).
inline double complex_sphere_local_purity(int da, int db) {
  const int d = da * db;
  double sum = 0.0;
  for (int a = 0; a < da; ++a) {
    for (int ap = 0; ap < da; ++ap) {
      for (int b = 0; b < db; ++b) {
        for (int bp = 0; bp < db; ++bp) {
          // E[ψ_i ψ*_j ψ_k ψ*_l] = (δ_ij δ_kl + δ_il δ_kj)/(d(d+1))
          const int i = a * db + b, j = ap * db + b, k = ap * db + bp, l = a * db + bp;
          sum += (i == j && k == l ? 1.0 : 0.0) + (i == l && k == j ? 1.0 : 0.0);
        }
      }
    }
  }
  return sum / (d * (d + 1.0));
}

// Same for the real sphere: Isserlis gives three pairings over d(d+2).
inline double real_sphere_local_purity(int da, int db) {
  const int d = da * db;
  double sum = 0.0;
  for (int a = 0; a < da; ++a) {
    for (int ap = 0; ap < da; ++ap) {
      for (int b = 0; b < db; ++b) {
        for (int bp = 0; bp < db; ++bp) {
          const int i = a * db + b, j = ap * db + b, k = ap * db + bp, l = a * db + bp;
          sum += (i == j && k == l ? 1.0 : 0.0) + (i == k && j == l ? 1.0 : 0.0) + (i == l && j == k ? 1.0 : 0.0);
        }
      }
    }
  }
  return sum / (d * (d + 2.0));
}

inline std::array<CMat, 4> paulis() {
  using C = std::complex<double>;
  CMat i2 = CMat::Identity(2, 2);
  CMat x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, C(0, -1), C(0, 1), 0;
  z << 1, 0, 0, -1;
  return {i2, x, y, z};
}

inline CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

// Pauli string with digits in base 4 (0=I, 1=X, 2=Y, 3=Z), most significant first.
inline CMat pauli_string(int index, int qubits) {
  const auto p = paulis();
  CMat out = CMat::Identity(1, 1);
  for (int q = qubits - 1; q >= 0; --q) {
    out = kron(out, p[(index >> (2 * q)) & 3]);
  }
  return out;
}

// 2^{-k} Σ_g Tr(ρ g)² over all k-qubit Pauli strings, identity included.
inline double pauli_sum_tr_sq(const CMat& rho, int qubits) {
  double s = 0.0;
  for (int g = 0; g < (1 << (2 * qubits)); ++g) {
    const double t = (rho * pauli_string(g, qubits)).trace().real();
    s += t * t;
  }
  return s / static_cast<double>(1 << qubits);
}

// Conditional probability table p(a b | x y), index ((x*2 + y)*2 + a)*2 + b.
using Box = std::array<double, 16>;

inline int box_index(int a, int b, int x, int y) { return ((x * 2 + y) * 2 + a) * 2 + b; }

// Vertices of the two-input two-output no-signalling polytope by brute
// force: for every set of 8 positivity constraints made tight, solve the
// remaining equalities and keep feasible unique solutions.
inline std::vector<Box> no_signalling_vertices() {
  std::vector<RVec> eq_rows;
  std::vector<double> eq_rhs;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      RVec r = RVec::Zero(16);
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          r(box_index(a, b, x, y)) = 1.0;
        }
      }
      eq_rows.push_back(r);
      eq_rhs.push_back(1.0);
    }
  }
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) {
      RVec r = RVec::Zero(16);
      for (int b = 0; b < 2; ++b) {
        r(box_index(a, b, x, 0)) += 1.0;
        r(box_index(a, b, x, 1)) -= 1.0;
      }
      eq_rows.push_back(r);
      eq_rhs.push_back(0.0);
    }
  }
  for (int y = 0; y < 2; ++y) {
    for (int b = 0; b < 2; ++b) {
      RVec r = RVec::Zero(16);
      for (int a = 0; a < 2; ++a) {
        r(box_index(a, b, 0, y)) += 1.0;
        r(box_index(a, b, 1, y)) -= 1.0;
      }
      eq_rows.push_back(r);
      eq_rhs.push_back(0.0);
    }
  }

  std::vector<Box> out;
  std::vector<bool> pick(16, false);
  std::fill(pick.begin(), pick.begin() + 8, true);
  do {
    const int rows = static_cast<int>(eq_rows.size()) + 8;
    RMat m = RMat::Zero(rows, 16);
    RVec rhs = RVec::Zero(rows);
    for (std::size_t i = 0; i < eq_rows.size(); ++i) {
      m.row(static_cast<int>(i)) = eq_rows[i].transpose();
      rhs(static_cast<int>(i)) = eq_rhs[i];
    }
    int r = static_cast<int>(eq_rows.size());
    for (int k = 0; k < 16; ++k) {
      if (pick[k]) {
        m(r++, k) = 1.0;
      }
    }
    Eigen::FullPivLU<RMat> lu(m);
    if (lu.rank() < 16) {
      continue;
    }
    const RVec p = lu.solve(rhs);
    if ((m * p - rhs).norm() > 1e-9 || p.minCoeff() < -1e-9) {
      continue;
    }
    Box box{};
    for (int k = 0; k < 16; ++k) {
      box[k] = std::abs(p(k)) < 1e-12 ? 0.0 : p(k);
    }
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Box& q) {
      for (int k = 0; k < 16; ++k) {
        if (std::abs(q[k] - box[k]) > 1e-9) {
          return false;
        }
      }
      return true;
    });
    if (!seen) {
      out.push_back(box);
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace oracle
