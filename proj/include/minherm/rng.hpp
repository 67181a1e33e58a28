#pragma once

#include "minherm/core.hpp"

#include <cstdint>
#include <random>

namespace minherm {

/// Mixes a seed with a stream index so that parallel workers (descent
/// restarts, campaign trials) draw from independent, reproducible streams.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic random source for matrices and subspace pairs.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  Rng(std::uint64_t seed, std::uint64_t stream) : engine_(mix_seed(seed, stream)) {}

  double gaussian() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);  // inclusive

  Complex complex_gaussian() { return {gaussian(), gaussian()}; }

  CMatrix complex_gaussian_matrix(Eigen::Index rows, Eigen::Index cols);
  CMatrix hermitian(Eigen::Index k);

  /// Positive definite hermitian point on the Frobenius unit sphere:
  /// symmetrized gaussian, shifted by (|lambda_min|+0.1) I, then normalized.
  CMatrix positive_definite_sphere(Eigen::Index k);

  /// Hermitian tangent vector at a (unit Frobenius a): orthogonal to a in the
  /// trace inner product, unit norm.
  CMatrix tangent_at(const CMatrix& a);

  CVector unit_vector(Eigen::Index k);

  /// n x k matrix with exactly orthonormal columns (QR of a gaussian).
  CMatrix orthonormal_columns(Eigen::Index n, Eigen::Index k);

  /// Random orthogonal pair of subspaces of dimensions r and s in C^n.
  OrthoPair random_pair(Eigen::Index n, Eigen::Index r, Eigen::Index s);

  /// Anti-hermitian matrix of unit Frobenius norm.
  CMatrix anti_hermitian_unit(Eigen::Index n);

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Unitary exp(i t K) for hermitian K, via eigendecomposition.
CMatrix unitary_exp(const CMatrix& hermitian_generator, double t);

}  // namespace minherm
