#include "minherm/rng.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

namespace minherm {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 over seed ^ golden-ratio-scrambled stream
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

CMatrix Rng::complex_gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
  CMatrix M(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) M(i, j) = complex_gaussian();
  return M;
}

CMatrix Rng::hermitian(Eigen::Index k) {
  return hermitize(complex_gaussian_matrix(k, k));
}

CMatrix Rng::positive_definite_sphere(Eigen::Index k) {
  CMatrix H = hermitian(k);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(H, Eigen::EigenvaluesOnly);
  H += (std::abs(es.eigenvalues()(0)) + 0.1) * CMatrix::Identity(k, k);
  return H / H.norm();
}

CMatrix Rng::tangent_at(const CMatrix& a) {
  CMatrix X = hermitian(a.rows());
  X -= hermitian_inner(X, a) * a;
  const double nrm = X.norm();
  return nrm > 0 ? CMatrix(X / nrm) : X;
}

CVector Rng::unit_vector(Eigen::Index k) {
  CVector v(k);
  for (Eigen::Index i = 0; i < k; ++i) v(i) = complex_gaussian();
  return v / v.norm();
}

CMatrix Rng::orthonormal_columns(Eigen::Index n, Eigen::Index k) {
  Eigen::HouseholderQR<CMatrix> qr(complex_gaussian_matrix(n, k));
  return qr.householderQ() * CMatrix::Identity(n, k);
}

OrthoPair Rng::random_pair(Eigen::Index n, Eigen::Index r, Eigen::Index s) {
  CMatrix Q = orthonormal_columns(n, r + s);
  return validate_pair(Q.leftCols(r), Q.rightCols(s));
}

CMatrix Rng::anti_hermitian_unit(Eigen::Index n) {
  CMatrix G = complex_gaussian_matrix(n, n);
  CMatrix H = 0.5 * (G - G.adjoint());
  return H / H.norm();
}

CMatrix unitary_exp(const CMatrix& hermitian_generator, double t) {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(hermitian_generator);
  const CVector phases =
      (Complex(0, t) * es.eigenvalues().cast<Complex>().array()).exp();
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

}  // namespace minherm
