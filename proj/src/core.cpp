#include "minherm/core.hpp"

#include <Eigen/QR>

namespace minherm {

RVector diag_conj(const CMatrix& V, const CMatrix& H) {
  return (V * H).cwiseProduct(V.conjugate()).rowwise().sum().real();
}

namespace {

// Thin QR with phases fixed so the output stays close to a nearly
// orthonormal input (Householder Q columns carry arbitrary unit factors).
CMatrix reorthonormalize(const CMatrix& M) {
  const Eigen::Index n = M.rows(), k = M.cols();
  Eigen::HouseholderQR<CMatrix> qr(M);
  CMatrix Q = qr.householderQ() * CMatrix::Identity(n, k);
  const CMatrix& QR = qr.matrixQR();
  for (Eigen::Index j = 0; j < k; ++j) {
    const Complex d = QR(j, j);
    if (std::abs(d) > 0) Q.col(j) *= d / std::abs(d);
  }
  return Q;
}

}  // namespace

OrthoPair validate_pair(const CMatrix& Vmap, const CMatrix& Wmap,
                        double ortho_tol) {
  if (ortho_tol <= 0) throw Error("validate_pair: ortho_tol must be positive");
  if (Vmap.rows() != Wmap.rows())
    throw DimensionMismatch("validate_pair: V and W have different row counts");
  const Eigen::Index n = Vmap.rows(), r = Vmap.cols(), s = Wmap.cols();
  if (r < 1 || s < 1)
    throw DimensionMismatch("validate_pair: V and W must each have a column");
  if (r + s > n)
    throw DimensionMismatch("validate_pair: dim V + dim W exceeds ambient dimension");
  if (!entries_finite(Vmap) || !entries_finite(Wmap))
    throw Error("validate_pair: non-finite entries");

  const double dev_v = max_abs(Vmap.adjoint() * Vmap - CMatrix::Identity(r, r));
  if (dev_v >= ortho_tol)
    throw NotOrthonormal("validate_pair: columns of V deviate from orthonormal by " +
                         std::to_string(dev_v));
  const double dev_w = max_abs(Wmap.adjoint() * Wmap - CMatrix::Identity(s, s));
  if (dev_w >= ortho_tol)
    throw NotOrthonormal("validate_pair: columns of W deviate from orthonormal by " +
                         std::to_string(dev_w));
  const double dev_vw = max_abs(Vmap.adjoint() * Wmap);
  if (dev_vw >= ortho_tol)
    throw RangesNotOrthogonal("validate_pair: ranges overlap, max |V* W| = " +
                              std::to_string(dev_vw));

  return OrthoPair{reorthonormalize(Vmap), reorthonormalize(Wmap)};
}

MomentVector hadamard_square(const CMatrix& v) {
  if (v.size() == 0) throw DimensionMismatch("hadamard_square: empty input");
  return v.rowwise().squaredNorm();
}

}  // namespace minherm
