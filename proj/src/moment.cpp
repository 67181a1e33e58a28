#include "minherm/moment.hpp"

#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>

namespace minherm {

CMatrix orthogonalize_same_moment(const CMatrix& v, double rank_rel_tol) {
  if (v.size() == 0) throw DimensionMismatch("orthogonalize_same_moment: empty input");
  Eigen::JacobiSVD<CMatrix> svd(v, Eigen::ComputeThinU);
  const RVector& sv = svd.singularValues();
  const double cutoff = rank_rel_tol * sv(0);
  Eigen::Index t = 0;
  while (t < sv.size() && sv(t) > cutoff) ++t;
  if (t == 0 || sv(0) == 0.0)
    throw ZeroInput("orthogonalize_same_moment: input has no numerical rank");
  return svd.matrixU().leftCols(t) * sv.head(t).asDiagonal();
}

SupportCertificate support_certificate(const CMatrix& columns, const CVector& w,
                                       double det_tol_scale, double cert_tol) {
  const Eigen::Index n = columns.rows();
  if (columns.cols() != n)
    throw DimensionMismatch("support_certificate: system must be square (n columns)");
  if (w.size() != n)
    throw DimensionMismatch("support_certificate: w has wrong length");

  SupportCertificate cert;
  cert.system = columns.cwiseAbs2();
  cert.rhs = w.cwiseAbs2();

  Eigen::FullPivLU<RMatrix> lu(cert.system);
  cert.det_abs = std::abs(lu.determinant());
  cert.solution = lu.solve(cert.rhs);
  cert.residual = (cert.system * cert.solution - cert.rhs).norm();

  const double det_tol = det_tol_scale * static_cast<double>(n);
  cert.valid = cert.det_abs > det_tol && cert.residual < cert_tol &&
               cert.solution.minCoeff() > 0.0;
  return cert;
}

CMatrix normalize_witness(const CMatrix& columns, const RVector& X) {
  if (X.size() != columns.cols())
    throw DimensionMismatch("normalize_witness: coefficient count mismatch");
  if (X.minCoeff() <= 0.0)
    throw NonpositiveCoefficient("normalize_witness: all coefficients must be positive");
  CMatrix scaled = columns * X.cwiseSqrt().asDiagonal();
  return scaled / scaled.norm();
}

}  // namespace minherm
