#pragma once

#include "minherm/core.hpp"

namespace minherm {

/// Replaces a spanning system by mutually orthogonal vectors with the same
/// moment: if v = u s x* is the SVD, the columns s_k u^k (over singular
/// values above rank_rel_tol * s_max) span the same subspace and satisfy
/// hadamard_square(output) == hadamard_square(v).
CMatrix orthogonalize_same_moment(const CMatrix& v,
                                  double rank_rel_tol = kSvdRankRelTol);

/// Square linear system M X = w o conj(w) with M(k,i) = |v^i_k|^2, columns
/// indexed by the candidate vectors v^i in V. A valid certificate witnesses
/// the support condition: the scaled vectors sqrt(X_i) v^i have the same
/// moment as w.
struct SupportCertificate {
  RMatrix system;    // n x n, columns v^i o conj(v^i)
  RVector rhs;       // w o conj(w)
  RVector solution;  // X
  double residual = 0.0;   // ||M X - rhs||_2
  double det_abs = 0.0;    // |det M|
  bool valid = false;      // det above threshold, small residual, X > 0
};

/// Builds and solves the certificate system. Never throws on singular or
/// sign-failing systems; those come back with valid == false so perturbation
/// campaigns can count failures cheaply. Requires exactly n columns.
SupportCertificate support_certificate(const CMatrix& columns, const CVector& w,
                                       double det_tol_scale = kDetTolScale,
                                       double cert_tol = kCertTol);

/// Scales the certificate columns to sqrt(X_i) v^i and normalizes the whole
/// system to unit Frobenius norm. All X_i must be strictly positive.
CMatrix normalize_witness(const CMatrix& columns, const RVector& X);

}  // namespace minherm
