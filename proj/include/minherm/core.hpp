#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace minherm {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

// A moment is the real diagonal of v v*, i.e. the vector of squared row norms.
using MomentVector = RVector;

// Default tolerances. Every operation that needs one takes it as a defaulted
// parameter, so callers can tighten or relax explicitly.
inline constexpr double kOrthoTol = 1e-10;
inline constexpr double kSphereTol = 1e-10;
inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kMomentTol = 1e-13;
inline constexpr double kSvdRankRelTol = 1e-11;  // relative to largest singular value
inline constexpr double kDetTolScale = 1e-10;    // det threshold is kDetTolScale * n
inline constexpr double kCertTol = 1e-9;
inline constexpr double kSupportTol = 1e-8;      // adequacy below this certifies a support

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};
class NotOrthonormal : public Error {
 public:
  using Error::Error;
};
class RangesNotOrthogonal : public Error {
 public:
  using Error::Error;
};
class ZeroInput : public Error {
 public:
  using Error::Error;
};
class NonpositiveCoefficient : public Error {
 public:
  using Error::Error;
};
class NotASupport : public Error {
 public:
  using Error::Error;
};
class NotCritical : public Error {
 public:
  using Error::Error;
};
class EmptyComposition : public Error {
 public:
  using Error::Error;
};

/// Real inner product Re tr(A B*) on matrices; for hermitian arguments this is
/// the trace inner product tr(AB).
inline double hermitian_inner(const CMatrix& A, const CMatrix& B) {
  return (A.array() * B.array().conjugate()).sum().real();
}

inline CMatrix hermitize(const CMatrix& M) { return 0.5 * (M + M.adjoint()); }

inline double max_abs(const CMatrix& M) {
  return M.size() == 0 ? 0.0 : M.cwiseAbs().maxCoeff();
}

inline bool entries_finite(const CMatrix& M) { return M.allFinite(); }

/// Real diagonal of V H V* for hermitian H (the diagonal is real up to
/// rounding; the imaginary part is dropped).
RVector diag_conj(const CMatrix& V, const CMatrix& H);

/// A pair of isometries V: C^r -> C^n and W: C^s -> C^n with orthogonal
/// ranges. Construct through validate_pair; the members are not mutated after
/// construction, so instances can be shared freely across threads.
struct OrthoPair {
  CMatrix V;  // n x r, orthonormal columns
  CMatrix W;  // n x s, orthonormal columns, range orthogonal to V's

  Eigen::Index n() const { return V.rows(); }
  Eigen::Index r() const { return V.cols(); }
  Eigen::Index s() const { return W.cols(); }

  CMatrix projector_v() const { return V * V.adjoint(); }
  CMatrix projector_w() const { return W * W.adjoint(); }
};

/// Validates that Vmap and Wmap are (nearly) isometries with orthogonal
/// ranges and returns the pair after a phase-preserving QR cleanup. Inputs
/// whose columns are not orthonormal within ortho_tol are rejected, not
/// repaired: callers that start from a spanning set must orthogonalize first.
OrthoPair validate_pair(const CMatrix& Vmap, const CMatrix& Wmap,
                        double ortho_tol = kOrthoTol);

/// Moment of the system of columns of v: values[i] = sum_j |v(i,j)|^2,
/// exactly the diagonal of v v*.
MomentVector hadamard_square(const CMatrix& v);

}  // namespace minherm
